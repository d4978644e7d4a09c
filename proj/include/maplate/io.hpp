#pragma once

// Field CSV format: header line `# grid=<kind> n=<n>`, then one row per
// non-exterior node. Scalar fields: i,j,x1,x2,value. Tensor fields:
// i,j,x1,x2,value,a11,a12,a22 with value = Frobenius norm. Numbers are
// written in full shortest-round-trip precision, so a reload is exact.

#include <string>

#include "maplate/grid.hpp"

namespace maplate {

void write_csv(const std::string& path, const ScalarField& f);
void write_csv(const std::string& path, const SymMatrixField& f);

ScalarField read_scalar_csv(const std::string& path);
SymMatrixField read_sym_csv(const std::string& path);

}  // namespace maplate
