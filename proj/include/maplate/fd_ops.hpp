#pragma once

// Finite-difference operators on masked grids: gradients, Hessians,
// curl^T curl, pointwise 2x2 determinant/cofactor, composed bilaplacian,
// masked quadrature, and the Gauss curvature of a sampled 2d metric.

#include <array>

#include "maplate/grid.hpp"

namespace maplate {

ScalarField dx(const ScalarField& v);
ScalarField dy(const ScalarField& v);
std::array<ScalarField, 2> gradient(const ScalarField& v);

SymMatrixField hessian(const ScalarField& v);
ScalarField laplacian(const ScalarField& v);

// Composed 5-point Laplacian applied twice; trust only nodes with
// depth >= 3 (two full cells of support).
ScalarField bilaplacian(const ScalarField& v);

ScalarField det2(const SymMatrixField& F);
SymMatrixField cof2(const SymMatrixField& F);

// curl^T curl F = d11 F22 - 2 d12 F12 + d22 F11
ScalarField curlT_curl(const SymMatrixField& F);

// curl of each row of the symmetric field: (d1 F12 - d2 F11, d1 F22 - d2 F12)
std::array<ScalarField, 2> row_curl(const SymMatrixField& F);

// scale * grad(v) (x) grad(v)
SymMatrixField outer_grad(const ScalarField& v, double scale);

double integrate(const ScalarField& q);

// Σ w |F|^2 with the off-diagonal counted twice.
double integrate_frob2(const SymMatrixField& F);

// Geometry of a sampled metric P (pointwise SPD): Gauss curvature by the
// Brioschi formula, determinant, inverse, and Christoffel symbols.
struct MetricFields {
    GridPtr grid;
    ScalarField kappa;
    ScalarField det;
    SymMatrixField inv;
    // Christoffel symbols: G1_11, G2_11, G1_12, G2_12, G1_22, G2_22
    std::array<std::vector<double>, 6> gamma;
};

MetricFields analyze_metric(const SymMatrixField& P);  // throws std::domain_error if P not SPD

// kappa(P - eps^2 grad(v1) (x) grad(v1)) via the rational curvature formula.
ScalarField curvature_deficit(const MetricFields& m, const ScalarField& v1, double eps);

ScalarField gauss_curvature_metric(const SymMatrixField& P, const ScalarField& v1,
                                   double eps);

}  // namespace maplate
