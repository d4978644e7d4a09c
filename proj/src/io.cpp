#include "maplate/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace maplate {

namespace {

const char* kind_name(DomainKind k) {
    return k == DomainKind::unit_square ? "square" : "disk";
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_or_throw(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

GridPtr read_header(std::FILE* f, const std::string& path) {
    char kind[32] = {0};
    int n = 0;
    if (std::fscanf(f, "# grid=%31s n=%d\n", kind, &n) != 2)
        throw std::runtime_error(path + ": missing field header");
    DomainKind k;
    if (std::strcmp(kind, "square") == 0)
        k = DomainKind::unit_square;
    else if (std::strcmp(kind, "disk") == 0)
        k = DomainKind::unit_disk;
    else
        throw std::runtime_error(path + ": unknown grid kind " + kind);
    return Grid2D::make(k, n);
}

}  // namespace

void write_csv(const std::string& path, const ScalarField& f) {
    auto fp = open_or_throw(path, "w");
    const Grid2D& g = f.grid();
    std::fprintf(fp.get(), "# grid=%s n=%d\n", kind_name(g.kind()), g.n());
    for (std::size_t q : g.nodes())
        std::fprintf(fp.get(), "%d,%d,%.17g,%.17g,%.17g\n", g.i_of(q), g.j_of(q),
                     g.x1(g.i_of(q)), g.x2(g.j_of(q)), f[q]);
}

void write_csv(const std::string& path, const SymMatrixField& f) {
    auto fp = open_or_throw(path, "w");
    const Grid2D& g = f.grid();
    std::fprintf(fp.get(), "# grid=%s n=%d\n", kind_name(g.kind()), g.n());
    for (std::size_t q : g.nodes())
        std::fprintf(fp.get(), "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                     g.i_of(q), g.j_of(q), g.x1(g.i_of(q)), g.x2(g.j_of(q)),
                     std::sqrt(f.frob2(q)), f.a11()[q], f.a12()[q], f.a22()[q]);
}

ScalarField read_scalar_csv(const std::string& path) {
    auto fp = open_or_throw(path, "r");
    GridPtr g = read_header(fp.get(), path);
    ScalarField out(g);
    int i, j;
    double x, y, v;
    while (std::fscanf(fp.get(), "%d,%d,%lf,%lf,%lf\n", &i, &j, &x, &y, &v) == 5)
        out[g->index(i, j)] = v;
    return out;
}

SymMatrixField read_sym_csv(const std::string& path) {
    auto fp = open_or_throw(path, "r");
    GridPtr g = read_header(fp.get(), path);
    SymMatrixField out(g);
    int i, j;
    double x, y, mag, a, b, c;
    while (std::fscanf(fp.get(), "%d,%d,%lf,%lf,%lf,%lf,%lf,%lf\n", &i, &j, &x, &y,
                       &mag, &a, &b, &c) == 8) {
        const std::size_t q = g->index(i, j);
        out.a11()[q] = a;
        out.a12()[q] = b;
        out.a22()[q] = c;
    }
    return out;
}

}  // namespace maplate
