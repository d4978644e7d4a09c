#pragma once

// Inner-loop kernels behind the grid operators and the solver.
//
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at runtime. Map-style
// kernels produce bit-identical results across backends (no FMA, same
// per-element expression order); reductions fix their own summation order
// per backend, so a given backend is bit-reproducible run to run.
//
// Backend selection: auto-detected, overridable with set_isa() or the
// MA_PLATE_KERNELS environment variable (scalar|avx2|neon).

#include <cstddef>

namespace maplate::kernels {

enum class Isa { scalar, avx2, neon };

struct Ops {
    const char* name;

    // dense vector primitives (quasi-Newton inner loop)
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scal)(double a, double* x, std::size_t n);

    // out[k] = c * (v[k-s] - 2 v[k] + v[k+s]), k = 0..n-1 over a contiguous run
    void (*second_diff)(const double* v, std::ptrdiff_t s, double c,
                        double* out, std::size_t n);

    // out[k] = c * (v[k+sx+sy] - v[k+sx-sy] - v[k-sx+sy] + v[k-sx-sy])
    void (*cross_diff)(const double* v, std::ptrdiff_t sx, std::ptrdiff_t sy,
                       double c, double* out, std::size_t n);

    // pointwise determinant and cofactor of [[a11,a12],[a12,a22]]
    void (*det_cof)(const double* a11, const double* a12, const double* a22,
                    double* det, double* c11, double* c12, double* c22,
                    std::size_t n);

    // Fused augmented-Lagrangian node terms. Per element:
    //   det = a11*a22 - a12^2,  g = det - f
    //   equality:  t = lam + mu*g,            extra = lam*g + mu/2 g^2
    //   one-sided: p = max(0, lam - mu*g), t = -p, extra = (p^2 - lam^2)/(2 mu)
    //   c11 = w*(2 a11 + t*a22); c22 = w*(2 a22 + t*a11); c12 = w*(4 - 2 t)*a12
    // Returns sum of w*(a11^2 + 2 a12^2 + a22^2 + extra).
    double (*penalty_terms)(const double* w, const double* a11,
                            const double* a12, const double* a22,
                            const double* f, const double* lam, double mu,
                            int one_sided, double* c11, double* c12,
                            double* c22, std::size_t n);
};

const Ops& scalar_ops();

bool isa_available(Isa isa);
Isa detected_isa();

// Active backend. First call honors MA_PLATE_KERNELS if set.
const Ops& active();
Isa active_isa();
void set_isa(Isa isa);  // throws std::invalid_argument when unavailable

}  // namespace maplate::kernels
