#include "maplate/kernels.hpp"

#include <algorithm>

namespace maplate::kernels {
namespace {

double dot_s(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += x[k] * y[k];
    return acc;
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void scal_s(double a, double* x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) x[k] *= a;
}

void second_diff_s(const double* v, std::ptrdiff_t s, double c, double* out,
                   std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        out[k] = c * (v[(std::ptrdiff_t)k - s] - 2.0 * v[k] + v[(std::ptrdiff_t)k + s]);
}

void cross_diff_s(const double* v, std::ptrdiff_t sx, std::ptrdiff_t sy,
                  double c, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const std::ptrdiff_t q = (std::ptrdiff_t)k;
        out[k] = c * (v[q + sx + sy] - v[q + sx - sy] - v[q - sx + sy] + v[q - sx - sy]);
    }
}

void det_cof_s(const double* a11, const double* a12, const double* a22,
               double* det, double* c11, double* c12, double* c22,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        det[k] = a11[k] * a22[k] - a12[k] * a12[k];
        c11[k] = a22[k];
        c12[k] = -a12[k];
        c22[k] = a11[k];
    }
}

double penalty_terms_s(const double* w, const double* a11, const double* a12,
                       const double* a22, const double* f, const double* lam,
                       double mu, int one_sided, double* c11, double* c12,
                       double* c22, std::size_t n) {
    const double inv2mu = 1.0 / (2.0 * mu);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double det = a11[k] * a22[k] - a12[k] * a12[k];
        const double g = det - f[k];
        double t, extra;
        if (one_sided) {
            const double p = std::max(0.0, lam[k] - mu * g);
            t = -p;
            extra = (p * p - lam[k] * lam[k]) * inv2mu;
        } else {
            t = lam[k] + mu * g;
            extra = lam[k] * g + (0.5 * mu) * (g * g);
        }
        acc += w[k] * (a11[k] * a11[k] + 2.0 * (a12[k] * a12[k]) + a22[k] * a22[k] + extra);
        c11[k] = w[k] * (2.0 * a11[k] + t * a22[k]);
        c22[k] = w[k] * (2.0 * a22[k] + t * a11[k]);
        c12[k] = w[k] * ((4.0 - 2.0 * t) * a12[k]);
    }
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",   dot_s,     axpy_s,    scal_s,
        second_diff_s, cross_diff_s, det_cof_s, penalty_terms_s,
    };
    return ops;
}

}  // namespace maplate::kernels
