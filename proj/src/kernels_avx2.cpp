// AVX2 kernel variants. Compiled with -mavx2 on x86-64 and dispatched at
// runtime only when the CPU reports AVX2. Multiplies and adds are kept in
// the same order as the scalar reference so map kernels match it bitwise;
// FMA is deliberately not used.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cstddef>

#include "maplate/kernels.hpp"

namespace maplate::kernels {
namespace {

inline double hsum4(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    // fixed lane order: (l0+h0) + (l1+h1)
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double dot_v(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
    double s = hsum4(acc);
    for (; k < n; ++k) s += x[k] * y[k];
    return s;
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + k),
                                  _mm256_mul_pd(va, _mm256_loadu_pd(x + k)));
        _mm256_storeu_pd(y + k, r);
    }
    for (; k < n; ++k) y[k] += a * x[k];
}

void scal_v(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        _mm256_storeu_pd(x + k, _mm256_mul_pd(va, _mm256_loadu_pd(x + k)));
    for (; k < n; ++k) x[k] *= a;
}

void second_diff_v(const double* v, std::ptrdiff_t s, double c, double* out,
                   std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d l = _mm256_loadu_pd(v + (std::ptrdiff_t)k - s);
        __m256d m = _mm256_loadu_pd(v + k);
        __m256d r = _mm256_loadu_pd(v + (std::ptrdiff_t)k + s);
        __m256d d = _mm256_add_pd(_mm256_sub_pd(l, _mm256_mul_pd(two, m)), r);
        _mm256_storeu_pd(out + k, _mm256_mul_pd(vc, d));
    }
    for (; k < n; ++k)
        out[k] = c * (v[(std::ptrdiff_t)k - s] - 2.0 * v[k] + v[(std::ptrdiff_t)k + s]);
}

void cross_diff_v(const double* v, std::ptrdiff_t sx, std::ptrdiff_t sy,
                  double c, double* out, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const std::ptrdiff_t q = (std::ptrdiff_t)k;
        __m256d pp = _mm256_loadu_pd(v + q + sx + sy);
        __m256d pm = _mm256_loadu_pd(v + q + sx - sy);
        __m256d mp = _mm256_loadu_pd(v + q - sx + sy);
        __m256d mm = _mm256_loadu_pd(v + q - sx - sy);
        __m256d d = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(pp, pm), mp), mm);
        _mm256_storeu_pd(out + k, _mm256_mul_pd(vc, d));
    }
    for (; k < n; ++k) {
        const std::ptrdiff_t q = (std::ptrdiff_t)k;
        out[k] = c * (v[q + sx + sy] - v[q + sx - sy] - v[q - sx + sy] + v[q - sx - sy]);
    }
}

void det_cof_v(const double* a11, const double* a12, const double* a22,
               double* det, double* c11, double* c12, double* c22,
               std::size_t n) {
    const __m256d neg = _mm256_set1_pd(-0.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d x = _mm256_loadu_pd(a11 + k);
        __m256d y = _mm256_loadu_pd(a12 + k);
        __m256d z = _mm256_loadu_pd(a22 + k);
        _mm256_storeu_pd(det + k, _mm256_sub_pd(_mm256_mul_pd(x, z), _mm256_mul_pd(y, y)));
        _mm256_storeu_pd(c11 + k, z);
        _mm256_storeu_pd(c12 + k, _mm256_xor_pd(y, neg));
        _mm256_storeu_pd(c22 + k, x);
    }
    for (; k < n; ++k) {
        det[k] = a11[k] * a22[k] - a12[k] * a12[k];
        c11[k] = a22[k];
        c12[k] = -a12[k];
        c22[k] = a11[k];
    }
}

double penalty_terms_v(const double* w, const double* a11, const double* a12,
                       const double* a22, const double* f, const double* lam,
                       double mu, int one_sided, double* c11, double* c12,
                       double* c22, std::size_t n) {
    const __m256d vmu = _mm256_set1_pd(mu);
    const __m256d vhalf_mu = _mm256_set1_pd(0.5 * mu);
    const __m256d vinv2mu = _mm256_set1_pd(1.0 / (2.0 * mu));
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d x = _mm256_loadu_pd(a11 + k);
        __m256d y = _mm256_loadu_pd(a12 + k);
        __m256d z = _mm256_loadu_pd(a22 + k);
        __m256d vw = _mm256_loadu_pd(w + k);
        __m256d vl = _mm256_loadu_pd(lam + k);
        __m256d det = _mm256_sub_pd(_mm256_mul_pd(x, z), _mm256_mul_pd(y, y));
        __m256d g = _mm256_sub_pd(det, _mm256_loadu_pd(f + k));
        __m256d t, extra;
        if (one_sided) {
            __m256d p = _mm256_max_pd(zero, _mm256_sub_pd(vl, _mm256_mul_pd(vmu, g)));
            t = _mm256_sub_pd(zero, p);
            extra = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(p, p), _mm256_mul_pd(vl, vl)),
                                  vinv2mu);
        } else {
            t = _mm256_add_pd(vl, _mm256_mul_pd(vmu, g));
            extra = _mm256_add_pd(_mm256_mul_pd(vl, g),
                                  _mm256_mul_pd(vhalf_mu, _mm256_mul_pd(g, g)));
        }
        __m256d frob = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(x, x),
                          _mm256_mul_pd(two, _mm256_mul_pd(y, y))),
            _mm256_mul_pd(z, z));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vw, _mm256_add_pd(frob, extra)));
        _mm256_storeu_pd(c11 + k,
                         _mm256_mul_pd(vw, _mm256_add_pd(_mm256_mul_pd(two, x), _mm256_mul_pd(t, z))));
        _mm256_storeu_pd(c22 + k,
                         _mm256_mul_pd(vw, _mm256_add_pd(_mm256_mul_pd(two, z), _mm256_mul_pd(t, x))));
        _mm256_storeu_pd(c12 + k,
                         _mm256_mul_pd(vw, _mm256_mul_pd(_mm256_sub_pd(four, _mm256_mul_pd(two, t)), y)));
    }
    double s = hsum4(acc);
    for (; k < n; ++k) {
        const double det = a11[k] * a22[k] - a12[k] * a12[k];
        const double g = det - f[k];
        double t, extra;
        if (one_sided) {
            const double p = std::max(0.0, lam[k] - mu * g);
            t = -p;
            extra = (p * p - lam[k] * lam[k]) * (1.0 / (2.0 * mu));
        } else {
            t = lam[k] + mu * g;
            extra = lam[k] * g + (0.5 * mu) * (g * g);
        }
        s += w[k] * (a11[k] * a11[k] + 2.0 * (a12[k] * a12[k]) + a22[k] * a22[k] + extra);
        c11[k] = w[k] * (2.0 * a11[k] + t * a22[k]);
        c22[k] = w[k] * (2.0 * a22[k] + t * a11[k]);
        c12[k] = w[k] * ((4.0 - 2.0 * t) * a12[k]);
    }
    return s;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",     dot_v,     axpy_v,    scal_v,
        second_diff_v, cross_diff_v, det_cof_v, penalty_terms_v,
    };
    return ops;
}

}  // namespace maplate::kernels

#endif  // x86-64
