// NEON kernel variants (aarch64). Two-lane doubles; expression order matches
// the scalar reference, no fused multiply-add.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cstddef>

#include "maplate/kernels.hpp"

namespace maplate::kernels {
namespace {

double dot_n(const double* x, const double* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2)
        acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(x + k), vld1q_f64(y + k)));
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; k < n; ++k) s += x[k] * y[k];
    return s;
}

void axpy_n(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2)
        vst1q_f64(y + k, vaddq_f64(vld1q_f64(y + k), vmulq_f64(va, vld1q_f64(x + k))));
    for (; k < n; ++k) y[k] += a * x[k];
}

void scal_n(double a, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) vst1q_f64(x + k, vmulq_f64(va, vld1q_f64(x + k)));
    for (; k < n; ++k) x[k] *= a;
}

void second_diff_n(const double* v, std::ptrdiff_t s, double c, double* out,
                   std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2_t l = vld1q_f64(v + (std::ptrdiff_t)k - s);
        float64x2_t m = vld1q_f64(v + k);
        float64x2_t r = vld1q_f64(v + (std::ptrdiff_t)k + s);
        vst1q_f64(out + k, vmulq_f64(vc, vaddq_f64(vsubq_f64(l, vmulq_f64(two, m)), r)));
    }
    for (; k < n; ++k)
        out[k] = c * (v[(std::ptrdiff_t)k - s] - 2.0 * v[k] + v[(std::ptrdiff_t)k + s]);
}

void cross_diff_n(const double* v, std::ptrdiff_t sx, std::ptrdiff_t sy,
                  double c, double* out, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const std::ptrdiff_t q = (std::ptrdiff_t)k;
        float64x2_t pp = vld1q_f64(v + q + sx + sy);
        float64x2_t pm = vld1q_f64(v + q + sx - sy);
        float64x2_t mp = vld1q_f64(v + q - sx + sy);
        float64x2_t mm = vld1q_f64(v + q - sx - sy);
        vst1q_f64(out + k, vmulq_f64(vc, vaddq_f64(vsubq_f64(vsubq_f64(pp, pm), mp), mm)));
    }
    for (; k < n; ++k) {
        const std::ptrdiff_t q = (std::ptrdiff_t)k;
        out[k] = c * (v[q + sx + sy] - v[q + sx - sy] - v[q - sx + sy] + v[q - sx - sy]);
    }
}

void det_cof_n(const double* a11, const double* a12, const double* a22,
               double* det, double* c11, double* c12, double* c22,
               std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2_t x = vld1q_f64(a11 + k);
        float64x2_t y = vld1q_f64(a12 + k);
        float64x2_t z = vld1q_f64(a22 + k);
        vst1q_f64(det + k, vsubq_f64(vmulq_f64(x, z), vmulq_f64(y, y)));
        vst1q_f64(c11 + k, z);
        vst1q_f64(c12 + k, vnegq_f64(y));
        vst1q_f64(c22 + k, x);
    }
    for (; k < n; ++k) {
        det[k] = a11[k] * a22[k] - a12[k] * a12[k];
        c11[k] = a22[k];
        c12[k] = -a12[k];
        c22[k] = a11[k];
    }
}

double penalty_terms_n(const double* w, const double* a11, const double* a12,
                       const double* a22, const double* f, const double* lam,
                       double mu, int one_sided, double* c11, double* c12,
                       double* c22, std::size_t n) {
    const double inv2mu = 1.0 / (2.0 * mu);
    const float64x2_t vmu = vdupq_n_f64(mu);
    const float64x2_t vhalf_mu = vdupq_n_f64(0.5 * mu);
    const float64x2_t vinv2mu = vdupq_n_f64(inv2mu);
    const float64x2_t two = vdupq_n_f64(2.0);
    const float64x2_t four = vdupq_n_f64(4.0);
    const float64x2_t zero = vdupq_n_f64(0.0);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2_t x = vld1q_f64(a11 + k);
        float64x2_t y = vld1q_f64(a12 + k);
        float64x2_t z = vld1q_f64(a22 + k);
        float64x2_t vw = vld1q_f64(w + k);
        float64x2_t vl = vld1q_f64(lam + k);
        float64x2_t det = vsubq_f64(vmulq_f64(x, z), vmulq_f64(y, y));
        float64x2_t g = vsubq_f64(det, vld1q_f64(f + k));
        float64x2_t t, extra;
        if (one_sided) {
            float64x2_t p = vmaxq_f64(zero, vsubq_f64(vl, vmulq_f64(vmu, g)));
            t = vnegq_f64(p);
            extra = vmulq_f64(vsubq_f64(vmulq_f64(p, p), vmulq_f64(vl, vl)), vinv2mu);
        } else {
            t = vaddq_f64(vl, vmulq_f64(vmu, g));
            extra = vaddq_f64(vmulq_f64(vl, g), vmulq_f64(vhalf_mu, vmulq_f64(g, g)));
        }
        float64x2_t frob = vaddq_f64(
            vaddq_f64(vmulq_f64(x, x), vmulq_f64(two, vmulq_f64(y, y))), vmulq_f64(z, z));
        acc = vaddq_f64(acc, vmulq_f64(vw, vaddq_f64(frob, extra)));
        vst1q_f64(c11 + k, vmulq_f64(vw, vaddq_f64(vmulq_f64(two, x), vmulq_f64(t, z))));
        vst1q_f64(c22 + k, vmulq_f64(vw, vaddq_f64(vmulq_f64(two, z), vmulq_f64(t, x))));
        vst1q_f64(c12 + k, vmulq_f64(vw, vmulq_f64(vsubq_f64(four, vmulq_f64(two, t)), y)));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; k < n; ++k) {
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
        s += w[k] * (a11[k] * a11[k] + 2.0 * (a12[k] * a12[k]) + a22[k] * a22[k] + extra);
        c11[k] = w[k] * (2.0 * a11[k] + t * a22[k]);
        c22[k] = w[k] * (2.0 * a22[k] + t * a11[k]);
        c12[k] = w[k] * ((4.0 - 2.0 * t) * a12[k]);
    }
    return s;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops = {
        "neon",     dot_n,     axpy_n,    scal_n,
        second_diff_n, cross_diff_n, det_cof_n, penalty_terms_n,
    };
    return ops;
}

}  // namespace maplate::kernels

#endif  // aarch64
