#include "maplate/quad1d.hpp"

#include <cmath>
#include <stdexcept>

namespace maplate::quad {

std::vector<double> cumulative(const std::vector<double>& f, double h) {
    const std::size_t m = f.size();
    if (m < 4) throw std::invalid_argument("cumulative: need at least 4 samples");
    std::vector<double> I(m, 0.0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        // cubic through 4 consecutive samples, integrated over one panel
        double inc;
        if (j == 0)
            inc = h * (3.0 / 8.0 * f[0] + 19.0 / 24.0 * f[1] - 5.0 / 24.0 * f[2] +
                       1.0 / 24.0 * f[3]);
        else if (j + 2 >= m)
            inc = h * (1.0 / 24.0 * f[m - 4] - 5.0 / 24.0 * f[m - 3] +
                       19.0 / 24.0 * f[m - 2] + 3.0 / 8.0 * f[m - 1]);
        else
            inc = h * (-1.0 / 24.0 * f[j - 1] + 13.0 / 24.0 * f[j] +
                       13.0 / 24.0 * f[j + 1] - 1.0 / 24.0 * f[j + 2]);
        I[j + 1] = I[j] + inc;
    }
    return I;
}

double simpson(const std::vector<double>& f, double h) {
    const std::size_t m = f.size();
    if (m < 3) throw std::invalid_argument("simpson: need at least 3 samples");
    double acc = 0.0;
    std::size_t j = 0;
    for (; j + 2 < m; j += 2) acc += h / 3.0 * (f[j] + 4.0 * f[j + 1] + f[j + 2]);
    if (j + 1 < m)  // even sample count: quadratic tail panel
        acc += h * (-1.0 / 12.0 * f[m - 3] + 2.0 / 3.0 * f[m - 2] + 5.0 / 12.0 * f[m - 1]);
    return acc;
}

namespace {

double adaptive_rec(const std::function<double(double)>& fn, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = fn(lm), frm = fn(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_rec(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_rec(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive(const std::function<double(double)>& fn, double a, double b,
                double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = fn(a), fb = fn(b), fm = fn(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_rec(fn, a, b, fa, fm, fb, whole, tol, max_depth);
}

double log_moment(int k, double a, double b) {
    auto F = [k](double r) {
        if (r <= 0.0) return 0.0;
        const double kp = k + 1.0;
        return std::pow(r, kp) * (1.0 - kp * std::log(r)) / (kp * kp);
    };
    return F(b) - F(a);
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-like initial guess
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace maplate::quad
