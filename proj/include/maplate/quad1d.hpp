#pragma once

// One-dimensional quadrature helpers: 4th-order cumulative integration on
// uniform samples, composite Simpson, adaptive Simpson for callbacks,
// exact moments of the -log kernel, and Gauss-Legendre rules.

#include <functional>
#include <vector>

namespace maplate::quad {

// I[k] = integral of the sampled function from x0 to x0 + k*h, 4th order
// (cubic panels). f.size() >= 4.
std::vector<double> cumulative(const std::vector<double>& f, double h);

double simpson(const std::vector<double>& f, double h);

double adaptive(const std::function<double(double)>& fn, double a, double b,
                double tol, int max_depth = 40);

// integral of r^k * (-log r) over [a,b], 0 <= a <= b <= 1, k >= 0
double log_moment(int k, double a, double b);

// n-point Gauss-Legendre rule on [-1,1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace maplate::quad
