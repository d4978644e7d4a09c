#include "maplate/fd_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "maplate/kernels.hpp"

namespace maplate {

namespace {

double eval_1d(const Stencil1D& s, const double* v, std::size_t q, std::ptrdiff_t step) {
    double acc = 0.0;
    for (int k = 0; k < s.count; ++k) acc += s.coef[k] * v[(std::ptrdiff_t)q + step * s.off[k]];
    return acc;
}

double eval_cross(const Stencil1D& sx, const Stencil1D& sy, const double* v,
                  std::size_t q, std::ptrdiff_t ex, std::ptrdiff_t ey) {
    double acc = 0.0;
    for (int a = 0; a < sx.count; ++a)
        for (int b = 0; b < sy.count; ++b)
            acc += sx.coef[a] * sy.coef[b] *
                   v[(std::ptrdiff_t)q + ex * sx.off[a] + ey * sy.off[b]];
    return acc;
}

void dx_into(const Grid2D& g, const double* v, double* out) {
    for (std::size_t q : g.nodes()) out[q] = eval_1d(g.sx(q), v, q, g.step_x());
}

void dy_into(const Grid2D& g, const double* v, double* out) {
    for (std::size_t q : g.nodes()) out[q] = eval_1d(g.sy(q), v, q, g.step_y());
}

void d2x_into(const Grid2D& g, const double* v, double* out) {
    const auto& ops = kernels::active();
    const double c = 1.0 / (g.spacing() * g.spacing());
    for (const auto& r : g.centered_runs())
        ops.second_diff(v + r.begin, g.step_x(), c, out + r.begin, r.len);
    for (std::size_t q : g.nodes())
        if (!g.fully_centered(q)) out[q] = eval_1d(g.sxx(q), v, q, g.step_x());
}

void d2y_into(const Grid2D& g, const double* v, double* out) {
    const auto& ops = kernels::active();
    const double c = 1.0 / (g.spacing() * g.spacing());
    for (const auto& r : g.centered_runs())
        ops.second_diff(v + r.begin, g.step_y(), c, out + r.begin, r.len);
    for (std::size_t q : g.nodes())
        if (!g.fully_centered(q)) out[q] = eval_1d(g.syy(q), v, q, g.step_y());
}

void dxy_into(const Grid2D& g, const double* v, double* out) {
    const auto& ops = kernels::active();
    const double c = 1.0 / (4.0 * g.spacing() * g.spacing());
    for (const auto& r : g.centered_runs())
        ops.cross_diff(v + r.begin, g.step_x(), g.step_y(), c, out + r.begin, r.len);
    for (std::size_t q : g.nodes())
        if (!g.fully_centered(q))
            out[q] = eval_cross(g.cx(q), g.cy(q), v, q, g.step_x(), g.step_y());
}

}  // namespace

ScalarField dx(const ScalarField& v) {
    ScalarField out(v.grid_ptr());
    dx_into(v.grid(), v.data(), out.data());
    return out;
}

ScalarField dy(const ScalarField& v) {
    ScalarField out(v.grid_ptr());
    dy_into(v.grid(), v.data(), out.data());
    return out;
}

std::array<ScalarField, 2> gradient(const ScalarField& v) { return {dx(v), dy(v)}; }

SymMatrixField hessian(const ScalarField& v) {
    SymMatrixField H(v.grid_ptr());
    d2x_into(v.grid(), v.data(), H.a11().data());
    dxy_into(v.grid(), v.data(), H.a12().data());
    d2y_into(v.grid(), v.data(), H.a22().data());
    return H;
}

ScalarField laplacian(const ScalarField& v) {
    const Grid2D& g = v.grid();
    ScalarField out(v.grid_ptr());
    std::vector<double> tmp(g.num_nodes(), 0.0);
    d2x_into(g, v.data(), out.data());
    d2y_into(g, v.data(), tmp.data());
    for (std::size_t q : g.nodes()) out[q] += tmp[q];
    return out;
}

ScalarField bilaplacian(const ScalarField& v) { return laplacian(laplacian(v)); }

ScalarField det2(const SymMatrixField& F) {
    ScalarField out(F.grid_ptr());
    const std::size_t N = F.grid().num_nodes();
    std::vector<double> c11(N), c12(N), c22(N);
    kernels::active().det_cof(F.a11().data(), F.a12().data(), F.a22().data(),
                              out.data(), c11.data(), c12.data(), c22.data(), N);
    return out;
}

SymMatrixField cof2(const SymMatrixField& F) {
    SymMatrixField out(F.grid_ptr());
    const std::size_t N = F.grid().num_nodes();
    std::vector<double> det(N);
    kernels::active().det_cof(F.a11().data(), F.a12().data(), F.a22().data(),
                              det.data(), out.a11().data(), out.a12().data(),
                              out.a22().data(), N);
    return out;
}

ScalarField curlT_curl(const SymMatrixField& F) {
    const Grid2D& g = F.grid();
    ScalarField out(F.grid_ptr());
    std::vector<double> t1(g.num_nodes(), 0.0), t2(g.num_nodes(), 0.0);
    d2x_into(g, F.a22().data(), out.data());
    dxy_into(g, F.a12().data(), t1.data());
    d2y_into(g, F.a11().data(), t2.data());
    for (std::size_t q : g.nodes()) out[q] += -2.0 * t1[q] + t2[q];
    return out;
}

std::array<ScalarField, 2> row_curl(const SymMatrixField& F) {
    const Grid2D& g = F.grid();
    std::array<ScalarField, 2> out{ScalarField(F.grid_ptr()), ScalarField(F.grid_ptr())};
    std::vector<double> t(g.num_nodes(), 0.0);
    dx_into(g, F.a12().data(), out[0].data());
    dy_into(g, F.a11().data(), t.data());
    for (std::size_t q : g.nodes()) out[0][q] -= t[q];
    dx_into(g, F.a22().data(), out[1].data());
    dy_into(g, F.a12().data(), t.data());
    for (std::size_t q : g.nodes()) out[1][q] -= t[q];
    return out;
}

SymMatrixField outer_grad(const ScalarField& v, double scale) {
    const auto grad = gradient(v);
    SymMatrixField out(v.grid_ptr());
    for (std::size_t q : v.grid().nodes()) {
        out.a11()[q] = scale * grad[0][q] * grad[0][q];
        out.a12()[q] = scale * grad[0][q] * grad[1][q];
        out.a22()[q] = scale * grad[1][q] * grad[1][q];
    }
    return out;
}

double integrate(const ScalarField& q) {
    const Grid2D& g = q.grid();
    return kernels::active().dot(q.data(), g.quad_weights().data(), g.num_nodes());
}

double integrate_frob2(const SymMatrixField& F) {
    const Grid2D& g = F.grid();
    double acc = 0.0;
    const auto& w = g.quad_weights();
    for (std::size_t q : g.nodes()) acc += w[q] * F.frob2(q);
    return acc;
}

MetricFields analyze_metric(const SymMatrixField& P) {
    const Grid2D& g = P.grid();
    const std::size_t N = g.num_nodes();
    MetricFields m;
    m.grid = P.grid_ptr();
    m.kappa = ScalarField(P.grid_ptr());
    m.det = ScalarField(P.grid_ptr());
    m.inv = SymMatrixField(P.grid_ptr());
    for (auto& a : m.gamma) a.assign(N, 0.0);

    const double* E = P.a11().data();
    const double* F = P.a12().data();
    const double* G = P.a22().data();

    std::vector<double> Eu(N, 0.0), Ev(N, 0.0), Fu(N, 0.0), Fv(N, 0.0), Gu(N, 0.0),
        Gv(N, 0.0), Evv(N, 0.0), Fuv(N, 0.0), Guu(N, 0.0);
    dx_into(g, E, Eu.data());
    dy_into(g, E, Ev.data());
    dx_into(g, F, Fu.data());
    dy_into(g, F, Fv.data());
    dx_into(g, G, Gu.data());
    dy_into(g, G, Gv.data());
    d2y_into(g, E, Evv.data());
    dxy_into(g, F, Fuv.data());
    d2x_into(g, G, Guu.data());

    for (std::size_t q : g.nodes()) {
        const double d = E[q] * G[q] - F[q] * F[q];
        if (!(E[q] > 0.0) || !(d > 0.0))
            throw std::domain_error(
                "metric not positive definite at node (" + std::to_string(g.i_of(q)) +
                "," + std::to_string(g.j_of(q)) + ")");
        m.det[q] = d;
        m.inv.a11()[q] = G[q] / d;
        m.inv.a12()[q] = -F[q] / d;
        m.inv.a22()[q] = E[q] / d;

        // Brioschi formula
        const double m1_00 = -0.5 * Evv[q] + Fuv[q] - 0.5 * Guu[q];
        const double det1 = m1_00 * (E[q] * G[q] - F[q] * F[q]) -
                            0.5 * Eu[q] * ((Fv[q] - 0.5 * Gu[q]) * G[q] - F[q] * 0.5 * Gv[q]) +
                            (Fu[q] - 0.5 * Ev[q]) *
                                ((Fv[q] - 0.5 * Gu[q]) * F[q] - E[q] * 0.5 * Gv[q]);
        const double det2v = -(0.5 * Ev[q]) * (0.5 * Ev[q] * G[q] - 0.5 * Gu[q] * F[q]) +
                             0.5 * Gu[q] * (0.5 * Ev[q] * F[q] - 0.5 * Gu[q] * E[q]);
        m.kappa[q] = (det1 - det2v) / (d * d);

        // Christoffel symbols of P
        const double i11 = m.inv.a11()[q], i12 = m.inv.a12()[q], i22 = m.inv.a22()[q];
        const double a11 = Eu[q];                    // d1 P11
        const double a12 = 2.0 * Fu[q] - Ev[q];      // 2 d1 P12 - d2 P11
        const double b11 = Ev[q];                    // d2 P11
        const double b12 = Gu[q];                    // d1 P22
        const double c11 = 2.0 * Fv[q] - Gu[q];      // 2 d2 P12 - d1 P22
        const double c12 = Gv[q];                    // d2 P22
        m.gamma[0][q] = 0.5 * (i11 * a11 + i12 * a12);  // G1_11
        m.gamma[1][q] = 0.5 * (i12 * a11 + i22 * a12);  // G2_11
        m.gamma[2][q] = 0.5 * (i11 * b11 + i12 * b12);  // G1_12
        m.gamma[3][q] = 0.5 * (i12 * b11 + i22 * b12);  // G2_12
        m.gamma[4][q] = 0.5 * (i11 * c11 + i12 * c12);  // G1_22
        m.gamma[5][q] = 0.5 * (i12 * c11 + i22 * c12);  // G2_22
    }
    return m;
}

ScalarField curvature_deficit(const MetricFields& m, const ScalarField& v1, double eps) {
    if (eps < 0.0) throw std::invalid_argument("curvature_deficit: eps must be >= 0");
    const Grid2D& g = *m.grid;
    const auto grad = gradient(v1);
    const auto H = hessian(v1);
    ScalarField out(v1.grid_ptr());
    const double e2 = eps * eps;
    for (std::size_t q : g.nodes()) {
        const double p = grad[0][q], r = grad[1][q];
        const double qf = m.inv.a11()[q] * p * p + 2.0 * m.inv.a12()[q] * p * r +
                          m.inv.a22()[q] * r * r;
        const double M11 = H.a11()[q] - (m.gamma[0][q] * p + m.gamma[1][q] * r);
        const double M12 = H.a12()[q] - (m.gamma[2][q] * p + m.gamma[3][q] * r);
        const double M22 = H.a22()[q] - (m.gamma[4][q] * p + m.gamma[5][q] * r);
        const double D = M11 * M22 - M12 * M12;
        const double s = 1.0 - e2 * qf;
        const double s2 = s * s;
        out[q] = m.kappa[q] / s2 - e2 * D / (s2 * s2 * m.det[q]);
    }
    return out;
}

ScalarField gauss_curvature_metric(const SymMatrixField& P, const ScalarField& v1,
                                   double eps) {
    return curvature_deficit(analyze_metric(P), v1, eps);
}

}  // namespace maplate
