#include "maplate/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace maplate {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool inside_disk(double x, double y) { return x * x + y * y < 1.0; }

}  // namespace

std::shared_ptr<const Grid2D> Grid2D::make(DomainKind kind, int n) {
    if (n < 9) throw std::invalid_argument("Grid2D: need n >= 9 nodes per axis");
    auto g = std::shared_ptr<Grid2D>(new Grid2D());
    g->kind_ = kind;
    g->n_ = n;
    if (kind == DomainKind::unit_square) {
        g->origin_ = 0.0;
        g->h_ = 1.0 / (n - 1);
        g->area_ = 1.0;
    } else {
        g->origin_ = -1.0;
        g->h_ = 2.0 / (n - 1);
        g->area_ = kPi;
    }
    g->build_mask();
    g->build_depth();
    g->build_weights();
    g->build_stencils();
    g->build_runs();
    g->build_boundary_ring();

    const double cc = (kind == DomainKind::unit_square) ? 0.5 : 0.0;
    const int ic = (int)std::lround((cc - g->origin_) / g->h_);
    g->center_ = g->index(ic, ic);
    return g;
}

void Grid2D::build_mask() {
    mask_.assign(num_nodes(), NodeClass::interior);
    if (kind_ == DomainKind::unit_square) {
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i)
                if (i == 0 || j == 0 || i == n_ - 1 || j == n_ - 1)
                    mask_[index(i, j)] = NodeClass::boundary;
    } else {
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i)
                if (!inside_disk(x1(i), x2(j))) mask_[index(i, j)] = NodeClass::exterior;
        // boundary = non-exterior nodes touching an exterior 4-neighbor
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i) {
                const std::size_t q = index(i, j);
                if (mask_[q] == NodeClass::exterior) continue;
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ii = i + di[k], jj = j + dj[k];
                    if (ii < 0 || jj < 0 || ii >= n_ || jj >= n_ ||
                        mask_[index(ii, jj)] == NodeClass::exterior) {
                        mask_[q] = NodeClass::boundary;
                        break;
                    }
                }
            }
    }
    nodes_.clear();
    for (std::size_t q = 0; q < num_nodes(); ++q)
        if (mask_[q] != NodeClass::exterior) nodes_.push_back(q);
}

void Grid2D::build_depth() {
    depth_.assign(num_nodes(), -1);
    std::deque<std::size_t> queue;
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            const std::size_t q = index(i, j);
            if (mask_[q] == NodeClass::exterior) {
                depth_[q] = 0;
                queue.push_back(q);
            } else if (i == 0 || j == 0 || i == n_ - 1 || j == n_ - 1) {
                depth_[q] = 1;  // array edge counts as adjacent outside
                queue.push_back(q);
            }
        }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        const int i = i_of(q), j = j_of(q);
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int ii = i + di[k], jj = j + dj[k];
            if (ii < 0 || jj < 0 || ii >= n_ || jj >= n_) continue;
            const std::size_t p = index(ii, jj);
            if (depth_[p] < 0) {
                depth_[p] = (std::int16_t)(depth_[q] + 1);
                queue.push_back(p);
            }
        }
    }
}

void Grid2D::build_weights() {
    qw_.assign(num_nodes(), 0.0);
    const double cell = h_ * h_;
    for (int j = 0; j + 1 < n_; ++j)
        for (int i = 0; i + 1 < n_; ++i) {
            const std::size_t c[4] = {index(i, j), index(i + 1, j), index(i, j + 1),
                                      index(i + 1, j + 1)};
            int inside = 0;
            for (auto q : c)
                if (mask_[q] != NodeClass::exterior) ++inside;
            if (inside == 0) continue;
            double frac = 1.0;
            if (kind_ == DomainKind::unit_disk && inside < 4) {
                // cut cell: estimate the covered fraction by sub-node counting
                int cnt = 0;
                for (int b = 0; b < 4; ++b)
                    for (int a = 0; a < 4; ++a)
                        if (inside_disk(x1(i) + (a + 0.5) * h_ / 4.0,
                                        x2(j) + (b + 0.5) * h_ / 4.0))
                            ++cnt;
                frac = cnt / 16.0;
            }
            const double share = cell * frac / inside;
            for (auto q : c)
                if (mask_[q] != NodeClass::exterior) qw_[q] += share;
        }
}

namespace {

struct AxisAvail {
    // ok[k+3] = node at offset k along the axis exists and is non-exterior
    std::array<bool, 7> ok{};
    bool at(int k) const { return ok[k + 3]; }
};

Stencil1D first_deriv(const AxisAvail& a, double h) {
    Stencil1D s;
    auto set = [&](std::initializer_list<int> off, std::initializer_list<double> c) {
        s.count = (int)off.size();
        int k = 0;
        for (int o : off) s.off[k++] = (std::int8_t)o;
        k = 0;
        for (double v : c) s.coef[k++] = v;
    };
    if (a.at(-1) && a.at(1))
        set({-1, 1}, {-0.5 / h, 0.5 / h});
    else if (a.at(1) && a.at(2))
        set({0, 1, 2}, {-1.5 / h, 2.0 / h, -0.5 / h});
    else if (a.at(-1) && a.at(-2))
        set({0, -1, -2}, {1.5 / h, -2.0 / h, 0.5 / h});
    else if (a.at(1))
        set({0, 1}, {-1.0 / h, 1.0 / h});
    else if (a.at(-1))
        set({0, -1}, {1.0 / h, -1.0 / h});
    return s;
}

Stencil1D second_deriv(const AxisAvail& a, double h) {
    Stencil1D s;
    const double ih2 = 1.0 / (h * h);
    auto set = [&](std::initializer_list<int> off, std::initializer_list<double> c) {
        s.count = (int)off.size();
        int k = 0;
        for (int o : off) s.off[k++] = (std::int8_t)o;
        k = 0;
        for (double v : c) s.coef[k++] = v * ih2;
    };
    if (a.at(-1) && a.at(1))
        set({-1, 0, 1}, {1.0, -2.0, 1.0});
    else if (a.at(1) && a.at(2) && a.at(3))
        set({0, 1, 2, 3}, {2.0, -5.0, 4.0, -1.0});
    else if (a.at(-1) && a.at(-2) && a.at(-3))
        set({0, -1, -2, -3}, {2.0, -5.0, 4.0, -1.0});
    else if (a.at(1) && a.at(2))
        set({0, 1, 2}, {1.0, -2.0, 1.0});
    else if (a.at(-1) && a.at(-2))
        set({0, -1, -2}, {1.0, -2.0, 1.0});
    return s;
}

// ranked candidates for one factor of the mixed derivative
std::vector<Stencil1D> cross_candidates(const AxisAvail& a, double h) {
    std::vector<Stencil1D> out;
    auto push = [&](std::initializer_list<int> off, std::initializer_list<double> c) {
        Stencil1D s;
        s.count = (int)off.size();
        int k = 0;
        for (int o : off) s.off[k++] = (std::int8_t)o;
        k = 0;
        for (double v : c) s.coef[k++] = v;
        out.push_back(s);
    };
    if (a.at(-1) && a.at(1)) push({-1, 1}, {-0.5 / h, 0.5 / h});
    if (a.at(1) && a.at(2)) push({0, 1, 2}, {-1.5 / h, 2.0 / h, -0.5 / h});
    if (a.at(-1) && a.at(-2)) push({0, -1, -2}, {1.5 / h, -2.0 / h, 0.5 / h});
    if (a.at(1)) push({0, 1}, {-1.0 / h, 1.0 / h});
    if (a.at(-1)) push({0, -1}, {1.0 / h, -1.0 / h});
    return out;
}

}  // namespace

void Grid2D::build_stencils() {
    const std::size_t N = num_nodes();
    sx_.assign(N, {});
    sy_.assign(N, {});
    sxx_.assign(N, {});
    syy_.assign(N, {});
    cx_.assign(N, {});
    cy_.assign(N, {});
    centered_.assign(N, 0);

    auto usable = [&](int i, int j) {
        return i >= 0 && j >= 0 && i < n_ && j < n_ &&
               mask_[index(i, j)] != NodeClass::exterior;
    };

    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            const std::size_t q = index(i, j);
            if (mask_[q] == NodeClass::exterior) continue;
            AxisAvail ax, ay;
            for (int k = -3; k <= 3; ++k) {
                ax.ok[k + 3] = usable(i + k, j);
                ay.ok[k + 3] = usable(i, j + k);
            }
            sx_[q] = first_deriv(ax, h_);
            sy_[q] = first_deriv(ay, h_);
            sxx_[q] = second_deriv(ax, h_);
            syy_[q] = second_deriv(ay, h_);

            const auto cxs = cross_candidates(ax, h_);
            const auto cys = cross_candidates(ay, h_);
            bool found = false;
            for (std::size_t rank = 0; rank < cxs.size() + cys.size() && !found; ++rank)
                for (std::size_t a = 0; a <= rank && a < cxs.size() && !found; ++a) {
                    const std::size_t b = rank - a;
                    if (b >= cys.size()) continue;
                    bool valid = true;
                    for (int u = 0; u < cxs[a].count && valid; ++u)
                        for (int v = 0; v < cys[b].count && valid; ++v)
                            valid = usable(i + cxs[a].off[u], j + cys[b].off[v]);
                    if (valid) {
                        cx_[q] = cxs[a];
                        cy_[q] = cys[b];
                        found = true;
                    }
                }

            const bool c2 = sx_[q].count == 2 && sy_[q].count == 2 &&
                            sxx_[q].count == 3 && sxx_[q].off[0] == -1 &&
                            syy_[q].count == 3 && syy_[q].off[0] == -1 &&
                            cx_[q].count == 2 && cx_[q].off[0] == -1 &&
                            cy_[q].count == 2 && cy_[q].off[0] == -1;
            centered_[q] = c2 ? 1 : 0;
        }
}

void Grid2D::build_runs() {
    runs_.clear();
    for (int j = 0; j < n_; ++j) {
        int i = 0;
        while (i < n_) {
            if (!centered_[index(i, j)]) {
                ++i;
                continue;
            }
            int i0 = i;
            while (i < n_ && centered_[index(i, j)]) ++i;
            runs_.push_back({index(i0, j), (std::size_t)(i - i0)});
        }
    }
}

void Grid2D::build_boundary_ring() {
    bdry_.clear();
    if (kind_ == DomainKind::unit_disk) {
        for (std::size_t q : nodes_)
            if (mask_[q] == NodeClass::boundary) bdry_.push_back(q);
        std::sort(bdry_.begin(), bdry_.end(), [&](std::size_t a, std::size_t b) {
            return std::atan2(x2(j_of(a)), x1(i_of(a))) <
                   std::atan2(x2(j_of(b)), x1(i_of(b)));
        });
    } else {
        for (int i = 0; i < n_ - 1; ++i) bdry_.push_back(index(i, 0));
        for (int j = 0; j < n_ - 1; ++j) bdry_.push_back(index(n_ - 1, j));
        for (int i = n_ - 1; i > 0; --i) bdry_.push_back(index(i, n_ - 1));
        for (int j = n_ - 1; j > 0; --j) bdry_.push_back(index(0, j));
    }
}

std::array<double, 2> Grid2D::boundary_normal(std::size_t q) const {
    const int i = i_of(q), j = j_of(q);
    if (kind_ == DomainKind::unit_disk) {
        const double x = x1(i), y = x2(j);
        const double r = std::sqrt(x * x + y * y);
        return {x / r, y / r};
    }
    double nx = 0.0, ny = 0.0;
    if (i == 0) nx = -1.0;
    if (i == n_ - 1) nx = 1.0;
    if (j == 0) ny = -1.0;
    if (j == n_ - 1) ny = 1.0;
    const double len = std::sqrt(nx * nx + ny * ny);
    return len > 0 ? std::array<double, 2>{nx / len, ny / len}
                   : std::array<double, 2>{0.0, 0.0};
}

ScalarField::ScalarField(GridPtr g, const std::function<double(double, double)>& fn)
    : g_(std::move(g)), v_(g_->num_nodes(), 0.0) {
    for (std::size_t q : g_->nodes())
        v_[q] = fn(g_->x1(g_->i_of(q)), g_->x2(g_->j_of(q)));
}

double ScalarField::max_abs(int min_depth) const {
    double m = 0.0;
    for (std::size_t q : g_->nodes())
        if (g_->depth(q) >= min_depth) m = std::max(m, std::abs(v_[q]));
    return m;
}

}  // namespace maplate
