#pragma once

// Uniform Cartesian grids on the unit square [0,1]^2 or the unit disk
// {|x| < 1} (embedded in [-1,1]^2 with a node mask), nodal scalar and
// symmetric-2x2-tensor fields, and per-node finite-difference stencils.
//
// Stencils are centered 2nd order where the neighbors exist and one-sided
// 2nd order toward the domain otherwise; everything downstream (gradients,
// Hessians, adjoints) reads the same per-node tables, so discrete operators
// and their transposes agree exactly.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace maplate {

enum class DomainKind { unit_square, unit_disk };

enum class NodeClass : std::uint8_t { interior = 0, boundary = 1, exterior = 2 };

// One-dimensional differentiation stencil; offsets are steps along an axis.
struct Stencil1D {
    int count = 0;
    std::array<std::int8_t, 4> off{};
    std::array<double, 4> coef{};
};

// Contiguous row span of nodes whose x/y/cross stencils are all centered;
// the SIMD sweeps run over these, the remainder goes through the tables.
struct CenteredRun {
    std::size_t begin = 0;  // flat node index of first node
    std::size_t len = 0;
};

class Grid2D {
public:
    static std::shared_ptr<const Grid2D> make(DomainKind kind, int n);

    DomainKind kind() const { return kind_; }
    int n() const { return n_; }
    double spacing() const { return h_; }
    std::size_t num_nodes() const { return (std::size_t)n_ * n_; }

    double x1(int i) const { return origin_ + h_ * i; }
    double x2(int j) const { return origin_ + h_ * j; }
    std::size_t index(int i, int j) const { return (std::size_t)j * n_ + i; }
    int i_of(std::size_t q) const { return (int)(q % n_); }
    int j_of(std::size_t q) const { return (int)(q / n_); }

    NodeClass node_class(std::size_t q) const { return mask_[q]; }
    bool is_exterior(std::size_t q) const { return mask_[q] == NodeClass::exterior; }
    // Steps to the nearest exterior node or array edge (exterior itself = 0,
    // outermost usable ring = 1). Residual norms exclude depth < 3.
    int depth(std::size_t q) const { return depth_[q]; }

    const std::vector<double>& quad_weights() const { return qw_; }
    double domain_area() const { return area_; }

    const std::vector<std::size_t>& nodes() const { return nodes_; }  // non-exterior, row-major
    const std::vector<std::size_t>& boundary_ring() const { return bdry_; }  // ordered along the boundary
    // Unit outward normal at a boundary-ring node.
    std::array<double, 2> boundary_normal(std::size_t q) const;

    // Flat-index step between x/y neighbors.
    std::ptrdiff_t step_x() const { return 1; }
    std::ptrdiff_t step_y() const { return n_; }

    // Per-node stencil tables (empty stencil => derivative reported as 0).
    const Stencil1D& sx(std::size_t q) const { return sx_[q]; }
    const Stencil1D& sy(std::size_t q) const { return sy_[q]; }
    const Stencil1D& sxx(std::size_t q) const { return sxx_[q]; }
    const Stencil1D& syy(std::size_t q) const { return syy_[q]; }
    // Factor pair for the mixed derivative (tensor product, rectangle-validated).
    const Stencil1D& cx(std::size_t q) const { return cx_[q]; }
    const Stencil1D& cy(std::size_t q) const { return cy_[q]; }

    bool fully_centered(std::size_t q) const { return centered_[q] != 0; }
    const std::vector<CenteredRun>& centered_runs() const { return runs_; }

    std::size_t center_node() const { return center_; }

private:
    Grid2D() = default;
    void build_mask();
    void build_depth();
    void build_weights();
    void build_stencils();
    void build_runs();
    void build_boundary_ring();

    DomainKind kind_{};
    int n_ = 0;
    double h_ = 0.0;
    double origin_ = 0.0;
    double area_ = 0.0;
    std::size_t center_ = 0;
    std::vector<NodeClass> mask_;
    std::vector<std::int16_t> depth_;
    std::vector<double> qw_;
    std::vector<std::size_t> nodes_;
    std::vector<std::size_t> bdry_;
    std::vector<Stencil1D> sx_, sy_, sxx_, syy_, cx_, cy_;
    std::vector<std::uint8_t> centered_;
    std::vector<CenteredRun> runs_;
};

using GridPtr = std::shared_ptr<const Grid2D>;

class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(GridPtr g) : g_(std::move(g)), v_(g_->num_nodes(), 0.0) {}
    ScalarField(GridPtr g, const std::function<double(double, double)>& fn);

    const Grid2D& grid() const { return *g_; }
    const GridPtr& grid_ptr() const { return g_; }
    double& operator[](std::size_t q) { return v_[q]; }
    double operator[](std::size_t q) const { return v_[q]; }
    double at(int i, int j) const { return v_[g_->index(i, j)]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    // max |.| over non-exterior nodes with depth >= min_depth
    double max_abs(int min_depth = 0) const;

private:
    GridPtr g_;
    std::vector<double> v_;
};

class SymMatrixField {
public:
    SymMatrixField() = default;
    explicit SymMatrixField(GridPtr g)
        : g_(std::move(g)),
          a11_(g_->num_nodes(), 0.0),
          a12_(g_->num_nodes(), 0.0),
          a22_(g_->num_nodes(), 0.0) {}

    const Grid2D& grid() const { return *g_; }
    const GridPtr& grid_ptr() const { return g_; }
    std::vector<double>& a11() { return a11_; }
    std::vector<double>& a12() { return a12_; }
    std::vector<double>& a22() { return a22_; }
    const std::vector<double>& a11() const { return a11_; }
    const std::vector<double>& a12() const { return a12_; }
    const std::vector<double>& a22() const { return a22_; }

    // Frobenius norm squared at a node (off-diagonal counted twice).
    double frob2(std::size_t q) const {
        return a11_[q] * a11_[q] + 2.0 * (a12_[q] * a12_[q]) + a22_[q] * a22_[q];
    }

private:
    GridPtr g_;
    std::vector<double> a11_, a12_, a22_;
};

}  // namespace maplate
