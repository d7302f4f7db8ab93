#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace pdeopt {

// Which closed quadrant of [-1,1]^2 is removed to form the L-shaped domain.
enum class Quadrant { PosPos, NegPos, NegNeg, PosNeg };

// Computational domain: unit-style disk, L-shape on the [-1,1]^2 box, or an
// axis-aligned rectangle.
struct DomainSpec {
    enum class Shape { UnitDisk, LShape, Rectangle };

    Shape shape = Shape::Rectangle;

    // UnitDisk parameters.
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 1.0;

    // Rectangle corners (min < max componentwise).
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 1.0;
    double y_max = 1.0;

    // LShape: removed quadrant of [-1,1]^2.
    Quadrant removed = Quadrant::PosNeg;

    static DomainSpec unit_disk(double cx = 0.0, double cy = 0.0, double r = 1.0);
    static DomainSpec l_shape(Quadrant removed = Quadrant::PosNeg);
    static DomainSpec rectangle(double x0, double y0, double x1, double y1);

    /// Strict interior membership test (points on the boundary are outside).
    bool contains(double x, double y) const;

    /// Exact area of the domain.
    double analytic_area() const;

    /// Bounding box [x0,x1] x [y0,y1].
    void bounding_box(double& x0, double& y0, double& x1, double& y1) const;

    /// Throws std::invalid_argument on malformed parameters.
    void validate() const;
};

enum class NodeKind : std::uint8_t { Interior, DirichletBoundary, Exterior };

// Masked uniform grid over a DomainSpec. Nodes strictly inside the domain are
// Interior; non-interior nodes adjacent to an interior node carry the
// homogeneous Dirichlet value; everything else is Exterior. Interior nodes
// are numbered contiguously in row-major order and each carries the midpoint
// quadrature weight h^2. Immutable after construction.
class Grid {
public:
    static std::shared_ptr<const Grid> build(const DomainSpec& spec, int nodes_per_axis);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double h() const { return h_; }
    int num_interior() const { return static_cast<int>(interior_nodes_.size()); }

    double node_x(int i) const { return origin_x_ + h_ * i; }
    double node_y(int j) const { return origin_y_ + h_ * j; }

    NodeKind kind(int i, int j) const { return mask_[idx(i, j)]; }

    /// Interior unknown index for lattice node (i,j), or -1.
    int interior_index(int i, int j) const { return interior_index_[idx(i, j)]; }

    /// Lattice coordinates of interior unknown k.
    std::pair<int, int> interior_node(int k) const { return interior_nodes_[k]; }

    double interior_x(int k) const { return node_x(interior_nodes_[k].first); }
    double interior_y(int k) const { return node_y(interior_nodes_[k].second); }

    double quad_weight(int k) const { return quad_weights_[k]; }
    const std::vector<double>& quad_weights() const { return quad_weights_; }

    /// Sum of all quadrature weights (discrete measure of the domain).
    double domain_measure() const { return total_weight_; }

    const DomainSpec& domain() const { return domain_; }

private:
    Grid() = default;
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

    DomainSpec domain_;
    int nx_ = 0;
    int ny_ = 0;
    double h_ = 0.0;
    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    double total_weight_ = 0.0;
    std::vector<NodeKind> mask_;
    std::vector<int> interior_index_;
    std::vector<std::pair<int, int>> interior_nodes_;
    std::vector<double> quad_weights_;
};

std::shared_ptr<const Grid> build_grid(const DomainSpec& spec, int nodes_per_axis);

// Nodal scalar function on the interior unknowns of a Grid.
class Field {
public:
    explicit Field(std::shared_ptr<const Grid> grid);
    Field(std::shared_ptr<const Grid> grid, std::vector<double> values);

    static Field constant(std::shared_ptr<const Grid> grid, double value);

    const Grid& grid() const { return *grid_; }
    const std::shared_ptr<const Grid>& grid_ptr() const { return grid_; }

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int k) const { return values_[k]; }
    double& operator[](int k) { return values_[k]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double s);

private:
    std::shared_ptr<const Grid> grid_;
    std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);
Field operator-(Field a);

/// y += a*x
void axpy(double a, const Field& x, Field& y);

/// Throws std::invalid_argument unless both fields live on the same Grid object.
void require_same_grid(const Field& a, const Field& b);

/// Discrete L2 inner product: sum_k w_k a_k b_k.
double inner_product(const Field& a, const Field& b);

/// Discrete L2 norm.
double norm(const Field& a);

/// Indicator (0/1) of the ball |x-c| < r, sampled at interior nodes.
Field make_ball_indicator(std::shared_ptr<const Grid> grid,
                          double cx, double cy, double r);

/// Indicator (0/1) of the open rectangle (x0,x1) x (y0,y1).
Field make_rect_indicator(std::shared_ptr<const Grid> grid,
                          double x0, double y0, double x1, double y1);

} // namespace pdeopt
