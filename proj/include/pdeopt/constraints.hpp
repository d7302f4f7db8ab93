#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "pdeopt/grid.hpp"
#include "pdeopt/pde.hpp"

namespace pdeopt {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Normal cone to the interval [a,b] at a point, represented as a (possibly
// unbounded) interval of admissible multipliers: {0}, (-inf,0], [0,inf), or
// all of R in the degenerate near-equality case.
struct ConeInterval {
    double lo = 0.0;
    double hi = 0.0;

    static ConeInterval zero() { return {0.0, 0.0}; }
    static ConeInterval nonpositive() { return {-kInf, 0.0}; }
    static ConeInterval nonnegative() { return {0.0, kInf}; }
    static ConeInterval all() { return {-kInf, kInf}; }

    double clamp(double s) const {
        if (s < lo) return lo;
        if (s > hi) return hi;
        return s;
    }
    bool contains(double s, double tol = 0.0) const {
        return s >= lo - tol && s <= hi + tol;
    }
    bool is_zero_only() const { return lo == 0.0 && hi == 0.0; }
};

/// N_[a,b](x): {0} strictly inside, (-inf,0] at the lower bound, [0,inf) at
/// the upper bound (activity resolved with tolerance `tol`). Throws
/// FeasibilityError if x lies outside [a - tol, b + tol].
ConeInterval normal_cone_box(double x, double a, double b, double tol);

enum class NodeActivity : std::uint8_t { Inactive, ActiveLower, ActiveUpper };

// Nodewise activity tags for a state against interval bounds.
struct ActiveSet {
    std::vector<NodeActivity> tags;
    double tol_active = 0.0;

    int count_active() const;
};

/// 1e-6*(b-a) for finite two-sided bounds, absolute 1e-6 otherwise.
double default_active_tol(double a, double b);

ActiveSet compute_active_set(const Field& psi, double a, double b, double tol);

// --- Constraint variants -----------------------------------------------

struct BoxConstraint {
    double lower = -kInf;
    double upper = kInf;
};

struct WeightedIntegralConstraint {
    Field weight;
    double lower = -kInf;
    double upper = kInf;
};

struct TotalCoverageConstraint {
    std::shared_ptr<const Grid> grid;
    std::vector<std::uint8_t> in_zone; // one flag per interior node
    double lower = -kInf;
    double upper = kInf;
    double coverage = 0.0; // required covered fraction c of |Z|

    double zone_measure() const;
};

TotalCoverageConstraint make_coverage_constraint(const Field& zone_indicator,
                                                 double lower, double upper,
                                                 double coverage);

using Constraint = std::variant<BoxConstraint, WeightedIntegralConstraint,
                                TotalCoverageConstraint>;

/// Throws std::invalid_argument on malformed constraint data.
void validate_constraint(const Constraint& con);

struct FeasibilityReport {
    bool feasible = true;
    double max_overshoot = 0.0;    // worst bound violation (state units)
    double violating_measure = 0.0; // measure of violating nodes
};

FeasibilityReport check_feasibility(const Constraint& con, const Field& psi);
bool is_feasible(const Constraint& con, const Field& psi);

/// Scalar summary of the constraint at a state: Box -> measure of active
/// nodes, WeightedIntegral -> <w,psi>, TotalCoverage -> covered fraction.
double constraint_value(const Constraint& con, const Field& psi);

// Extended-real cost value: either finite or the infeasible +infinity of the
// exact penalty. Never encoded as a float sentinel.
class ExtendedCost {
public:
    static ExtendedCost infinite() { return ExtendedCost(); }
    explicit ExtendedCost(double v) : finite_(true), value_(v) {}

    bool is_finite() const { return finite_; }
    double value() const; // throws std::logic_error when infinite

    friend bool operator<(const ExtendedCost& a, const ExtendedCost& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    bool leq(double bound) const { return finite_ && value_ <= bound; }

private:
    ExtendedCost() = default;
    bool finite_ = false;
    double value_ = 0.0;
};

/// (1/2)||psi - target||^2 + (alpha/2)||q||^2 when psi is feasible, +infinity
/// otherwise.
ExtendedCost penalized_cost(const Constraint& con, const Field& psi,
                            const Field& q, const Field& target, double alpha);

// Per-run cache for constraint quantities that cost a PDE solve (E*(w) for
// the weighted integral constraint). Read-only after first fill.
struct SubgradientCache {
    std::optional<Field> adjoint_weight;
};

/// Minimizer of (1/2)||rho + g||^2 + (beta/2)||rho||^2 over the
/// constraint-specific subgradient set at psi (closed forms; see module
/// docs). Requires psi feasible and beta > 0. The weighted-integral case
/// costs one adjoint solve unless cached; the total-coverage case costs one
/// adjoint solve per call while the coverage constraint is active.
Field min_norm_subgradient(const Constraint& con, const Field& psi,
                           const Field& g, const PoissonOperator& op,
                           double beta, SubgradientCache* cache = nullptr);

/// Same selection with beta >= 0 allowed (beta = 0 gives the exact distance
/// minimizer used by KKT residuals).
Field subgradient_selection(const Constraint& con, const Field& psi,
                            const Field& g, const PoissonOperator& op,
                            double beta, SubgradientCache* cache = nullptr);

/// True when the total-coverage constraint is active at psi: the violating
/// measure is within one node weight of its bound (1-c)|Z|.
bool coverage_active(const TotalCoverageConstraint& con, const Field& psi);

} // namespace pdeopt
