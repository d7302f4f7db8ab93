#pragma once

#include <atomic>
#include <memory>

#include "pdeopt/grid.hpp"

namespace pdeopt {

// Discrete Poisson operator -Delta_h with homogeneous Dirichlet conditions on
// the masked grid, together with its inverse E (conjugate gradients) and
// adjoint E*. The operator is self-adjoint, so E* = E; the adjoint solve is
// kept as a distinct entry point so the structure survives non-self-adjoint
// state equations. Every linear solve bumps an atomic counter, which is the
// unit of cost accounting throughout the optimizer.
class PoissonOperator {
public:
    enum class Preconditioner { None, Jacobi };

    explicit PoissonOperator(std::shared_ptr<const Grid> grid,
                             double solver_tol = 1e-10,
                             Preconditioner precond = Preconditioner::None);

    const Grid& grid() const { return *grid_; }
    const std::shared_ptr<const Grid>& grid_ptr() const { return grid_; }
    double solver_tol() const { return solver_tol_; }

    long solve_count() const { return solve_count_.load(std::memory_order_relaxed); }

    /// 5-point stencil application: (4u_ij - sum of axis neighbors)/h^2,
    /// Dirichlet neighbors contributing zero.
    Field apply(const Field& u) const;

    /// State solve psi = E q with relative residual <= solver_tol.
    Field solve_state(const Field& q) const;

    /// Adjoint solve lambda = E* r (identical system here).
    Field solve_adjoint(const Field& r) const;

private:
    Field solve(const Field& rhs) const;

    std::shared_ptr<const Grid> grid_;
    double solver_tol_;
    Preconditioner precond_;
    mutable std::atomic<long> solve_count_{0};
};

/// Experiment target state: E(exp(-|x|^2/4)) rescaled to unit L2 norm.
Field build_target(const PoissonOperator& op);

} // namespace pdeopt
