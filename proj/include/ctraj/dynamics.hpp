#pragma once

#include "ctraj/system.hpp"

namespace ctraj {

/// Acceleration and constraint forces solving the joint block system
///
///   [ M(q)  B(q)^T ] [ qdd    ]   [ tau ]
///   [ B(q)  0      ] [ lambda ] = [ xi  ]
struct DynamicsSolution {
  Vec qdd;
  Vec lambda;

  /// Tangent vector xdot = (v, qdd) for a state with velocity v.
  Vec xdot(const Vec& v) const {
    Vec out(v.size() + qdd.size());
    out << v, qdd;
    return out;
  }
};

/// F(x) = (Phi(q), B(q) v); zero iff x lies on the state manifold X.
Vec constraint_residual(const ConstrainedSystem& sys, const State& x);

/// F_x = dF/dx, size n_e x n_x. Rows span the normal space of X at x.
Mat constraint_jacobian(const ConstrainedSystem& sys, const State& x);

/// Solves the block system above. Throws SingularityError when the block
/// matrix is numerically rank deficient (reciprocal condition < 1e-12).
DynamicsSolution forward_dynamics(const ConstrainedSystem& sys, const State& x,
                                  const Vec& u);

/// Stacked residual of the implicit dynamics D(x, xdot, u, lambda) = 0:
///   ( M qdd + B^T lambda - tau,  B qdd - xi,  qdot_part_of_xdot - v )
/// of size n_q + n_v + n_q. Zero iff xdot is the constrained acceleration
/// field at (x, u) with multipliers lambda.
Vec implicit_dynamics_residual(const ConstrainedSystem& sys, const State& x,
                               const Vec& xdot, const Vec& u, const Vec& lambda);

/// Acceleration function g(x, u, lambda) = M^{-1} (tau - B^T lambda).
/// Does not enforce the acceleration constraint B qdd = xi.
Vec acceleration_function(const ConstrainedSystem& sys, const State& x,
                          const Vec& u, const Vec& lambda);

/// Baumgarte-stabilized dynamics: the acceleration constraint right-hand
/// side is replaced by xi - alpha B v - beta (Phi, 0_{n_r}). With
/// alpha = beta = 0 this is forward_dynamics.
DynamicsSolution baumgarte_dynamics(const ConstrainedSystem& sys,
                                    const State& x, const Vec& u, double alpha,
                                    double beta);

/// Solves the block system for arbitrary right-hand sides (rhs_q, rhs_c).
DynamicsSolution solve_kkt(const ConstrainedSystem& sys, const Vec& q,
                           const Vec& rhs_q, const Vec& rhs_c);

}  // namespace ctraj
