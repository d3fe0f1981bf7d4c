#pragma once

#include <memory>
#include <string>

#include "ctraj/core.hpp"

namespace ctraj {

/// A constrained mechanical system
///
///   Phi(q) = 0                 (n_p holonomic constraints)
///   B(q) qdot = 0              (n_v = n_p + n_r velocity constraints)
///   M(q) qdd + B(q)^T lambda = tau(u, q, qdot)
///
/// The first n_p rows of B are the configuration-constraint Jacobian
/// dPhi/dq, the remaining n_r rows are nonholonomic. The state manifold is
/// X = { x = (q, v) : F(x) = (Phi(q), B(q) v) = 0 }, of dimension
/// d_X = n_x - n_e with n_x = 2 n_q and n_e = n_p + n_v.
///
/// Instances are immutable after construction and safe to share across
/// threads; all evaluation methods are const and reentrant.
///
/// Models override the jac_* methods with analytic expressions. The base
/// class supplies central finite-difference fallbacks (step 1e-7*(1+|x|))
/// which are used to cross-check the analytic versions in tests.
class ConstrainedSystem {
 public:
  ConstrainedSystem(int nq, int nu, int np, int nr, std::string name)
      : nq_(nq), nu_(nu), np_(np), nr_(nr), name_(std::move(name)) {}
  virtual ~ConstrainedSystem() = default;

  int nq() const { return nq_; }
  int nu() const { return nu_; }
  int np() const { return np_; }
  int nr() const { return nr_; }
  int nv() const { return np_ + nr_; }
  int nx() const { return 2 * nq_; }
  int ne() const { return np_ + nv(); }
  int dX() const { return nx() - ne(); }
  const std::string& name() const { return name_; }

  /// Holonomic constraint values, size n_p.
  virtual Vec phi(const Vec& q) const = 0;

  /// Velocity-constraint matrix B(q), size n_v x n_q.
  virtual Mat bmat(const Vec& q) const = 0;

  /// Acceleration-constraint right-hand side xi(q, v) = -Bdot(q) v, size n_v.
  virtual Vec xi(const Vec& q, const Vec& v) const = 0;

  /// Mass matrix M(q), symmetric positive definite, n_q x n_q.
  virtual Mat mass(const Vec& q) const = 0;

  /// Generalized forces tau(u, q, v): actuation, gravity, Coriolis, friction.
  virtual Vec tau(const Vec& u, const Vec& q, const Vec& v) const = 0;

  // --- first-order derivative callbacks (n x n_q unless noted) ---

  /// d/dq [ B(q)^T lam ], n_q x n_q.
  virtual Mat jac_q_bt_lambda(const Vec& q, const Vec& lam) const;

  /// d/dq [ B(q) a ] for a fixed vector a, n_v x n_q.
  virtual Mat jac_q_b_times(const Vec& q, const Vec& a) const;

  /// d/dq [ M(q) a ] for a fixed vector a, n_q x n_q.
  virtual Mat jac_q_mass_times(const Vec& q, const Vec& a) const;

  virtual Mat jac_q_xi(const Vec& q, const Vec& v) const;
  virtual Mat jac_v_xi(const Vec& q, const Vec& v) const;

  virtual Mat jac_q_tau(const Vec& u, const Vec& q, const Vec& v) const;
  virtual Mat jac_v_tau(const Vec& u, const Vec& q, const Vec& v) const;
  virtual Mat jac_u_tau(const Vec& u, const Vec& q, const Vec& v) const;  // n_q x n_u

  // --- second-order contraction, needed by the projection rows ---

  /// d/dq [ (jac_q_bt_lambda(q, lam))^T a ], n_q x n_q.
  virtual Mat jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                                       const Vec& a) const;

  void check_state(const State& x) const {
    if (x.q.size() != nq_ || x.v.size() != nq_)
      throw DimensionError(name_ + ": state size mismatch (expected nq=" +
                           std::to_string(nq_) + ")");
  }
  void check_control(const Vec& u) const {
    if (u.size() != nu_)
      throw DimensionError(name_ + ": control size mismatch (expected nu=" +
                           std::to_string(nu_) + ")");
  }

 private:
  int nq_, nu_, np_, nr_;
  std::string name_;
};

using SystemPtr = std::shared_ptr<const ConstrainedSystem>;

}  // namespace ctraj
