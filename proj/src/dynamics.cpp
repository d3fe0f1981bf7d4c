#include "ctraj/dynamics.hpp"

namespace ctraj {

Vec constraint_residual(const ConstrainedSystem& sys, const State& x) {
  sys.check_state(x);
  Vec r(sys.ne());
  r.head(sys.np()) = sys.phi(x.q);
  r.tail(sys.nv()) = sys.bmat(x.q) * x.v;
  return r;
}

Mat constraint_jacobian(const ConstrainedSystem& sys, const State& x) {
  sys.check_state(x);
  const int nq = sys.nq();
  const Mat B = sys.bmat(x.q);
  Mat J = Mat::Zero(sys.ne(), sys.nx());
  // dPhi/dq is the holonomic block of B.
  J.topLeftCorner(sys.np(), nq) = B.topRows(sys.np());
  J.bottomLeftCorner(sys.nv(), nq) = sys.jac_q_b_times(x.q, x.v);
  J.bottomRightCorner(sys.nv(), nq) = B;
  return J;
}

DynamicsSolution solve_kkt(const ConstrainedSystem& sys, const Vec& q,
                           const Vec& rhs_q, const Vec& rhs_c) {
  const int nq = sys.nq();
  const int nv = sys.nv();
  Mat K = Mat::Zero(nq + nv, nq + nv);
  K.topLeftCorner(nq, nq) = sys.mass(q);
  const Mat B = sys.bmat(q);
  K.topRightCorner(nq, nv) = B.transpose();
  K.bottomLeftCorner(nv, nq) = B;
  Vec rhs(nq + nv);
  rhs << rhs_q, rhs_c;

  Eigen::PartialPivLU<Mat> lu(K);
  if (!(lu.rcond() > 1e-12))
    throw SingularityError(sys.name() +
                           ": singular dynamics block matrix (geometric "
                           "singularity or rank-deficient B)");
  const Vec sol = lu.solve(rhs);
  DynamicsSolution out;
  out.qdd = sol.head(nq);
  out.lambda = sol.tail(nv);
  return out;
}

DynamicsSolution forward_dynamics(const ConstrainedSystem& sys, const State& x,
                                  const Vec& u) {
  sys.check_state(x);
  sys.check_control(u);
  return solve_kkt(sys, x.q, sys.tau(u, x.q, x.v), sys.xi(x.q, x.v));
}

Vec implicit_dynamics_residual(const ConstrainedSystem& sys, const State& x,
                               const Vec& xdot, const Vec& u,
                               const Vec& lambda) {
  sys.check_state(x);
  sys.check_control(u);
  const int nq = sys.nq();
  if (xdot.size() != sys.nx())
    throw DimensionError(sys.name() + ": xdot size mismatch");
  if (lambda.size() != sys.nv())
    throw DimensionError(sys.name() + ": lambda size mismatch");
  const Vec qd = xdot.head(nq);
  const Vec qdd = xdot.tail(nq);
  const Mat B = sys.bmat(x.q);
  Vec r(nq + sys.nv() + nq);
  r.head(nq) = sys.mass(x.q) * qdd + B.transpose() * lambda - sys.tau(u, x.q, x.v);
  r.segment(nq, sys.nv()) = B * qdd - sys.xi(x.q, x.v);
  r.tail(nq) = qd - x.v;
  return r;
}

Vec acceleration_function(const ConstrainedSystem& sys, const State& x,
                          const Vec& u, const Vec& lambda) {
  sys.check_state(x);
  sys.check_control(u);
  const Vec rhs = sys.tau(u, x.q, x.v) - sys.bmat(x.q).transpose() * lambda;
  return sys.mass(x.q).llt().solve(rhs);
}

DynamicsSolution baumgarte_dynamics(const ConstrainedSystem& sys,
                                    const State& x, const Vec& u, double alpha,
                                    double beta) {
  sys.check_state(x);
  sys.check_control(u);
  Vec rhs_c = sys.xi(x.q, x.v) - alpha * (sys.bmat(x.q) * x.v);
  rhs_c.head(sys.np()) -= beta * sys.phi(x.q);
  return solve_kkt(sys, x.q, sys.tau(u, x.q, x.v), rhs_c);
}

}  // namespace ctraj
