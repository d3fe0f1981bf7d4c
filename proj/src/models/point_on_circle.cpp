#include "ctraj/models.hpp"

namespace ctraj {

PointOnCircleSystem::PointOnCircleSystem(double L, double mass, double g)
    : ConstrainedSystem(2, 1, 1, 0, "point_on_circle"), L_(L), m_(mass), g_(g) {
  if (L <= 0.0) throw ConfigError("point_on_circle: radius must be positive");
}

Vec PointOnCircleSystem::phi(const Vec& q) const {
  Vec out(1);
  out[0] = q.squaredNorm() - L_ * L_;
  return out;
}

Mat PointOnCircleSystem::bmat(const Vec& q) const {
  return 2.0 * q.transpose();
}

Vec PointOnCircleSystem::xi(const Vec& /*q*/, const Vec& v) const {
  Vec out(1);
  out[0] = -2.0 * v.squaredNorm();
  return out;
}

Mat PointOnCircleSystem::mass(const Vec& /*q*/) const {
  return m_ * Mat::Identity(2, 2);
}

Vec PointOnCircleSystem::tau(const Vec& u, const Vec& q, const Vec& /*v*/) const {
  Vec out(2);
  const double s = u[0] / (L_ * L_);
  out << -s * q[1], s * q[0] - m_ * g_;
  return out;
}

Mat PointOnCircleSystem::jac_q_bt_lambda(const Vec& /*q*/, const Vec& lam) const {
  return 2.0 * lam[0] * Mat::Identity(2, 2);
}

Mat PointOnCircleSystem::jac_q_b_times(const Vec& /*q*/, const Vec& a) const {
  return 2.0 * a.transpose();
}

Mat PointOnCircleSystem::jac_q_mass_times(const Vec& /*q*/, const Vec& /*a*/) const {
  return Mat::Zero(2, 2);
}

Mat PointOnCircleSystem::jac_q_xi(const Vec& /*q*/, const Vec& /*v*/) const {
  return Mat::Zero(1, 2);
}

Mat PointOnCircleSystem::jac_v_xi(const Vec& /*q*/, const Vec& v) const {
  return -4.0 * v.transpose();
}

Mat PointOnCircleSystem::jac_q_tau(const Vec& u, const Vec& /*q*/,
                                   const Vec& /*v*/) const {
  Mat J(2, 2);
  const double s = u[0] / (L_ * L_);
  J << 0.0, -s, s, 0.0;
  return J;
}

Mat PointOnCircleSystem::jac_v_tau(const Vec& /*u*/, const Vec& /*q*/,
                                   const Vec& /*v*/) const {
  return Mat::Zero(2, 2);
}

Mat PointOnCircleSystem::jac_u_tau(const Vec& /*u*/, const Vec& q,
                                   const Vec& /*v*/) const {
  Mat J(2, 1);
  J << -q[1] / (L_ * L_), q[0] / (L_ * L_);
  return J;
}

Mat PointOnCircleSystem::jac_q_bt_lambda_contract(const Vec& /*q*/,
                                                  const Vec& /*lam*/,
                                                  const Vec& /*a*/) const {
  return Mat::Zero(2, 2);
}

SystemPtr point_on_circle_system(double L, double mass, double g) {
  return std::make_shared<PointOnCircleSystem>(L, mass, g);
}

}  // namespace ctraj
