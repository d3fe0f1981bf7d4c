#include <cmath>

#include "ctraj/models.hpp"

namespace ctraj {

namespace {

Eigen::Matrix3d rot_z(double psi) {
  Eigen::Matrix3d R;
  const double c = std::cos(psi), s = std::sin(psi);
  R << c, -s, 0, s, c, 0, 0, 0, 1;
  return R;
}

// d/dpsi of rot_z
Eigen::Matrix3d rot_z_d(double psi) {
  Eigen::Matrix3d R;
  const double c = std::cos(psi), s = std::sin(psi);
  R << -s, -c, 0, c, -s, 0, 0, 0, 0;
  return R;
}

Eigen::Matrix3d rot_z_dd(double psi) {
  Eigen::Matrix3d R;
  const double c = std::cos(psi), s = std::sin(psi);
  R << -c, s, 0, -s, -c, 0, 0, 0, 0;
  return R;
}

}  // namespace

MecanumSystem::MecanumSystem(const MecanumParams& p)
    : ConstrainedSystem(7, 4, 0, 4, "mecanum"), p_(p) {
  if (p.r <= 0) throw ConfigError("mecanum: wheel radius must be positive");
  const double tl = 2.0 * p.l;
  K_ << 1, -1, -tl, 1, 1, tl, 1, 1, -tl, 1, -1, tl;
  K_ /= p.r;
  mass_ = Mat::Zero(7, 7);
  mass_.diagonal() << p.m, p.m, p.I_z, p.I_w, p.I_w, p.I_w, p.I_w;
}

Vec MecanumSystem::phi(const Vec& /*q*/) const { return Vec(0); }

Mat MecanumSystem::bmat(const Vec& q) const {
  Mat B(4, 7);
  B.leftCols(3) = K_ * rot_z(q[2]).transpose();
  B.rightCols(4) = -Mat::Identity(4, 4);
  return B;
}

Vec MecanumSystem::xi(const Vec& q, const Vec& v) const {
  return -v[2] * (K_ * rot_z_d(q[2]).transpose() * v.head(3));
}

Mat MecanumSystem::mass(const Vec& /*q*/) const { return mass_; }

Vec MecanumSystem::tau(const Vec& u, const Vec& /*q*/, const Vec& v) const {
  Vec out = Vec::Zero(7);
  out.tail(4) = u - p_.b_fric * v.tail(4);
  return out;
}

Mat MecanumSystem::jac_q_bt_lambda(const Vec& q, const Vec& lam) const {
  Mat J = Mat::Zero(7, 7);
  J.block(0, 2, 3, 1) = rot_z_d(q[2]) * (K_.transpose() * lam);
  return J;
}

Mat MecanumSystem::jac_q_b_times(const Vec& q, const Vec& a) const {
  Mat J = Mat::Zero(4, 7);
  J.col(2) = K_ * rot_z_d(q[2]).transpose() * a.head(3);
  return J;
}

Mat MecanumSystem::jac_q_mass_times(const Vec& /*q*/, const Vec& /*a*/) const {
  return Mat::Zero(7, 7);
}

Mat MecanumSystem::jac_q_xi(const Vec& q, const Vec& v) const {
  Mat J = Mat::Zero(4, 7);
  J.col(2) = -v[2] * (K_ * rot_z_dd(q[2]).transpose() * v.head(3));
  return J;
}

Mat MecanumSystem::jac_v_xi(const Vec& q, const Vec& v) const {
  Mat J = Mat::Zero(4, 7);
  J.leftCols(3) = -v[2] * (K_ * rot_z_d(q[2]).transpose());
  J.col(2) += -(K_ * rot_z_d(q[2]).transpose() * v.head(3));
  return J;
}

Mat MecanumSystem::jac_q_tau(const Vec& /*u*/, const Vec& /*q*/,
                             const Vec& /*v*/) const {
  return Mat::Zero(7, 7);
}

Mat MecanumSystem::jac_v_tau(const Vec& /*u*/, const Vec& /*q*/,
                             const Vec& /*v*/) const {
  Mat J = Mat::Zero(7, 7);
  J.bottomRightCorner(4, 4) = -p_.b_fric * Mat::Identity(4, 4);
  return J;
}

Mat MecanumSystem::jac_u_tau(const Vec& /*u*/, const Vec& /*q*/,
                             const Vec& /*v*/) const {
  Mat J = Mat::Zero(7, 4);
  J.bottomRows(4).setIdentity();
  return J;
}

Mat MecanumSystem::jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                                            const Vec& a) const {
  Mat J = Mat::Zero(7, 7);
  J(2, 2) = a.head(3).dot(rot_z_dd(q[2]) * (K_.transpose() * lam));
  return J;
}

SystemPtr mecanum_system(const MecanumParams& p) {
  return std::make_shared<MecanumSystem>(p);
}

}  // namespace ctraj
