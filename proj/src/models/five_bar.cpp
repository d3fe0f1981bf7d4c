#include <cmath>

#include "ctraj/models.hpp"

namespace ctraj {

namespace {
constexpr double kGravity = 9.81;
}

FiveBarSystem::FiveBarSystem(const FiveBarParams& p)
    : ConstrainedSystem(5, 2, 3, 0, "five_bar"), p_(p) {
  if (p.l_b <= 0 || p.l_p <= 0 || p.l_d <= 0 || p.m_p <= 0 || p.m_d <= 0 ||
      p.m_w < 0 || p.motor_inertia <= 0)
    throw ConfigError("five_bar: lengths, masses and motor inertia must be positive");

  L_.setZero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) L_(i, j) = 1.0;

  len_ << p.l_p, p.l_d, p.l_d, p.l_p;
  link_inertia_ << p.I_p, p.I_d, p.I_d, p.I_p;

  // Bodies along the serial chain L1 -> L2 -> (weight at Q) -> L3 -> L4 with
  // CoM lever arms r_bj about each absolute angle a_j.
  struct Body {
    double m;
    Eigen::Vector4d r;
  };
  const std::array<Body, 5> bodies = {{
      {p.m_p, {p.l_p / 2, 0, 0, 0}},
      {p.m_d, {p.l_p, p.l_d / 2, 0, 0}},
      {p.m_w, {p.l_p, p.l_d, 0, 0}},
      {p.m_d, {p.l_p, p.l_d, p.l_d / 2, 0}},
      {p.m_p, {p.l_p, p.l_d, p.l_d, p.l_p / 2}},
  }};
  kappa_.setZero();
  sigma_.setZero();
  for (const auto& b : bodies) {
    kappa_ += b.m * b.r * b.r.transpose();
    sigma_ += b.m * b.r;
  }
}

Eigen::Vector4d FiveBarSystem::abs_angles(const Vec& q) const {
  return L_ * q;
}

Vec FiveBarSystem::phi(const Vec& q) const {
  const Eigen::Vector4d a = abs_angles(q);
  Vec out(3);
  out[0] = p_.l_b;
  out[1] = 0.0;
  for (int j = 0; j < 4; ++j) {
    out[0] += len_[j] * std::cos(a[j]);
    out[1] += len_[j] * std::sin(a[j]);
  }
  out[2] = std::sin(q.sum());
  return out;
}

Mat FiveBarSystem::bmat(const Vec& q) const {
  const Eigen::Vector4d a = abs_angles(q);
  Eigen::Vector4d r0, r1;
  for (int j = 0; j < 4; ++j) {
    r0[j] = -len_[j] * std::sin(a[j]);
    r1[j] = len_[j] * std::cos(a[j]);
  }
  Mat B(3, 5);
  B.row(0) = r0.transpose() * L_;
  B.row(1) = r1.transpose() * L_;
  B.row(2) = std::cos(q.sum()) * Eigen::RowVectorXd::Ones(5);
  return B;
}

Vec FiveBarSystem::xi(const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Vec out(3);
  out.setZero();
  for (int j = 0; j < 4; ++j) {
    out[0] += len_[j] * std::cos(a[j]) * ad[j] * ad[j];
    out[1] += len_[j] * std::sin(a[j]) * ad[j] * ad[j];
  }
  const double sd = v.sum();
  out[2] = std::sin(q.sum()) * sd * sd;
  return out;
}

Mat FiveBarSystem::mass_abs(const Eigen::Vector4d& a) const {
  Mat M(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) M(j, k) = kappa_(j, k) * std::cos(a[j] - a[k]);
  M.diagonal() += link_inertia_;
  return M;
}

Mat FiveBarSystem::mass(const Vec& q) const {
  Mat M = L_.transpose() * mass_abs(abs_angles(q)) * L_;
  M(0, 0) += p_.motor_inertia;
  M(4, 4) += p_.motor_inertia;
  return M;
}

Vec FiveBarSystem::tau(const Vec& u, const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Eigen::Vector4d bias;  // Coriolis + gravity in absolute coordinates
  for (int j = 0; j < 4; ++j) {
    double c = 0.0;
    for (int k = 0; k < 4; ++k)
      c += kappa_(j, k) * std::sin(a[j] - a[k]) * ad[k] * ad[k];
    bias[j] = c + kGravity * sigma_[j] * std::cos(a[j]);
  }
  Vec out = -(L_.transpose() * bias) - p_.b_fric * v;
  out[0] += u[0];
  out[4] += u[1];
  return out;
}

Mat FiveBarSystem::jac_q_bt_lambda(const Vec& q, const Vec& lam) const {
  const Eigen::Vector4d a = abs_angles(q);
  Eigen::Vector4d diag;
  for (int j = 0; j < 4; ++j)
    diag[j] = -lam[0] * len_[j] * std::cos(a[j]) -
              lam[1] * len_[j] * std::sin(a[j]);
  Mat out = L_.transpose() * diag.asDiagonal() * L_;
  out.array() -= lam[2] * std::sin(q.sum());
  return out;
}

Mat FiveBarSystem::jac_q_b_times(const Vec& q, const Vec& w) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d wa = L_ * w;
  Eigen::Vector4d d0, d1;
  for (int j = 0; j < 4; ++j) {
    d0[j] = -len_[j] * std::cos(a[j]) * wa[j];
    d1[j] = -len_[j] * std::sin(a[j]) * wa[j];
  }
  Mat out(3, 5);
  out.row(0) = d0.transpose() * L_;
  out.row(1) = d1.transpose() * L_;
  out.row(2) =
      -std::sin(q.sum()) * w.sum() * Eigen::RowVectorXd::Ones(5);
  return out;
}

Mat FiveBarSystem::jac_q_mass_times(const Vec& q, const Vec& w) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d z = L_ * w;
  Mat G(4, 4);
  for (int j = 0; j < 4; ++j) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k)
      acc += kappa_(j, k) * std::sin(a[j] - a[k]) * z[k];
    for (int m = 0; m < 4; ++m)
      G(j, m) = kappa_(j, m) * std::sin(a[j] - a[m]) * z[m];
    G(j, j) -= acc;
  }
  return L_.transpose() * G * L_;
}

Mat FiveBarSystem::jac_q_xi(const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Eigen::Vector4d d0, d1;
  for (int j = 0; j < 4; ++j) {
    d0[j] = -len_[j] * std::sin(a[j]) * ad[j] * ad[j];
    d1[j] = len_[j] * std::cos(a[j]) * ad[j] * ad[j];
  }
  const double sd = v.sum();
  Mat out(3, 5);
  out.row(0) = d0.transpose() * L_;
  out.row(1) = d1.transpose() * L_;
  out.row(2) = std::cos(q.sum()) * sd * sd * Eigen::RowVectorXd::Ones(5);
  return out;
}

Mat FiveBarSystem::jac_v_xi(const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Eigen::Vector4d d0, d1;
  for (int j = 0; j < 4; ++j) {
    d0[j] = 2.0 * len_[j] * std::cos(a[j]) * ad[j];
    d1[j] = 2.0 * len_[j] * std::sin(a[j]) * ad[j];
  }
  Mat out(3, 5);
  out.row(0) = d0.transpose() * L_;
  out.row(1) = d1.transpose() * L_;
  out.row(2) =
      2.0 * std::sin(q.sum()) * v.sum() * Eigen::RowVectorXd::Ones(5);
  return out;
}

Mat FiveBarSystem::jac_q_tau(const Vec& /*u*/, const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Mat G(4, 4);  // d(bias)/da
  for (int j = 0; j < 4; ++j) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k)
      acc += kappa_(j, k) * std::cos(a[j] - a[k]) * ad[k] * ad[k];
    for (int m = 0; m < 4; ++m)
      G(j, m) = -kappa_(j, m) * std::cos(a[j] - a[m]) * ad[m] * ad[m];
    G(j, j) += acc;
    G(j, j) -= kGravity * sigma_[j] * std::sin(a[j]);
  }
  return -(L_.transpose() * G * L_);
}

Mat FiveBarSystem::jac_v_tau(const Vec& /*u*/, const Vec& q, const Vec& v) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d ad = L_ * v;
  Mat G(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int m = 0; m < 4; ++m)
      G(j, m) = 2.0 * kappa_(j, m) * std::sin(a[j] - a[m]) * ad[m];
  Mat out = -(L_.transpose() * G * L_);
  out.diagonal().array() -= p_.b_fric;
  return out;
}

Mat FiveBarSystem::jac_u_tau(const Vec& /*u*/, const Vec& /*q*/,
                             const Vec& /*v*/) const {
  Mat J = Mat::Zero(5, 2);
  J(0, 0) = 1.0;
  J(4, 1) = 1.0;
  return J;
}

Mat FiveBarSystem::jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                                            const Vec& w) const {
  const Eigen::Vector4d a = abs_angles(q);
  const Eigen::Vector4d wa = L_ * w;
  Eigen::Vector4d diag;
  for (int j = 0; j < 4; ++j)
    diag[j] = (lam[0] * len_[j] * std::sin(a[j]) -
               lam[1] * len_[j] * std::cos(a[j])) *
              wa[j];
  Mat out = L_.transpose() * diag.asDiagonal() * L_;
  out.array() -= lam[2] * std::cos(q.sum()) * w.sum();
  return out;
}

SystemPtr five_bar_system(const FiveBarParams& p) {
  return std::make_shared<FiveBarSystem>(p);
}

Eigen::Vector2d five_bar_end_effector(const FiveBarParams& p, const Vec& q) {
  const double a1 = q[0];
  const double a2 = q[0] + q[1];
  return {p.l_p * std::cos(a1) + p.l_d * std::cos(a2),
          p.l_p * std::sin(a1) + p.l_d * std::sin(a2)};
}

Vec five_bar_assemble(const FiveBarParams& p, const Vec& q_seed, double tol,
                      int max_iters) {
  FiveBarSystem sys(p);
  Vec q = q_seed;
  for (int it = 0; it < max_iters; ++it) {
    const Vec r = sys.phi(q);
    if (r.norm() <= tol) return q;
    const Mat B = sys.bmat(q);
    // least-norm Newton step
    const Vec dq = B.transpose() *
                   (B * B.transpose()).ldlt().solve(r);
    q -= dq;
  }
  if (sys.phi(q).norm() <= tol) return q;
  throw SingularityError("five_bar_assemble: Newton did not converge");
}

namespace {
// Two-link IK: find (alpha1, alpha2) with l1 e(alpha1) + l2 e(alpha2) = target.
std::optional<std::pair<double, double>> two_link_ik(double l1, double l2,
                                                     const Eigen::Vector2d& t,
                                                     int elbow) {
  const double r = t.norm();
  if (r > l1 + l2 || r < std::abs(l1 - l2) || r == 0.0) return std::nullopt;
  const double base = std::atan2(t.y(), t.x());
  double cb = (l1 * l1 + r * r - l2 * l2) / (2.0 * l1 * r);
  cb = std::clamp(cb, -1.0, 1.0);
  const double alpha1 = base + elbow * std::acos(cb);
  const Eigen::Vector2d rem = t - l1 * Eigen::Vector2d(std::cos(alpha1),
                                                       std::sin(alpha1));
  const double alpha2 = std::atan2(rem.y(), rem.x());
  return std::make_pair(alpha1, alpha2);
}
}  // namespace

std::optional<Vec> five_bar_ik(const FiveBarParams& p, const Eigen::Vector2d& Q,
                               int elbow_left, int elbow_right) {
  const auto left = two_link_ik(p.l_p, p.l_d, Q, elbow_left);
  if (!left) return std::nullopt;
  // Chain from Q through the distal and proximal links to the right base,
  // which sits at (-l_b, 0) relative to the left base.
  const Eigen::Vector2d target = Eigen::Vector2d(-p.l_b, 0.0) - Q;
  const auto right = two_link_ik(p.l_d, p.l_p, target, elbow_right);
  if (!right) return std::nullopt;
  const double a1 = left->first, a2 = left->second;
  double a3 = right->first, a4 = right->second;
  // keep cumulative angles continuous
  auto unwrap = [](double prev, double ang) {
    while (ang - prev > M_PI) ang -= 2.0 * M_PI;
    while (ang - prev < -M_PI) ang += 2.0 * M_PI;
    return ang;
  };
  a3 = unwrap(a2, a3);
  a4 = unwrap(a3, a4);
  Vec q(5);
  q << a1, a2 - a1, a3 - a2, a4 - a3, -a4;  // angle sum zero
  return q;
}

}  // namespace ctraj
