#pragma once

#include <array>
#include <optional>

#include "ctraj/system.hpp"

namespace ctraj {

/// Planar five-bar parallel robot (Scherbot-style). All joints revolute,
/// joints 1 and 5 actuated, the ground acts as the fifth bar.
struct FiveBarParams {
  double l_b = 0.12;    ///< base distance [m]
  double l_p = 0.20;    ///< proximal link length [m]
  double l_d = 0.15;    ///< distal link length [m]
  double m_p = 1.20;    ///< proximal link mass [kg]
  double m_d = 0.90;    ///< distal link mass [kg]
  double I_p = 0.007;   ///< proximal link inertia about CoM [kg m^2]
  double I_d = 0.002;   ///< distal link inertia about CoM [kg m^2]
  double m_w = 0.5;     ///< mass of the circular weight at Q [kg]
  double b_fric = 0.07; ///< viscous friction at every joint [N m s/rad]
  double tau_max = 1.4; ///< torque limit of each motor [N m]
  /// Reflected rotor inertia of each motor, acting on the actuated joints
  /// q1 and q5. Joint q5 carries no link inertia in loop-relative
  /// coordinates, so without this term the mass matrix is singular.
  double motor_inertia = 1e-3;
};

/// Mecanum-wheeled vehicle, four wheels, rolling without slipping.
struct MecanumParams {
  double l = 0.21;      ///< chassis half-spacing as used by the 2l offsets in K [m]
  double r = 0.066;     ///< wheel radius [m]
  double m = 15.75;     ///< vehicle mass [kg]
  double I_z = 0.461;   ///< chassis inertia about the vertical axis [kg m^2]
  double I_w = 0.0026;  ///< wheel inertia about its axis [kg m^2]
  double b_fric = 0.1;  ///< viscous friction at the wheel axes [N m s/rad]
  double circle_radius = 2.5;  ///< radius of the prescribed path [m]
};

class FiveBarSystem : public ConstrainedSystem {
 public:
  explicit FiveBarSystem(const FiveBarParams& p);

  Vec phi(const Vec& q) const override;
  Mat bmat(const Vec& q) const override;
  Vec xi(const Vec& q, const Vec& v) const override;
  Mat mass(const Vec& q) const override;
  Vec tau(const Vec& u, const Vec& q, const Vec& v) const override;

  Mat jac_q_bt_lambda(const Vec& q, const Vec& lam) const override;
  Mat jac_q_b_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_mass_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_xi(const Vec& q, const Vec& v) const override;
  Mat jac_v_xi(const Vec& q, const Vec& v) const override;
  Mat jac_q_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_v_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_u_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                               const Vec& a) const override;

  const FiveBarParams& params() const { return p_; }

 private:
  // Absolute link angles a_i = q_1 + ... + q_i, i = 1..4.
  Eigen::Vector4d abs_angles(const Vec& q) const;
  Mat mass_abs(const Eigen::Vector4d& a) const;

  FiveBarParams p_;
  Eigen::Matrix<double, 4, 5> L_;   // a = L q
  Eigen::Matrix4d kappa_;           // constant inertia coefficients
  Eigen::Vector4d link_inertia_;    // (I_p, I_d, I_d, I_p)
  Eigen::Vector4d sigma_;           // gravity coefficients
  Eigen::Vector4d len_;             // (l_p, l_d, l_d, l_p)
};

class MecanumSystem : public ConstrainedSystem {
 public:
  explicit MecanumSystem(const MecanumParams& p);

  Vec phi(const Vec& q) const override;
  Mat bmat(const Vec& q) const override;
  Vec xi(const Vec& q, const Vec& v) const override;
  Mat mass(const Vec& q) const override;
  Vec tau(const Vec& u, const Vec& q, const Vec& v) const override;

  Mat jac_q_bt_lambda(const Vec& q, const Vec& lam) const override;
  Mat jac_q_b_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_mass_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_xi(const Vec& q, const Vec& v) const override;
  Mat jac_v_xi(const Vec& q, const Vec& v) const override;
  Mat jac_q_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_v_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_u_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                               const Vec& a) const override;

  const MecanumParams& params() const { return p_; }

 private:
  MecanumParams p_;
  Eigen::Matrix<double, 4, 3> K_;
  Mat mass_;
};

/// Planar point mass constrained to a circle of radius L; equivalent to a
/// pendulum. Serves as an analytic oracle in tests. One actuator applies a
/// torque about the circle center (tangential force u/L).
class PointOnCircleSystem : public ConstrainedSystem {
 public:
  PointOnCircleSystem(double L, double mass, double g);

  Vec phi(const Vec& q) const override;
  Mat bmat(const Vec& q) const override;
  Vec xi(const Vec& q, const Vec& v) const override;
  Mat mass(const Vec& q) const override;
  Vec tau(const Vec& u, const Vec& q, const Vec& v) const override;

  Mat jac_q_bt_lambda(const Vec& q, const Vec& lam) const override;
  Mat jac_q_b_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_mass_times(const Vec& q, const Vec& a) const override;
  Mat jac_q_xi(const Vec& q, const Vec& v) const override;
  Mat jac_v_xi(const Vec& q, const Vec& v) const override;
  Mat jac_q_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_v_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_u_tau(const Vec& u, const Vec& q, const Vec& v) const override;
  Mat jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                               const Vec& a) const override;

  double radius() const { return L_; }
  double point_mass() const { return m_; }
  double gravity() const { return g_; }

 private:
  double L_, m_, g_;
};

SystemPtr five_bar_system(const FiveBarParams& p = {});
SystemPtr mecanum_system(const MecanumParams& p = {});
SystemPtr point_on_circle_system(double L, double mass, double g);

/// Position of the end effector Q (tip of the second link), relative to the
/// base of joint 1.
Eigen::Vector2d five_bar_end_effector(const FiveBarParams& p, const Vec& q);

/// Newton root-find on Phi from a seed configuration (least-norm steps).
/// Returns a configuration with |Phi| <= tol.
Vec five_bar_assemble(const FiveBarParams& p, const Vec& q_seed,
                      double tol = 1e-12, int max_iters = 100);

/// Inverse kinematics of point Q. elbow_left/right select the branch of
/// each two-link chain (+1 or -1). The free angle sum is resolved so that
/// q1+...+q5 = 0. Returns nullopt when Q is outside the workspace.
std::optional<Vec> five_bar_ik(const FiveBarParams& p,
                               const Eigen::Vector2d& Q, int elbow_left,
                               int elbow_right);

}  // namespace ctraj
