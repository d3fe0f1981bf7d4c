#include "ctraj/system.hpp"

#include "ctraj/finite_diff.hpp"

namespace ctraj {

Mat ConstrainedSystem::jac_q_bt_lambda(const Vec& q, const Vec& lam) const {
  return central_diff(
      [&](const Vec& qq) -> Vec { return bmat(qq).transpose() * lam; }, q);
}

Mat ConstrainedSystem::jac_q_b_times(const Vec& q, const Vec& a) const {
  return central_diff([&](const Vec& qq) -> Vec { return bmat(qq) * a; }, q);
}

Mat ConstrainedSystem::jac_q_mass_times(const Vec& q, const Vec& a) const {
  return central_diff([&](const Vec& qq) -> Vec { return mass(qq) * a; }, q);
}

Mat ConstrainedSystem::jac_q_xi(const Vec& q, const Vec& v) const {
  return central_diff([&](const Vec& qq) -> Vec { return xi(qq, v); }, q);
}

Mat ConstrainedSystem::jac_v_xi(const Vec& q, const Vec& v) const {
  return central_diff([&](const Vec& vv) -> Vec { return xi(q, vv); }, v);
}

Mat ConstrainedSystem::jac_q_tau(const Vec& u, const Vec& q,
                                 const Vec& v) const {
  return central_diff([&](const Vec& qq) -> Vec { return tau(u, qq, v); }, q);
}

Mat ConstrainedSystem::jac_v_tau(const Vec& u, const Vec& q,
                                 const Vec& v) const {
  return central_diff([&](const Vec& vv) -> Vec { return tau(u, q, vv); }, v);
}

Mat ConstrainedSystem::jac_u_tau(const Vec& u, const Vec& q,
                                 const Vec& v) const {
  return central_diff([&](const Vec& uu) -> Vec { return tau(uu, q, v); }, u);
}

Mat ConstrainedSystem::jac_q_bt_lambda_contract(const Vec& q, const Vec& lam,
                                                const Vec& a) const {
  return central_diff(
      [&](const Vec& qq) -> Vec {
        return jac_q_bt_lambda(qq, lam).transpose() * a;
      },
      q, 1e-6);
}

}  // namespace ctraj
