#pragma once

#include <functional>

#include "ctraj/core.hpp"

namespace ctraj {

/// Central-difference Jacobian of a vector map, step 1e-7*(1+|x_j|).
inline Mat central_diff(const std::function<Vec(const Vec&)>& f, const Vec& x,
                        double base_step = 1e-7) {
  const Vec f0 = f(x);
  Mat J(f0.size(), x.size());
  Vec xp = x, xm = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double h = base_step * (1.0 + std::abs(x[j]));
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    J.col(j) = (f(xp) - f(xm)) / (2.0 * h);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return J;
}

}  // namespace ctraj
