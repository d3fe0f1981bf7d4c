#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ctraj {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input sizes do not match the owning system.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be full rank (KKT block, constraint Jacobian, chart
/// system) is numerically rank deficient.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Newton solve for a chart inversion left the chart domain or diverged.
class ChartDomainError : public Error {
 public:
  using Error::Error;
};

/// Orthogonal projection onto the manifold failed to converge.
class ProjectionError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// State x = (q, v) of a constrained mechanical system, v = dq/dt.
struct State {
  Vec q;
  Vec v;

  State() = default;
  State(Vec q_in, Vec v_in) : q(std::move(q_in)), v(std::move(v_in)) {}

  int nq() const { return static_cast<int>(q.size()); }

  /// Stacks (q, v) into a single vector of size 2*nq.
  Vec packed() const {
    Vec x(q.size() + v.size());
    x << q, v;
    return x;
  }

  static State from_packed(const Vec& x) {
    const Eigen::Index n = x.size() / 2;
    return State(x.head(n), x.tail(n));
  }
};

}  // namespace ctraj
