#pragma once

// Adaptive predictor-corrector continuation for F(y) = target(t), t in [0,1].
// Predictor is the previous point; the corrector is Newton's method. A step
// is rejected (and halved) when Newton does not converge, stops contracting,
// or moves farther than the caller's guard allows.

#include "chebimg/linalg.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace chebimg {

struct LiftSettings {
  double newton_tol = 1e-10;  // relative to max(1, |target|_inf)
  int max_newton_iters = 25;
  double initial_step = 1.0 / 64.0;
  double min_step = 1.0 / 65536.0;
  double jacobian_condition_cap = 1e8;

  void validate() const;
};

struct PathSample {
  std::vector<double> times;
  std::vector<ComplexVector> points;

  const ComplexVector& start() const { return points.front(); }
  const ComplexVector& end() const { return points.back(); }
  // Piecewise-linear interpolation in t.
  ComplexVector at(double t) const;
};

using PathFunction = std::function<ComplexVector(double)>;

PathSample sample_path(const PathFunction& f, std::size_t segments);

struct ContinuationProblem {
  std::function<ComplexVector(const ComplexVector&)> value;
  std::function<Eigen::MatrixXcd(const ComplexVector&)> jacobian;
  // Accept a corrector move from `from` to `to`; empty means always accept.
  std::function<bool(const ComplexVector& from, const ComplexVector& to)> move_ok;
};

PathSample track_path(const ContinuationProblem& problem, const PathFunction& target,
                      const ComplexVector& y_start, const LiftSettings& settings);

double inf_norm(const ComplexVector& v);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);

}  // namespace chebimg
