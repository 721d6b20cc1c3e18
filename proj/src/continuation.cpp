#include "chebimg/continuation.hpp"

#include "chebimg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chebimg {

void LiftSettings::validate() const {
  if (!(min_step > 0 && min_step <= initial_step && initial_step <= 1.0))
    throw std::invalid_argument("LiftSettings: need 0 < min_step <= initial_step <= 1");
  if (!(newton_tol > 0) || max_newton_iters < 1 || !(jacobian_condition_cap > 1))
    throw std::invalid_argument("LiftSettings: invalid Newton parameters");
}

ComplexVector PathSample::at(double t) const {
  if (t <= times.front()) return points.front();
  if (t >= times.back()) return points.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times.begin());
  const std::size_t lo = hi - 1;
  const double s = (t - times[lo]) / (times[hi] - times[lo]);
  ComplexVector p(points[lo].size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = (1.0 - s) * points[lo][i] + s * points[hi][i];
  return p;
}

PathSample sample_path(const PathFunction& f, std::size_t segments) {
  PathSample s;
  for (std::size_t i = 0; i <= segments; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(segments);
    s.times.push_back(t);
    s.points.push_back(f(t));
  }
  return s;
}

double inf_norm(const ComplexVector& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

namespace {

enum class NewtonStatus { Converged, Diverged, Singular };

struct NewtonResult {
  NewtonStatus status;
  ComplexVector y;
  double condition = 0.0;
};

NewtonResult newton(const ContinuationProblem& p, const ComplexVector& start,
                    const ComplexVector& target, const LiftSettings& s) {
  const std::size_t n = start.size();
  const double scale = std::max(1.0, inf_norm(target));
  ComplexVector y = start;
  double prev_step = 0.0;
  double condition = 0.0;
  for (int iter = 0; iter <= s.max_newton_iters; ++iter) {
    const ComplexVector f = p.value(y) - target;
    if (inf_norm(f) <= s.newton_tol * scale) {
      if (p.move_ok && !p.move_ok(start, y)) return {NewtonStatus::Diverged, y, condition};
      return {NewtonStatus::Converged, y, condition};
    }
    if (iter == s.max_newton_iters) break;
    const Eigen::MatrixXcd j = p.jacobian(y);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(j);
    const double rcond = lu.rcond();
    condition = rcond > 0 ? 1.0 / rcond : INFINITY;
    if (!(condition <= s.jacobian_condition_cap))
      return {iter == 0 ? NewtonStatus::Singular : NewtonStatus::Diverged, y, condition};
    Eigen::VectorXcd rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = f[i];
    const Eigen::VectorXcd delta = lu.solve(rhs);
    double step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] -= delta[i];
      step = std::max(step, std::abs(delta[i]));
    }
    if (!std::isfinite(step)) return {NewtonStatus::Diverged, y, condition};
    // Past the first correction Newton must contract.
    if (iter >= 1 && step > 0.5 * prev_step && step > 1e-13 * (1.0 + inf_norm(y)))
      return {NewtonStatus::Diverged, y, condition};
    prev_step = step;
  }
  return {NewtonStatus::Diverged, y, condition};
}

}  // namespace

PathSample track_path(const ContinuationProblem& problem, const PathFunction& target,
                      const ComplexVector& y_start, const LiftSettings& settings) {
  settings.validate();
  PathSample out;

  const ComplexVector c0 = target(0.0);
  NewtonResult first = newton(problem, y_start, c0, settings);
  if (first.status == NewtonStatus::Singular)
    throw NearSingularJacobian("continuation: Jacobian near-singular at start (condition " +
                               std::to_string(first.condition) + ")");
  if (first.status != NewtonStatus::Converged)
    throw ContinuationFailure("continuation: start point does not lie over target(0)");
  out.times.push_back(0.0);
  out.points.push_back(first.y);

  double t = 0.0;
  double h = settings.initial_step;
  int streak = 0;
  while (t < 1.0) {
    const double step = std::min(h, 1.0 - t);
    const double t_next = (1.0 - t - step <= 1e-15) ? 1.0 : t + step;
    const NewtonResult r = newton(problem, out.points.back(), target(t_next), settings);
    if (r.status == NewtonStatus::Singular) {
      std::ostringstream os;
      os << "continuation: Jacobian near-singular at t=" << t << " (condition " << r.condition
         << ")";
      throw NearSingularJacobian(os.str());
    }
    if (r.status == NewtonStatus::Diverged) {
      h *= 0.5;
      streak = 0;
      if (h < settings.min_step) {
        std::ostringstream os;
        os << "continuation: step fell below " << settings.min_step << " at t=" << t;
        throw ContinuationFailure(os.str());
      }
      continue;
    }
    t = t_next;
    out.times.push_back(t);
    out.points.push_back(r.y);
    if (++streak >= 2) {
      h = std::min(2.0 * h, settings.initial_step);
      streak = 0;
    }
  }
  return out;
}

}  // namespace chebimg
