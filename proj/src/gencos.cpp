#include "chebimg/gencos.hpp"

#include "chebimg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chebimg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GeneralizedCosine::GeneralizedCosine(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank;
  for (int k = 0; k < n; ++k) {
    IntVector omega(n, 0);
    omega[k] = 1;
    orbits_.push_back(orbit(rs_, omega));
    const auto& orb = orbits_.back();
    std::vector<double> cols(orb.size() * n);
    for (int j = 0; j < n; ++j)
      for (std::size_t i = 0; i < orb.size(); ++i)
        cols[j * orb.size() + i] = static_cast<double>(orb[i][j]);
    orbit_columns_.push_back(std::move(cols));
  }
}

void GeneralizedCosine::orbit_exponentials(int k, const ComplexVector& x,
                                           std::vector<Complex>& out) const {
  const std::size_t n = rs_.rank;
  const std::size_t count = orbits_[k].size();
  double xr[16], xi[16];
  std::vector<double> xr_heap, xi_heap;
  double* pr = xr;
  double* pi = xi;
  if (n > 16) {
    xr_heap.resize(n);
    xi_heap.resize(n);
    pr = xr_heap.data();
    pi = xi_heap.data();
  }
  for (std::size_t j = 0; j < n; ++j) {
    pr[j] = x[j].real();
    pi[j] = x[j].imag();
  }
  std::vector<double> re(count), im(count);
  kernels::orbit_pairings(orbit_columns_[k], count, n, {pr, n}, {pi, n}, re, im);
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    // exp(2 pi i (a + i b)) = exp(-2 pi b) (cos 2 pi a + i sin 2 pi a); reduce a mod 1 first
    const double a = re[i] - std::round(re[i]);
    const double mag = std::exp(-kTwoPi * im[i]);
    out[i] = Complex(mag * std::cos(kTwoPi * a), mag * std::sin(kTwoPi * a));
  }
}

ComplexVector GeneralizedCosine::eval(const ComplexVector& x) const {
  if (x.size() != static_cast<std::size_t>(rs_.rank))
    throw DimensionMismatch("eval_psi: point has wrong dimension");
  ComplexVector out(rs_.rank);
  std::vector<Complex> e;
  for (int k = 0; k < rs_.rank; ++k) {
    orbit_exponentials(k, x, e);
    Complex s = 0.0;
    for (const Complex& z : e) s += z;
    out[k] = s;
  }
  return out;
}

Eigen::MatrixXcd GeneralizedCosine::jacobian(const ComplexVector& x) const {
  if (x.size() != static_cast<std::size_t>(rs_.rank))
    throw DimensionMismatch("jacobian_psi: point has wrong dimension");
  const int n = rs_.rank;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Complex> e;
  const Complex factor(0.0, kTwoPi);
  for (int k = 0; k < n; ++k) {
    orbit_exponentials(k, x, e);
    const auto& orb = orbits_[k];
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (int c = 0; c < n; ++c)
        if (orb[i][c] != 0) j(k, c) += static_cast<double>(orb[i][c]) * e[i];
    j.row(k) *= factor;
  }
  return j;
}

ComplexVector eval_psi(const GeneralizedCosine& psi, const ComplexVector& x) { return psi.eval(x); }

Eigen::MatrixXcd jacobian_psi(const GeneralizedCosine& psi, const ComplexVector& x) {
  return psi.jacobian(x);
}

ComplexVector eval_psi_fullsum(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                               const ComplexVector& x) {
  const int n = rs.rank;
  if (x.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("eval_psi_fullsum: point has wrong dimension");
  ComplexVector out(n);
  for (int k = 0; k < n; ++k) {
    IntVector omega(n, 0);
    omega[k] = 1;
    Complex sum = 0.0;
    long long stabilizer = 0;
    for (const WeylElement& w : weyl) {
      const IntVector image = w.weight_matrix.apply(omega);
      if (image == omega) ++stabilizer;
      sum += std::exp(Complex(0.0, kTwoPi) * dot(image, x));
    }
    out[k] = sum / static_cast<double>(stabilizer);
  }
  return out;
}

ComplexVector eval_psi_fullsum(const RootSystem& rs, const ComplexVector& x, std::size_t cap) {
  return eval_psi_fullsum(rs, weyl_group_elements(rs, cap), x);
}

double normalized_determinant(const Eigen::MatrixXcd& j) {
  double denom = 1.0;
  for (Eigen::Index r = 0; r < j.rows(); ++r) denom *= j.row(r).norm();
  return std::abs(j.determinant()) / std::max(1.0, denom);
}

DiagramHit wall_witness(const RootSystem& rs, std::size_t root_index, const ComplexVector& x,
                        double tol) {
  const Complex p = dot(rs.roots.at(root_index).weight_coords, x);
  const double ell = std::round(p.real());
  DiagramHit hit;
  hit.root_index = root_index;
  hit.ell = static_cast<long long>(ell);
  hit.distance = std::abs(p - ell);
  hit.on_diagram = hit.distance <= tol;
  return hit;
}

DiagramHit is_on_diagram(const RootSystem& rs, const ComplexVector& x, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("is_on_diagram: tol must be positive");
  DiagramHit best;
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t i : rs.positive_root_indices()) {
    const DiagramHit h = wall_witness(rs, i, x, tol);
    if (h.distance < best.distance) best = h;
  }
  return best;
}

double diagram_distance(const RootSystem& rs, const ComplexVector& x) {
  return is_on_diagram(rs, x, 1.0).distance;
}

RationalVector fundamental_weight_in_coroots(const RootSystem& rs, int k) {
  const RationalMatrix at_inv = inverse(to_rational(rs.cartan).transpose());
  RationalVector c(rs.rank, Rational(0));
  const Rational half_len(rs.simple_length_sq[k], 2);
  for (int j = 0; j < rs.rank; ++j) c[j] = at_inv(j, k) * half_len;
  return c;
}

RationalVector regular_direction(const RootSystem& rs) {
  RationalVector u(rs.rank, Rational(0));
  for (int k = 0; k < rs.rank; ++k) {
    const RationalVector w = fundamental_weight_in_coroots(rs, k);
    for (int j = 0; j < rs.rank; ++j) u[j] += w[j];
  }
  return u;
}

ComplexVector to_complex(const RationalVector& x) {
  ComplexVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    z[i] = static_cast<double>(x[i].numerator()) / static_cast<double>(x[i].denominator());
  return z;
}

PathSample lift_path_psi(const GeneralizedCosine& psi, const PathFunction& target,
                         const ComplexVector& y_start, const LiftSettings& settings) {
  const RootSystem& rs = psi.root_system();
  const auto positive = rs.positive_root_indices();
  ContinuationProblem problem;
  problem.value = [&psi](const ComplexVector& y) { return psi.eval(y); };
  problem.jacobian = [&psi](const ComplexVector& y) { return psi.jacobian(y); };
  problem.move_ok = [&rs, positive](const ComplexVector& from, const ComplexVector& to) {
    const double room = diagram_distance(rs, from);
    const ComplexVector delta = to - from;
    for (std::size_t i : positive)
      if (std::abs(dot(rs.roots[i].weight_coords, delta)) > 0.5 * room) return false;
    return true;
  };
  return track_path(problem, target, y_start, settings);
}

PathSample lift_path_psi(const GeneralizedCosine& psi, const PathSample& target,
                         const ComplexVector& y_start, const LiftSettings& settings) {
  return lift_path_psi(psi, PathFunction([&target](double t) { return target.at(t); }), y_start,
                       settings);
}

AffineElement deck_identify(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                            const ComplexVector& y0, const ComplexVector& y1, double tol) {
  if (y0.size() != static_cast<std::size_t>(rs.rank) || y1.size() != y0.size())
    throw DimensionMismatch("deck_identify: dimension mismatch");
  double best_err = std::numeric_limits<double>::infinity();
  const WeylElement* best_w = nullptr;
  IntVector best_t;
  for (const WeylElement& w : weyl) {
    const ComplexVector wy = w.coroot_matrix.apply(y0);
    IntVector t(rs.rank);
    double err = 0.0;
    for (int i = 0; i < rs.rank; ++i) {
      const Complex r = y1[i] - wy[i];
      const double ti = std::round(r.real());
      t[i] = static_cast<long long>(ti);
      err = std::max(err, std::abs(r - ti));
    }
    if (err < best_err) {
      best_err = err;
      best_w = &w;
      best_t = std::move(t);
    }
  }
  if (!best_w || best_err > tol)
    throw NoDeckMatch("deck_identify: no affine Weyl element maps y0 to y1 within tolerance (best " +
                      std::to_string(best_err) + ")");
  return {*best_w, best_t};
}

AffineElement deck_identify(const RootSystem& rs, const ComplexVector& y0,
                            const ComplexVector& y1, double tol, std::size_t cap) {
  return deck_identify(rs, weyl_group_elements(rs, cap), y0, y1, tol);
}

}  // namespace chebimg
