#include "chebimg/critical.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace chebimg {

namespace {

ComplexVector random_point(std::mt19937_64& rng, int n, const DiagramSampling& opts) {
  std::uniform_real_distribution<double> re(-opts.real_half_width, opts.real_half_width);
  std::uniform_real_distribution<double> im(-opts.imag_half_width, opts.imag_half_width);
  ComplexVector z(n);
  for (auto& c : z) {
    const double a = re(rng);
    c = Complex(a, im(rng));
  }
  return z;
}

}  // namespace

std::vector<DiagramSample> sample_diagram_points(const RootSystem& rs, std::size_t count,
                                                 std::uint64_t seed,
                                                 const DiagramSampling& opts) {
  if (count < 1) throw std::invalid_argument("sample_diagram_points: count must be >= 1");
  if (opts.ell_min > opts.ell_max)
    throw std::invalid_argument("sample_diagram_points: empty ell range");
  const auto positive = rs.positive_root_indices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_root(0, positive.size() - 1);
  std::uniform_int_distribution<long long> pick_ell(opts.ell_min, opts.ell_max);
  std::vector<DiagramSample> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    DiagramSample ds;
    ds.root_index = positive[pick_root(rng)];
    ds.ell = pick_ell(rng);
    ds.offset = random_point(rng, rs.rank, opts);
    const Root& v = rs.roots[ds.root_index];
    const Complex excess = (dot(v.weight_coords, ds.offset) - static_cast<double>(ds.ell)) * 0.5;
    ds.point = ds.offset;
    for (int j = 0; j < rs.rank; ++j) ds.point[j] -= excess * static_cast<double>(v.coroot_coords[j]);
    out.push_back(std::move(ds));
  }
  return out;
}

std::vector<ComplexVector> sample_generic_points(const RootSystem& rs, std::size_t count,
                                                 std::uint64_t seed, double min_distance,
                                                 const DiagramSampling& opts) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexVector> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * count + 1000)
      throw std::runtime_error("sample_generic_points: could not find points off the diagram");
    ComplexVector z = random_point(rng, rs.rank, opts);
    if (diagram_distance(rs, z) > min_distance) out.push_back(std::move(z));
  }
  return out;
}

PostCriticalReport post_critical_check(const GeneralizedCosine& psi, long long d,
                                       const PolynomialMap& p, std::size_t samples, double tol,
                                       std::uint64_t seed, const DiagramSampling& opts) {
  const RootSystem& rs = psi.root_system();
  if (d < 2) throw std::invalid_argument("post_critical_check: d must be >= 2");
  PostCriticalReport rep;
  rep.type_spec = rs.type_spec;
  rep.d = d;
  rep.tol = tol;
  rep.requested = samples;
  const auto jac = jacobian_polynomials(p);
  const double dd = static_cast<double>(d);

  std::uint64_t batch_seed = seed;
  std::size_t batches = 0;
  while (rep.evaluated < samples) {
    if (++batches > 100) break;
    for (const DiagramSample& z : sample_diagram_points(rs, samples, batch_seed++, opts)) {
      if (rep.evaluated >= samples) break;
      if (floor_mod(z.ell, d) == 0) continue;  // z / d would lie on H_{v, ell/d}
      ComplexVector y = z.point;
      for (auto& c : y) c /= dd;
      if (diagram_distance(rs, y) <= 1e-6) {
        ++rep.skipped;
        continue;
      }
      const ComplexVector x = psi.eval(y);
      const Eigen::MatrixXcd dt = eval_jacobian(jac, x);
      rep.max_det_normalized = std::max(rep.max_det_normalized, normalized_determinant(dt));
      rep.max_det_abs = std::max(rep.max_det_abs, std::abs(dt.determinant()));

      const ComplexVector image = psi.eval(z.point);
      const double res = inf_norm(eval_poly_map(p, x) - image) / std::max(1.0, inf_norm(image));
      rep.max_functional_residual = std::max(rep.max_functional_residual, res);
      const DiagramHit hit = wall_witness(rs, z.root_index, z.point, 1e-9);
      if (!hit.on_diagram || hit.ell != z.ell) rep.critical_values_on_diagram = false;
      ++rep.evaluated;
    }
  }
  rep.passed = rep.evaluated == samples && rep.max_det_normalized <= tol &&
               rep.max_functional_residual <= 1e-8 && rep.critical_values_on_diagram;
  return rep;
}

DiagramInvarianceReport diagram_invariance_check(const RootSystem& rs, long long d,
                                                 std::size_t samples, std::uint64_t seed,
                                                 const DiagramSampling& opts) {
  if (d < 1) throw std::invalid_argument("diagram_invariance_check: d must be >= 1");
  DiagramInvarianceReport rep;
  rep.type_spec = rs.type_spec;
  rep.d = d;
  rep.samples = samples;
  for (const DiagramSample& s : sample_diagram_points(rs, samples, seed, opts)) {
    ComplexVector dy = s.point;
    for (auto& c : dy) c *= static_cast<double>(d);
    const DiagramHit hit = wall_witness(rs, s.root_index, dy, 1e-9);
    rep.max_distance = std::max(rep.max_distance, hit.distance);
    if (hit.on_diagram && hit.ell == d * s.ell) ++rep.witnessed;
  }
  rep.passed = rep.witnessed == rep.samples;
  return rep;
}

Complex deltoid_residual(Complex x1, Complex x2) {
  return x1 * x1 * x2 * x2 + 18.0 * x1 * x2 - 4.0 * (x1 * x1 * x1 + x2 * x2 * x2) - 27.0;
}

DeltoidReport deltoid_check(const GeneralizedCosine& psi, std::size_t samples,
                            std::uint64_t seed, const DiagramSampling& opts) {
  const RootSystem& rs = psi.root_system();
  if (rs.rank != 2 || rs.components.size() != 1 || rs.components[0].family != 'A')
    throw std::invalid_argument("deltoid_check: requires A2");
  DeltoidReport rep;
  rep.samples = samples;
  for (const DiagramSample& s : sample_diagram_points(rs, samples, seed, opts)) {
    const ComplexVector x = psi.eval(s.point);
    rep.max_on_diagram = std::max(rep.max_on_diagram, std::abs(deltoid_residual(x[0], x[1])));
  }
  rep.min_off_diagram = INFINITY;
  for (const ComplexVector& y : sample_generic_points(rs, samples, seed + 1, 1e-2, opts)) {
    const ComplexVector x = psi.eval(y);
    rep.min_off_diagram = std::min(rep.min_off_diagram, std::abs(deltoid_residual(x[0], x[1])));
  }
  return rep;
}

}  // namespace chebimg
