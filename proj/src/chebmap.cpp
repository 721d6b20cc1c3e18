#include "chebimg/chebmap.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace chebimg {

OrbitSumCombo OrbitSumCombo::single(const IntVector& lambda, BigInt c) {
  OrbitSumCombo s;
  if (c != 0) s.terms.emplace(lambda, std::move(c));
  return s;
}

Polynomial Polynomial::constant(int nvars, BigInt c) {
  Polynomial p;
  if (c != 0) p.terms.emplace(IntVector(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(int nvars, int j) {
  Polynomial p;
  IntVector e(nvars, 0);
  e[j] = 1;
  p.terms.emplace(e, 1);
  return p;
}

int Polynomial::nvars() const {
  return terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size());
}

namespace {

void accumulate(std::map<IntVector, BigInt>& into, const IntVector& key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms) accumulate(r.terms, e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms) accumulate(r.terms, e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) accumulate(r.terms, add(ea, eb), ca * cb);
  return r;
}

Polynomial derivative(const Polynomial& p, int var) {
  Polynomial r;
  for (const auto& [e, c] : p.terms) {
    if (e[var] == 0) continue;
    IntVector f = e;
    f[var] -= 1;
    accumulate(r.terms, f, c * e[var]);
  }
  return r;
}

InvariantRing::InvariantRing(const RootSystem& rs) : rs_(rs) {
  // Height of omega_j in root coordinates is the j-th column sum of cartan^{-1}.
  const RationalMatrix inv = inverse(to_rational(rs.cartan));
  RationalVector h(rs.rank, Rational(0));
  long long denom_lcm = 1;
  for (int j = 0; j < rs.rank; ++j) {
    for (int k = 0; k < rs.rank; ++k) h[j] += inv(k, j);
    denom_lcm = std::lcm(denom_lcm, h[j].denominator());
  }
  height_.resize(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    const Rational scaled = h[j] * Rational(denom_lcm);
    if (scaled <= 0) throw std::logic_error("reduction order: non-positive fundamental weight height");
    height_[j] = scaled.numerator();
  }
}

bool InvariantRing::order_less(const IntVector& a, const IntVector& b) const {
  const long long ha = dot(height_, a), hb = dot(height_, b);
  if (ha != hb) return ha < hb;
  return a < b;
}

IntVector InvariantRing::leading_weight(const OrbitSumCombo& c) const {
  if (c.terms.empty()) throw std::invalid_argument("leading_weight: empty combination");
  const IntVector* best = nullptr;
  for (const auto& [w, coeff] : c.terms)
    if (!best || order_less(*best, w)) best = &w;
  return *best;
}

const std::vector<IntVector>& InvariantRing::cached_orbit(const IntVector& lambda) {
  auto it = orbit_cache_.find(lambda);
  if (it == orbit_cache_.end()) it = orbit_cache_.emplace(lambda, orbit(rs_, lambda)).first;
  return it->second;
}

OrbitSumCombo InvariantRing::product(const OrbitSumCombo& a, const OrbitSumCombo& b) {
  // The coefficient of m_nu (nu dominant) in a product of invariants equals
  // the coefficient of the single exponential e^nu, so only dominant sums of
  // orbit elements are counted.
  OrbitSumCombo r;
  for (const auto& [la, ca] : a.terms) {
    const std::vector<IntVector> oa = cached_orbit(la);
    for (const auto& [lb, cb] : b.terms) {
      const std::vector<IntVector>& ob = cached_orbit(lb);
      const BigInt coeff = ca * cb;
      std::map<IntVector, long long> counts;
      for (const IntVector& x : oa)
        for (const IntVector& y : ob) {
          IntVector s = add(x, y);
          if (is_dominant(s)) ++counts[s];
        }
      for (const auto& [nu, k] : counts) accumulate(r.terms, nu, coeff * k);
    }
  }
  return r;
}

const OrbitSumCombo& InvariantRing::monomial_expand(const IntVector& e) {
  if (auto it = expand_memo_.find(e); it != expand_memo_.end()) return it->second;
  OrbitSumCombo result;
  if (is_zero(e)) {
    result = OrbitSumCombo::single(e, 1);
  } else {
    int j = 0;
    while (e[j] == 0) ++j;
    IntVector rest = e;
    rest[j] -= 1;
    IntVector omega(e.size(), 0);
    omega[j] = 1;
    const OrbitSumCombo prev = monomial_expand(rest);  // copy: the memo may rehash
    result = product(prev, OrbitSumCombo::single(omega, 1));
  }
  return expand_memo_.emplace(e, std::move(result)).first->second;
}

Polynomial InvariantRing::decompose(const OrbitSumCombo& target, std::size_t iteration_cap) {
  OrbitSumCombo rest = target;
  Polynomial out;
  std::size_t iterations = 0;
  while (!rest.empty()) {
    if (++iterations > iteration_cap)
      throw std::logic_error("decompose: iteration cap reached; reduction order is not well-founded");
    const IntVector mu = leading_weight(rest);
    if (!is_dominant(mu)) throw std::logic_error("decompose: non-dominant weight in orbit-sum combination");
    const BigInt c = rest.terms.at(mu);
    const OrbitSumCombo& expansion = monomial_expand(mu);
    // Unitriangularity: X^mu = m_mu + (strictly smaller terms).
    auto lead = expansion.terms.find(mu);
    if (lead == expansion.terms.end() || lead->second != 1 || leading_weight(expansion) != mu)
      throw std::logic_error("decompose: expansion of X^" + to_string(mu) + " is not unitriangular");
    accumulate(out.terms, mu, c);
    for (const auto& [nu, k] : expansion.terms) accumulate(rest.terms, nu, -c * k);
  }
  return out;
}

OrbitSumCombo orbit_sum_product(InvariantRing& ring, const OrbitSumCombo& a,
                                const OrbitSumCombo& b) {
  return ring.product(a, b);
}

OrbitSumCombo monomial_expand(InvariantRing& ring, const IntVector& e) {
  return ring.monomial_expand(e);
}

Polynomial decompose_to_polynomial(InvariantRing& ring, const OrbitSumCombo& target) {
  return ring.decompose(target);
}

PolynomialMap build_cheb_map(const RootSystem& rs, long long d) {
  if (d < 1) throw std::invalid_argument("build_cheb_map: d must be >= 1");
  InvariantRing ring(rs);
  PolynomialMap p;
  p.type_spec = rs.type_spec;
  p.d = d;
  p.rank = rs.rank;
  for (int k = 0; k < rs.rank; ++k) {
    IntVector target(rs.rank, 0);
    target[k] = d;
    p.components.push_back(ring.decompose(OrbitSumCombo::single(target, 1)));
  }
  return p;
}

namespace {

double to_double(const BigInt& c) { return c.convert_to<double>(); }

// Powers x_j^e cached per variable.
class PowerTable {
 public:
  explicit PowerTable(const ComplexVector& x) : x_(x), pow_(x.size(), {Complex(1.0)}) {}
  const Complex& get(std::size_t j, long long e) {
    auto& v = pow_[j];
    while (static_cast<long long>(v.size()) <= e) v.push_back(v.back() * x_[j]);
    return v[e];
  }

 private:
  const ComplexVector& x_;
  std::vector<std::vector<Complex>> pow_;
};

Complex eval_with(const Polynomial& p, PowerTable& pw) {
  Complex s = 0.0;
  for (const auto& [e, c] : p.terms) {
    Complex term = to_double(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term *= pw.get(j, e[j]);
    s += term;
  }
  return s;
}

}  // namespace

Complex eval_polynomial(const Polynomial& p, const ComplexVector& x) {
  PowerTable pw(x);
  return eval_with(p, pw);
}

ComplexVector eval_poly_map(const PolynomialMap& p, const ComplexVector& x) {
  if (x.size() != static_cast<std::size_t>(p.rank))
    throw DimensionMismatch("eval_poly_map: dimension mismatch");
  PowerTable pw(x);
  ComplexVector out(p.rank);
  for (int k = 0; k < p.rank; ++k) out[k] = eval_with(p.components[k], pw);
  return out;
}

std::vector<BigInt> eval_poly_map_exact(const PolynomialMap& p, const std::vector<BigInt>& x) {
  if (x.size() != static_cast<std::size_t>(p.rank))
    throw DimensionMismatch("eval_poly_map_exact: dimension mismatch");
  std::vector<BigInt> out(p.rank, 0);
  for (int k = 0; k < p.rank; ++k)
    for (const auto& [e, c] : p.components[k].terms) {
      BigInt term = c;
      for (std::size_t j = 0; j < e.size(); ++j)
        for (long long r = 0; r < e[j]; ++r) term *= x[j];
      out[k] += term;
    }
  return out;
}

std::vector<std::vector<Polynomial>> jacobian_polynomials(const PolynomialMap& p) {
  std::vector<std::vector<Polynomial>> jac(p.rank, std::vector<Polynomial>(p.rank));
  for (int k = 0; k < p.rank; ++k)
    for (int j = 0; j < p.rank; ++j) jac[k][j] = derivative(p.components[k], j);
  return jac;
}

Eigen::MatrixXcd eval_jacobian(const std::vector<std::vector<Polynomial>>& jac,
                               const ComplexVector& x) {
  const Eigen::Index n = static_cast<Eigen::Index>(jac.size());
  Eigen::MatrixXcd m(n, n);
  PowerTable pw(x);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < n; ++j) m(k, j) = eval_with(jac[k][j], pw);
  return m;
}

PolynomialMap compose_poly_maps(const PolynomialMap& p, const PolynomialMap& q,
                                std::size_t term_cap) {
  if (p.rank != q.rank) throw DimensionMismatch("compose_poly_maps: rank mismatch");
  const int n = p.rank;
  std::vector<std::vector<Polynomial>> powers(n, {Polynomial::constant(n, 1)});
  auto power = [&](int j, long long e) -> const Polynomial& {
    auto& v = powers[j];
    while (static_cast<long long>(v.size()) <= e) {
      v.push_back(v.back() * q.components[j]);
      if (v.back().terms.size() > term_cap)
        throw CapExceeded("compose_poly_maps: intermediate term count exceeds cap");
    }
    return v[e];
  };
  PolynomialMap r;
  r.type_spec = p.type_spec;
  r.d = p.d * q.d;
  r.rank = n;
  for (int k = 0; k < n; ++k) {
    Polynomial acc;
    for (const auto& [e, c] : p.components[k].terms) {
      Polynomial term = Polynomial::constant(n, c);
      for (int j = 0; j < n; ++j)
        if (e[j] != 0) term = term * power(j, e[j]);
      acc = acc + term;
      if (acc.terms.size() > term_cap)
        throw CapExceeded("compose_poly_maps: result term count exceeds cap");
    }
    r.components.push_back(std::move(acc));
  }
  return r;
}

PolynomialMap identity_map(const std::string& type_spec, int rank) {
  PolynomialMap p;
  p.type_spec = type_spec;
  p.d = 1;
  p.rank = rank;
  for (int j = 0; j < rank; ++j) p.components.push_back(Polynomial::variable(rank, j));
  return p;
}

FunctionalEquationReport verify_functional_equation(const GeneralizedCosine& psi, long long d,
                                                    const PolynomialMap& p, std::size_t samples,
                                                    double tol, std::uint64_t seed) {
  FunctionalEquationReport rep;
  rep.type_spec = psi.root_system().type_spec;
  rep.d = d;
  rep.samples = samples;
  rep.tol = tol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = psi.rank();
  for (std::size_t s = 0; s < samples; ++s) {
    ComplexVector x(n);
    for (auto& z : x) {
      const double re = uni(rng);
      z = Complex(re, uni(rng));
    }
    ComplexVector dx = x;
    for (auto& z : dx) z *= static_cast<double>(d);
    const ComplexVector lhs = eval_poly_map(p, psi.eval(x));
    const ComplexVector rhs = psi.eval(dx);
    const double abs_res = inf_norm(lhs - rhs);
    rep.max_abs_residual = std::max(rep.max_abs_residual, abs_res);
    rep.max_residual = std::max(rep.max_residual, abs_res / std::max(1.0, inf_norm(rhs)));
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

IntegralityReport check_integrality(const RootSystem& rs, long long d, const PolynomialMap& p) {
  using boost::multiprecision::cpp_rational;
  IntegralityReport rep;
  rep.integral = true;
  rep.matches_integer_path = p.rank == rs.rank;
  InvariantRing ring(rs);
  for (int k = 0; k < rs.rank; ++k) {
    IntVector target(rs.rank, 0);
    target[k] = d;
    std::map<IntVector, cpp_rational> rest{{target, cpp_rational(1)}};
    std::map<IntVector, cpp_rational> coeffs;
    while (!rest.empty()) {
      OrbitSumCombo support;
      for (const auto& [w, c] : rest) support.terms.emplace(w, 1);
      const IntVector mu = ring.leading_weight(support);
      const OrbitSumCombo& expansion = ring.monomial_expand(mu);
      const cpp_rational c = rest.at(mu) / cpp_rational(expansion.terms.at(mu));
      coeffs[mu] += c;
      for (const auto& [nu, k2] : expansion.terms) {
        cpp_rational& slot = rest[nu];
        slot -= c * cpp_rational(k2);
        if (slot == 0) rest.erase(nu);
      }
    }
    for (const auto& [e, c] : coeffs) {
      if (c == 0) continue;
      ++rep.coefficients;
      if (boost::multiprecision::denominator(c) != 1) rep.integral = false;
      if (k < p.rank) {
        auto it = p.components[k].terms.find(e);
        if (it == p.components[k].terms.end() || cpp_rational(it->second) != c)
          rep.matches_integer_path = false;
      }
    }
    if (k < p.rank && coeffs.size() != p.components[k].terms.size()) rep.matches_integer_path = false;
  }
  return rep;
}

}  // namespace chebimg
