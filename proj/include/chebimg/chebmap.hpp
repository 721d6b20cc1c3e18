#pragma once

// Exact synthesis of the Chebyshev-like maps T with T o Psi = Psi o (x -> d x).
//
// Work happens in the ring of W-invariant exponential sums. Its Z-basis is the
// orbit sums m_lambda (lambda dominant); the generators X_j = m_{omega_j} are
// the components of Psi. Writing m_{d omega_k} as a polynomial in the X_j
// gives component k of T. The expansion of prod_j X_j^{mu_j} has leading term
// m_mu with coefficient 1, so the rewrite is a unitriangular elimination.

#include "chebimg/gencos.hpp"
#include "chebimg/rootsys.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chebimg {

struct OrbitSumCombo {
  std::map<IntVector, BigInt> terms;  // dominant weight -> nonzero coefficient

  static OrbitSumCombo single(const IntVector& lambda, BigInt c = 1);
  bool empty() const { return terms.empty(); }
  friend bool operator==(const OrbitSumCombo&, const OrbitSumCombo&) = default;
};

struct Polynomial {
  std::map<IntVector, BigInt> terms;  // exponent vector -> nonzero coefficient

  static Polynomial constant(int nvars, BigInt c);
  static Polynomial variable(int nvars, int j);
  int nvars() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p, int var);

struct PolynomialMap {
  std::string type_spec;
  long long d = 1;
  int rank = 0;
  std::vector<Polynomial> components;

  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b) {
    return a.rank == b.rank && a.components == b.components;
  }
};

// Per-job context: orbit cache, memoized monomial expansions and the
// reduction order. Not thread-safe; use one per job.
class InvariantRing {
 public:
  explicit InvariantRing(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  // Positive integer functional on weights, proportional to root height.
  const IntVector& height_weights() const { return height_; }
  // Strict reduction order: height first, then lexicographic.
  bool order_less(const IntVector& a, const IntVector& b) const;
  IntVector leading_weight(const OrbitSumCombo& c) const;

  const std::vector<IntVector>& cached_orbit(const IntVector& lambda);

  OrbitSumCombo product(const OrbitSumCombo& a, const OrbitSumCombo& b);
  const OrbitSumCombo& monomial_expand(const IntVector& e);
  Polynomial decompose(const OrbitSumCombo& target, std::size_t iteration_cap = 1000000);

  std::size_t memo_size() const { return expand_memo_.size(); }

 private:
  const RootSystem& rs_;
  IntVector height_;
  std::map<IntVector, std::vector<IntVector>> orbit_cache_;
  std::map<IntVector, OrbitSumCombo> expand_memo_;
};

OrbitSumCombo orbit_sum_product(InvariantRing& ring, const OrbitSumCombo& a,
                                const OrbitSumCombo& b);
OrbitSumCombo monomial_expand(InvariantRing& ring, const IntVector& e);
Polynomial decompose_to_polynomial(InvariantRing& ring, const OrbitSumCombo& target);

PolynomialMap build_cheb_map(const RootSystem& rs, long long d);

ComplexVector eval_poly_map(const PolynomialMap& p, const ComplexVector& x);
Complex eval_polynomial(const Polynomial& p, const ComplexVector& x);
std::vector<BigInt> eval_poly_map_exact(const PolynomialMap& p, const std::vector<BigInt>& x);

// Symbolic Jacobian: entry (k, j) = d P_k / d X_j.
std::vector<std::vector<Polynomial>> jacobian_polynomials(const PolynomialMap& p);
Eigen::MatrixXcd eval_jacobian(const std::vector<std::vector<Polynomial>>& jac,
                               const ComplexVector& x);

inline constexpr std::size_t kDefaultTermCap = 1000000;

// Exact composition P o Q.
PolynomialMap compose_poly_maps(const PolynomialMap& p, const PolynomialMap& q,
                                std::size_t term_cap = kDefaultTermCap);
PolynomialMap identity_map(const std::string& type_spec, int rank);

struct FunctionalEquationReport {
  std::string type_spec;
  long long d = 0;
  std::size_t samples = 0;
  double tol = 0.0;
  // |T(Psi(x)) - Psi(d x)|_inf / max(1, |Psi(d x)|_inf)
  double max_residual = 0.0;
  double max_abs_residual = 0.0;
  bool passed = false;
};

// Samples x with real and imaginary parts uniform in [-1, 1].
FunctionalEquationReport verify_functional_equation(const GeneralizedCosine& psi, long long d,
                                                    const PolynomialMap& p, std::size_t samples,
                                                    double tol, std::uint64_t seed = 0);

struct IntegralityReport {
  bool integral = false;          // every rational coefficient has denominator 1
  bool matches_integer_path = false;
  std::size_t coefficients = 0;
};

// Redoes the elimination over the rationals, dividing by each leading
// coefficient instead of assuming it is 1, and compares with p.
IntegralityReport check_integrality(const RootSystem& rs, long long d, const PolynomialMap& p);

}  // namespace chebimg
