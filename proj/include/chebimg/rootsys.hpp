#pragma once

// Root systems, Weyl groups and affine Weyl groups in integer coordinates.
//
// Weights (roots included) are written in the basis of fundamental weights,
// points and translations in the basis of simple coroots. The pairing of a
// weight with a point is then the plain dot product, the coroot lattice is
// Z^n, and every group element acts by an integer matrix.

#include "chebimg/errors.hpp"
#include "chebimg/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chebimg {

struct Root {
  IntVector weight_coords;  // fundamental-weight basis
  IntVector coroot_coords;  // coroot v^vee in the simple-coroot basis
  IntVector root_coords;    // simple-root basis
  Rational length_sq;

  bool positive() const;
  long long height() const;
};

// One irreducible factor of a (possibly reducible) system.
struct Component {
  char family;
  int rank;
  std::size_t offset;  // first simple-root index of this factor
};

struct RootSystem {
  std::string type_spec;
  int rank = 0;
  IntMatrix cartan;     // cartan(i, j) = <alpha_i^vee, alpha_j>
  RationalMatrix gram;  // gram(j, k) = (alpha_j^vee, alpha_k^vee)
  std::vector<Root> roots;
  std::vector<std::size_t> simple_root_indices;
  std::vector<Component> components;
  std::vector<long long> simple_length_sq;  // (alpha_i, alpha_i), short roots = 2

  const Root& simple_root(int i) const { return roots[simple_root_indices[i]]; }
  std::vector<std::size_t> positive_root_indices() const;
  // Highest root of the given irreducible factor.
  const Root& highest_root(std::size_t component) const;
  std::optional<std::size_t> find_root(const IntVector& weight_coords) const;
  // Symmetric bilinear form (alpha_i, alpha_j) on simple roots.
  RationalMatrix root_form() const;
};

RootSystem build_root_system(std::string_view type_spec);

// Number of Weyl group elements, from the classification (product over factors).
BigInt weyl_group_order_estimate(const RootSystem& rs);

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
};

// Checks the four root-system axioms using the bilinear form (not the
// coordinate shortcuts), so a corrupted root list is detected.
AxiomReport verify_axioms(const RootSystem& rs);

struct WeylElement {
  IntMatrix weight_matrix;  // action on weight coordinates
  IntMatrix coroot_matrix;  // action on coroot coordinates (inverse transpose)

  static WeylElement identity(int n);
  WeylElement inverse() const;
  bool is_identity() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.weight_matrix == b.weight_matrix;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.weight_matrix < b.weight_matrix;
  }
};

WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement root_reflection(const Root& v);

// rho_{v,ell}(x) = x - (<v,x> - ell) v^vee, x in coroot coordinates.
RationalVector reflect(const Root& v, long long ell, const RationalVector& x);
ComplexVector reflect(const Root& v, long long ell, const ComplexVector& x);

inline constexpr std::size_t kDefaultWeylCap = 1152;

// Breadth-first closure under simple reflections; identity first.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs,
                                             std::size_t cap = kDefaultWeylCap);

// W-orbit of an integral weight, BFS order starting from lambda.
std::vector<IntVector> orbit(const RootSystem& rs, const IntVector& lambda);

struct DominantRep {
  IntVector dominant;
  WeylElement element;  // element.weight_matrix * lambda == dominant
};
DominantRep dominant_rep(const RootSystem& rs, const IntVector& lambda);
bool is_dominant(const IntVector& lambda);

struct AffineElement {
  WeylElement w;
  IntVector t;  // translation, coroot coordinates

  static AffineElement identity(int n);
  static AffineElement translation(const IntVector& t);
  static AffineElement linear(const WeylElement& w);
  bool is_identity() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.t == b.t && a.w == b.w;
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.w < b.w;
  }
};

// rho_{v,ell} = (ell v^vee, s_v).
AffineElement affine_reflection(const Root& v, long long ell);

RationalVector affine_apply(const AffineElement& g, const RationalVector& x);
ComplexVector affine_apply(const AffineElement& g, const ComplexVector& x);
// (t1,w1)(t2,w2) = (t1 + w1 t2, w1 w2)
AffineElement affine_compose(const AffineElement& g1, const AffineElement& g2);
AffineElement affine_inverse(const AffineElement& g);

std::string describe(const AffineElement& g);

}  // namespace chebimg
