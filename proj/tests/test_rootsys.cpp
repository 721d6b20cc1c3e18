#include "chebimg/monodromy.hpp"
#include "chebimg/rootsys.hpp"

#include <doctest.h>

#include <set>

using namespace chebimg;

namespace {

// Simple roots in Euclidean coordinates, doubled so every entry is an integer.
std::vector<IntVector> euclidean_simple_roots(char family, int n) {
  std::vector<IntVector> s;
  auto e = [](int dim, std::initializer_list<std::pair<int, long long>> entries) {
    IntVector v(dim, 0);
    for (auto [i, c] : entries) v[i] = c;
    return v;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(e(n + 1, {{i, 2}, {i + 1, -2}}));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 2}, {i + 1, -2}}));
      s.push_back(e(n, {{n - 1, 2}}));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 2}, {i + 1, -2}}));
      s.push_back(e(n, {{n - 1, 4}}));
      break;
    case 'D':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 2}, {i + 1, -2}}));
      s.push_back(e(n, {{n - 2, 2}, {n - 1, 2}}));
      break;
    case 'G':
      s.push_back(e(3, {{0, 2}, {1, -2}}));
      s.push_back(e(3, {{0, -4}, {1, 2}, {2, 2}}));
      break;
    case 'F':
      s.push_back(e(4, {{1, 2}, {2, -2}}));
      s.push_back(e(4, {{2, 2}, {3, -2}}));
      s.push_back(e(4, {{3, 2}}));
      s.push_back(e(4, {{0, 1}, {1, -1}, {2, -1}, {3, -1}}));
      break;
    case 'E': {
      std::vector<IntVector> e8;
      e8.push_back(IntVector{1, -1, -1, -1, -1, -1, -1, 1});
      e8.push_back(e(8, {{0, 2}, {1, 2}}));
      for (int i = 0; i < 6; ++i) e8.push_back(e(8, {{i + 1, 2}, {i, -2}}));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return s;
}

long long edot(const IntVector& a, const IntVector& b) { return dot(a, b); }

IntVector ereflect(const IntVector& a, const IntVector& b) {
  const long long k = 2 * edot(a, b) / edot(a, a);
  return sub(b, scale(k, a));
}

std::set<IntVector> euclidean_closure(const std::vector<IntVector>& simple) {
  std::set<IntVector> roots(simple.begin(), simple.end());
  std::vector<IntVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    IntVector r = queue.back();
    queue.pop_back();
    for (const IntVector& a : simple) {
      IntVector img = ereflect(a, r);
      if (roots.insert(img).second) queue.push_back(img);
    }
  }
  return roots;
}

IntVector combine(const std::vector<IntVector>& simple, const IntVector& coeffs) {
  IntVector v(simple.front().size(), 0);
  for (std::size_t i = 0; i < simple.size(); ++i) v = add(v, scale(coeffs[i], simple[i]));
  return v;
}

struct TypeCase {
  const char* spec;
  char family;
  int rank;
  std::size_t roots;
  long long weyl;
};

const TypeCase kTypes[] = {
    {"A1", 'A', 1, 2, 2},      {"A2", 'A', 2, 6, 6},        {"A3", 'A', 3, 12, 24},
    {"A4", 'A', 4, 20, 120},   {"B2", 'B', 2, 8, 8},        {"B3", 'B', 3, 18, 48},
    {"B4", 'B', 4, 32, 384},   {"C3", 'C', 3, 18, 48},      {"C4", 'C', 4, 32, 384},
    {"D4", 'D', 4, 24, 192},   {"D5", 'D', 5, 40, 1920},    {"G2", 'G', 2, 12, 12},
    {"F4", 'F', 4, 48, 1152},  {"E6", 'E', 6, 72, 51840},   {"E7", 'E', 7, 126, 2903040},
    {"E8", 'E', 8, 240, 696729600},
};

}  // namespace

TEST_CASE("Cartan matrices match Euclidean realizations") {
  for (const TypeCase& tc : kTypes) {
    CAPTURE(std::string(tc.spec));
    const RootSystem rs = build_root_system(tc.spec);
    REQUIRE(rs.rank == tc.rank);
    const auto simple = euclidean_simple_roots(tc.family, tc.rank);
    for (int i = 0; i < tc.rank; ++i)
      for (int j = 0; j < tc.rank; ++j)
        CHECK(rs.cartan(i, j) == 2 * edot(simple[i], simple[j]) / edot(simple[i], simple[i]));
  }
}

TEST_CASE("root lists agree with the Euclidean reflection closure") {
  for (const TypeCase& tc : kTypes) {
    CAPTURE(std::string(tc.spec));
    const RootSystem rs = build_root_system(tc.spec);
    const auto simple = euclidean_simple_roots(tc.family, tc.rank);
    const auto closure = euclidean_closure(simple);
    CHECK(closure.size() == tc.roots);
    CHECK(rs.roots.size() == tc.roots);
    std::set<IntVector> mapped;
    for (const Root& r : rs.roots) mapped.insert(combine(simple, r.root_coords));
    CHECK(mapped == closure);
    CHECK(rs.positive_root_indices().size() == tc.roots / 2);
  }
}

TEST_CASE("Gram matrix of coroots matches the Euclidean form") {
  for (const TypeCase& tc : kTypes) {
    CAPTURE(std::string(tc.spec));
    const RootSystem rs = build_root_system(tc.spec);
    const auto simple = euclidean_simple_roots(tc.family, tc.rank);
    long long shortest = edot(simple[0], simple[0]);
    for (const auto& a : simple) shortest = std::min(shortest, edot(a, a));
    // Library normalization: short roots have squared length 2.
    auto form = [&](const IntVector& a, const IntVector& b) {
      return Rational(2 * edot(a, b), shortest);
    };
    for (int j = 0; j < tc.rank; ++j)
      for (int k = 0; k < tc.rank; ++k) {
        const Rational ajk = form(simple[j], simple[k]);
        const Rational ajj = form(simple[j], simple[j]);
        const Rational akk = form(simple[k], simple[k]);
        CHECK(rs.gram(j, k) == Rational(4) * ajk / (ajj * akk));
      }
  }
}

TEST_CASE("reducible types are block diagonal") {
  const RootSystem rs = build_root_system("A1xA1");
  CHECK(rs.cartan(0, 1) == 0);
  CHECK(rs.cartan(1, 0) == 0);
  CHECK(rs.roots.size() == 4);
  CHECK(rs.components.size() == 2);
  const RootSystem mixed = build_root_system("A2xG2");
  CHECK(mixed.rank == 4);
  CHECK(mixed.roots.size() == 18);
  CHECK(weyl_group_order_estimate(mixed) == 72);
}

TEST_CASE("highest roots") {
  CHECK(build_root_system("A2").highest_root(0).root_coords == IntVector{1, 1});
  CHECK(build_root_system("B2").highest_root(0).root_coords == IntVector{1, 2});
  CHECK(build_root_system("C3").highest_root(0).root_coords == IntVector{2, 2, 1});
  CHECK(build_root_system("G2").highest_root(0).root_coords == IntVector{3, 2});
  CHECK(build_root_system("F4").highest_root(0).root_coords == IntVector{2, 3, 4, 2});
  CHECK(build_root_system("E8").highest_root(0).root_coords ==
        IntVector{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("axioms hold for every supported type") {
  for (const TypeCase& tc : kTypes) {
    CAPTURE(std::string(tc.spec));
    CHECK(verify_axioms(build_root_system(tc.spec)).all_passed());
  }
}

TEST_CASE("a corrupted root list fails the axioms") {
  RootSystem rs = build_root_system("B2");
  const auto victim = rs.find_root(scale(-1, rs.simple_root(1).weight_coords));
  REQUIRE(victim);
  rs.roots.erase(rs.roots.begin() + static_cast<long>(*victim));
  const AxiomReport rep = verify_axioms(rs);
  CHECK_FALSE(rep.all_passed());
  bool some_witness = false;
  for (const auto& r : rep.results)
    if (!r.passed) some_witness = some_witness || !r.witness.empty();
  CHECK(some_witness);

  RootSystem doubled = build_root_system("A1");
  Root twice = doubled.roots[0];
  twice.root_coords = scale(2, twice.root_coords);
  twice.weight_coords = scale(2, twice.weight_coords);
  doubled.roots.push_back(twice);
  CHECK_FALSE(verify_axioms(doubled).all_passed());
}

TEST_CASE("Weyl group orders") {
  for (const TypeCase& tc : kTypes) {
    CAPTURE(std::string(tc.spec));
    const RootSystem rs = build_root_system(tc.spec);
    CHECK(weyl_group_order_estimate(rs) == tc.weyl);
    if (tc.weyl <= 1152) {
      CHECK(weyl_group_elements(rs).size() == static_cast<std::size_t>(tc.weyl));
    }
    if (tc.weyl <= 60000) {
      // A regular weight has a free orbit.
      CHECK(orbit(rs, IntVector(tc.rank, 1)).size() == static_cast<std::size_t>(tc.weyl));
    }
  }
  CHECK_THROWS_AS(weyl_group_elements(build_root_system("E6")), CapExceeded);
}

TEST_CASE("Weyl elements preserve roots and the pairing") {
  for (const char* spec : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(std::string(spec));
    const RootSystem rs = build_root_system(spec);
    std::set<IntVector> roots;
    for (const Root& r : rs.roots) roots.insert(r.weight_coords);
    const IntVector x{3, -1, 2};
    for (const WeylElement& w : weyl_group_elements(rs)) {
      for (const Root& r : rs.roots) CHECK(roots.count(w.weight_matrix.apply(r.weight_coords)));
      const IntVector lam(x.begin(), x.begin() + rs.rank);
      const IntVector pt(rs.rank, 1);
      CHECK(dot(w.weight_matrix.apply(lam), w.coroot_matrix.apply(pt)) == dot(lam, pt));
      // The coroot Gram matrix is W-invariant.
      const RationalMatrix m = to_rational(w.coroot_matrix);
      CHECK(m.transpose() * rs.gram * m == rs.gram);
      CHECK((w * w.inverse()).is_identity());
    }
  }
}

TEST_CASE("reflections") {
  const RootSystem rs = build_root_system("A2");
  const Root& a1 = rs.simple_root(0);
  const RationalVector x{Rational(1, 3), Rational(2, 5)};
  const RationalVector y = reflect(a1, 1, x);
  CHECK(reflect(a1, 1, y) == x);
  // Pairing flips about ell.
  CHECK(dot(a1.weight_coords, y) == Rational(2) - dot(a1.weight_coords, x));
  const RationalVector wall{Rational(1), Rational(1)};  // <alpha_1, x> = 1
  CHECK(reflect(a1, 1, wall) == wall);
  CHECK(reflect(a1, 0, wall) != wall);
  CHECK(simple_reflection(rs, 0).weight_matrix.apply(a1.weight_coords) ==
        scale(-1, a1.weight_coords));
  for (const Root& v : rs.roots) CHECK((root_reflection(v) * root_reflection(v)).is_identity());
}

TEST_CASE("dominant representative") {
  const RootSystem rs = build_root_system("A2");
  const DominantRep rep = dominant_rep(rs, {-1, 1});
  CHECK(rep.dominant == IntVector{1, 0});
  CHECK(rep.element == simple_reflection(rs, 0));
  CHECK(rep.element.weight_matrix.apply(IntVector{-1, 1}) == rep.dominant);
  for (const char* spec : {"B2", "G2", "C3"}) {
    const RootSystem r = build_root_system(spec);
    for (const IntVector& lam : orbit(r, IntVector(r.rank, 1))) {
      const DominantRep d = dominant_rep(r, lam);
      CHECK(d.dominant == IntVector(r.rank, 1));
      CHECK(is_dominant(d.dominant));
    }
  }
}

TEST_CASE("affine group law") {
  const RootSystem rs = build_root_system("B2");
  const auto weyl = weyl_group_elements(rs);
  const AffineElement g1{weyl[3], {1, -2}};
  const AffineElement g2{weyl[5], {0, 3}};
  const RationalVector x{Rational(1, 7), Rational(-2, 9)};
  CHECK(affine_apply(affine_compose(g1, g2), x) == affine_apply(g1, affine_apply(g2, x)));
  CHECK(affine_compose(g1, affine_inverse(g1)).is_identity());
  CHECK(affine_compose(affine_inverse(g2), g2).is_identity());
  // rho_{v,ell} is the reflection in the wall <v, x> = ell.
  for (const Root& v : rs.roots) {
    const AffineElement r = affine_reflection(v, 2);
    CHECK(affine_apply(r, x) == reflect(v, 2, x));
    CHECK(affine_compose(r, r).is_identity());
  }
}

TEST_CASE("affine generators produce the coroot translations") {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(std::string(spec));
    const RootSystem rs = build_root_system(spec);
    const auto gens = affine_generators(rs);
    REQUIRE(gens.size() == static_cast<std::size_t>(rs.rank + 1));
    const Root& theta = rs.highest_root(0);
    // s0 s_theta is the translation by theta^vee.
    const AffineElement prod =
        affine_compose(gens.back().element, AffineElement::linear(root_reflection(theta)));
    CHECK(prod == AffineElement::translation(theta.coroot_coords));

    // Breadth-first search over short words reaches every unit coroot translation.
    std::set<AffineElement> ball{AffineElement::identity(rs.rank)};
    std::vector<AffineElement> frontier(ball.begin(), ball.end());
    for (int len = 0; len < 12; ++len) {
      std::vector<AffineElement> next;
      for (const auto& g : frontier)
        for (const auto& s : gens) {
          AffineElement h = affine_compose(g, s.element);
          if (ball.insert(h).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    for (int k = 0; k < rs.rank; ++k) {
      IntVector t(rs.rank, 0);
      t[k] = 1;
      CHECK(ball.count(AffineElement::translation(t)));
    }
  }
}

TEST_CASE("type spec errors") {
  CHECK_THROWS_AS(build_root_system("Z9"), ParseError);
  CHECK_THROWS_AS(build_root_system(""), ParseError);
  CHECK_THROWS_AS(build_root_system("A2x"), ParseError);
  CHECK_THROWS_AS(build_root_system("A"), ParseError);
  CHECK_THROWS_AS(build_root_system("A2B2"), ParseError);
  CHECK_THROWS_AS(build_root_system("B1"), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system("E9"), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system("G3"), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system("D2"), UnsupportedRank);
}
