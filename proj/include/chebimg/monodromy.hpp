#pragma once

// Iterated monodromy of T = T_{Phi,d}, computed two ways.
//
// Vertex model: level-k vertices are the points Psi((y0 + u) / d^k) with
// u in (Z/d^k Z)^n, indexed mixed-radix (coordinate 0 least significant).
// If a loop lifts through Psi from y0 to g y0 with g = (t, w), its lift
// through T^k from vertex u ends at vertex w^{-1}(u + t) mod d^k. The map
// g -> E_g reverses products: E_{g1 g2} = E_{g2} o E_{g1}, matching the
// loop convention "gamma1 then gamma2" -> action(gamma2) o action(gamma1).
//
// The algebraic engine evaluates E_g with the label-map kernel. The numeric
// engine lifts loops, identifies deck elements, and checks vertex images by
// direct lifting through Psi and, at level 1, through T itself.

#include "chebimg/chebmap.hpp"
#include "chebimg/continuation.hpp"
#include "chebimg/gencos.hpp"
#include "chebimg/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chebimg {

inline constexpr std::size_t kDefaultVertexCap = 100000;
inline constexpr std::size_t kDefaultGroupCap = 1000000;
// Upper bound on (group elements) x (vertices) stored by the order BFS.
inline constexpr double kGroupMemoryBudget = 1e8;

struct LevelAction {
  int level = 0;
  long long d = 0;
  int n = 0;
  std::vector<std::int32_t> perm;  // perm[index(u)] = index(image of u)

  static LevelAction identity(int n, long long d, int level);
  bool is_bijection() const;
  bool is_identity() const;
  friend bool operator==(const LevelAction&, const LevelAction&) = default;
};

// d^(k n); throws CapExceeded above cap.
std::size_t vertex_count(int n, long long d, int k, std::size_t cap = kDefaultVertexCap);

IntVector decode_vertex(std::size_t index, int n, long long modulus);
std::size_t encode_vertex(const IntVector& u, long long modulus);

// (outer o inner)
LevelAction compose(const LevelAction& outer, const LevelAction& inner);
// Induced action on level `level` < a.level; throws std::logic_error if the
// action does not respect the projection u -> u mod d^level.
LevelAction project(const LevelAction& a, int level);
BigInt permutation_order(const LevelAction& a);

struct Basepoint {
  RationalVector y0;
  ComplexVector x0;
};

// y0 = rho^vee / (3 h): rho^vee pairs to height(v) with every root v and h is
// the largest height, so 0 < <v, y0> <= 1/3 for positive v.
Basepoint basepoint(const GeneralizedCosine& psi);

LevelAction algebraic_action(const AffineElement& g, long long d, int k,
                             std::size_t cap = kDefaultVertexCap);

// Vertex label of the point (g y0) / d^k, i.e. w^{-1} t mod d^k.
IntVector coset_label(const AffineElement& g, long long modulus);

struct WreathStep {
  IntVector letter;
  AffineElement child;
};
WreathStep wreath_digit_step(const AffineElement& g, long long d, const IntVector& letter);

struct Loop {
  std::string name;
  ComplexVector x0;
  ComplexVector y_start;  // preimage of x0 the lift starts from
  PathFunction path;
  std::optional<AffineElement> label;
};

// gamma(t) = Psi((1-t) y0 + t g y0 + i eps sin(pi t) u), u the regular direction.
Loop make_generator_loop(const GeneralizedCosine& psi, const AffineElement& g,
                         const Basepoint& base, double epsilon = 0.2,
                         const std::string& name = "");

// First a, then b. Labels multiply as a.label * b.label.
Loop concatenate(const Loop& a, const Loop& b);
Loop reverse(const Loop& a);

// The loops gamma_+(s) = 2 (1 - e^{2 pi i s}) and gamma_-(s) = -2 (1 - e^{2 pi i s})
// around the critical values +2 and -2 of the A1 maps, conjugated by the real
// segment from x0 = Psi(y0) = 1 to 0.
std::pair<Loop, Loop> a1_paper_loops(const GeneralizedCosine& psi, const Basepoint& base);

struct NumericOptions {
  LiftSettings settings;
  std::size_t cap_vertices = kDefaultVertexCap;
  std::size_t spot_checks = 6;  // direct Psi lifts per level
  bool level1_direct = true;    // lift every level-1 vertex through T
  std::uint64_t seed = 0;
  double deck_tol = 1e-6;
};

struct NumericMonodromy {
  AffineElement deck;  // lift of the loop from y0 ends at deck . y0
  std::vector<LevelAction> levels;
  std::size_t spot_checks = 0;
  std::size_t spot_failures = 0;
  std::size_t direct_checked = 0;
  std::size_t direct_failures = 0;
  bool consistent() const { return spot_failures == 0 && direct_failures == 0; }
};

// `weyl` is the full Weyl group; `t_map` is T_{Phi,d}, used for the level-1
// direct lifts.
NumericMonodromy numeric_monodromy(const GeneralizedCosine& psi,
                                   const std::vector<WeylElement>& weyl,
                                   const PolynomialMap& t_map, const Loop& loop, int levels,
                                   const NumericOptions& opts = {});

// Order of the permutation group generated by the actions (all at one level).
BigInt generated_group_order(const std::vector<LevelAction>& generators,
                             std::size_t cap = kDefaultGroupCap);

struct NamedGenerator {
  std::string name;
  AffineElement element;
};

// Simple reflections s1..sn, then the reflection in the wall <theta, x> = 1 of
// each irreducible factor (s0, or s0_c for factor c > 1).
std::vector<NamedGenerator> affine_generators(const RootSystem& rs);

// Order of g in the affine Weyl group, or nullopt if it exceeds `limit`
// (infinite order for the pairs that occur here).
std::optional<long long> element_order(const AffineElement& g, long long limit = 12);

struct GeneratorResult {
  std::string name;
  AffineElement label;
  AffineElement recovered;
  std::vector<LevelAction> numeric;
  std::vector<LevelAction> algebraic;
  std::vector<bool> equal;
  std::size_t spot_checks = 0;
  std::size_t spot_failures = 0;
  std::size_t direct_checked = 0;
  std::size_t direct_failures = 0;
  bool involution = true;  // order <= 2 at every level
  bool passed() const;
};

struct RelationResult {
  std::size_t i = 0;
  std::size_t j = 0;
  long long m = 0;  // order of g_i g_j
  std::vector<bool> holds;  // per level, in the numeric image
};

struct MonodromyReport {
  std::string type_spec;
  long long d = 0;
  int levels = 0;
  RationalVector y0;
  std::vector<GeneratorResult> generators;
  std::vector<RelationResult> relations;
  std::vector<BigInt> numeric_orders;
  std::vector<BigInt> algebraic_orders;
  bool projection_compatible = true;
  bool passed = false;
};

struct ImgOptions {
  NumericOptions numeric;
  std::size_t cap_group = kDefaultGroupCap;
  double epsilon = 0.2;
};

// Checks sizes against the caps before doing any work; throws CapExceeded
// with a sizing message.
void check_img_size(const RootSystem& rs, long long d, int levels, const ImgOptions& opts);

MonodromyReport img_verification(const RootSystem& rs, long long d, int levels,
                                 const ImgOptions& opts = {});

}  // namespace chebimg
