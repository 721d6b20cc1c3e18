#include "chebimg/monodromy.hpp"

#include "chebimg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace chebimg {

namespace {

long long checked_power(long long base, long long exp, long long limit) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > limit / base) return -1;
    r *= base;
  }
  return r;
}

struct PermHash {
  std::size_t operator()(const std::vector<std::int32_t>& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : p) h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

LevelAction LevelAction::identity(int n, long long d, int level) {
  LevelAction a{level, d, n, {}};
  a.perm.resize(vertex_count(n, d, level, std::numeric_limits<std::size_t>::max()));
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

bool LevelAction::is_bijection() const {
  std::vector<char> seen(perm.size(), 0);
  for (std::int32_t x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= perm.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool LevelAction::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

std::size_t vertex_count(int n, long long d, int k, std::size_t cap) {
  if (n < 1 || d < 1 || k < 0) throw std::invalid_argument("vertex_count: invalid arguments");
  const long long limit = static_cast<long long>(std::min<std::size_t>(cap, 1ull << 31));
  const long long count = checked_power(d, static_cast<long long>(k) * n, limit);
  if (count < 0 || static_cast<std::size_t>(count) > cap) {
    std::ostringstream os;
    os << "level " << k << " has " << d << "^" << (k * n) << " vertices, exceeding the cap of "
       << cap;
    throw CapExceeded(os.str());
  }
  return static_cast<std::size_t>(count);
}

IntVector decode_vertex(std::size_t index, int n, long long modulus) {
  IntVector u(n);
  for (int j = 0; j < n; ++j) {
    u[j] = static_cast<long long>(index % modulus);
    index /= modulus;
  }
  return u;
}

std::size_t encode_vertex(const IntVector& u, long long modulus) {
  std::size_t index = 0;
  for (std::size_t j = u.size(); j-- > 0;)
    index = index * modulus + static_cast<std::size_t>(floor_mod(u[j], modulus));
  return index;
}

LevelAction compose(const LevelAction& outer, const LevelAction& inner) {
  if (outer.perm.size() != inner.perm.size())
    throw DimensionMismatch("compose: actions live on different levels");
  LevelAction r{inner.level, inner.d, inner.n, std::vector<std::int32_t>(inner.perm.size())};
  kernels::compose_permutations(outer.perm, inner.perm, r.perm);
  return r;
}

LevelAction project(const LevelAction& a, int level) {
  if (level < 0 || level > a.level) throw std::invalid_argument("project: bad level");
  const long long big = checked_power(a.d, a.level, 1ll << 40);
  const long long small = checked_power(a.d, level, 1ll << 40);
  LevelAction r{level, a.d, a.n,
                std::vector<std::int32_t>(vertex_count(a.n, a.d, level, a.perm.size()), -1)};
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    const std::size_t from = encode_vertex(decode_vertex(i, a.n, big), small);
    const std::size_t to = encode_vertex(decode_vertex(a.perm[i], a.n, big), small);
    if (r.perm[from] == -1) {
      r.perm[from] = static_cast<std::int32_t>(to);
    } else if (r.perm[from] != static_cast<std::int32_t>(to)) {
      throw std::logic_error("project: action does not respect the level projection");
    }
  }
  return r;
}

BigInt permutation_order(const LevelAction& a) {
  std::vector<char> seen(a.perm.size(), 0);
  BigInt order = 1;
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a.perm[j])) {
      seen[j] = 1;
      ++len;
    }
    order = boost::multiprecision::lcm(order, BigInt(len));
  }
  return order;
}

Basepoint basepoint(const GeneralizedCosine& psi) {
  const RootSystem& rs = psi.root_system();
  // rho^vee: the point pairing to 1 with every simple root, so <v, rho^vee> = height(v).
  const RationalMatrix ct_inv = inverse(to_rational(rs.cartan).transpose());
  long long h = 1;
  for (const Root& r : rs.roots) h = std::max(h, r.height());
  Basepoint b;
  b.y0.assign(rs.rank, Rational(0));
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) b.y0[i] += ct_inv(i, j);
    b.y0[i] /= Rational(3 * h);
  }
  b.x0 = psi.eval(to_complex(b.y0));
  return b;
}

LevelAction algebraic_action(const AffineElement& g, long long d, int k, std::size_t cap) {
  const int n = static_cast<int>(g.t.size());
  if (k < 1) throw std::invalid_argument("algebraic_action: level must be >= 1");
  LevelAction a{k, d, n, std::vector<std::int32_t>(vertex_count(n, d, k, cap))};
  const IntMatrix h_inv = g.w.inverse().coroot_matrix;
  const std::vector<std::int64_t> matrix(h_inv.data().begin(), h_inv.data().end());
  const std::vector<std::int64_t> shift(g.t.begin(), g.t.end());
  kernels::affine_label_map({n, checked_power(d, k, 1ll << 40), matrix, shift}, a.perm);
  return a;
}

IntVector coset_label(const AffineElement& g, long long modulus) {
  const AffineElement normalized = affine_compose(AffineElement::linear(g.w.inverse()), g);
  IntVector u = normalized.t;
  for (auto& x : u) x = floor_mod(x, modulus);
  return u;
}

WreathStep wreath_digit_step(const AffineElement& g, long long d, const IntVector& letter) {
  if (letter.size() != g.t.size()) throw DimensionMismatch("wreath_digit_step: letter size");
  const IntVector v = g.w.inverse().coroot_matrix.apply(add(letter, g.t));
  WreathStep step;
  step.letter.resize(v.size());
  IntVector carry(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    step.letter[j] = floor_mod(v[j], d);
    carry[j] = (v[j] - step.letter[j]) / d;
  }
  step.child = {g.w, g.w.coroot_matrix.apply(carry)};
  return step;
}

Loop make_generator_loop(const GeneralizedCosine& psi, const AffineElement& g,
                         const Basepoint& base, double epsilon, const std::string& name) {
  const RationalVector gy = affine_apply(g, base.y0);
  if (gy == base.y0) throw std::invalid_argument("make_generator_loop: g fixes the basepoint");
  auto shared = std::make_shared<const GeneralizedCosine>(psi);
  const ComplexVector y0 = to_complex(base.y0);
  const ComplexVector y1 = to_complex(gy);
  const ComplexVector u = to_complex(regular_direction(psi.root_system()));
  Loop loop;
  loop.name = name.empty() ? describe(g) : name;
  loop.x0 = base.x0;
  loop.y_start = y0;
  loop.label = g;
  loop.path = [shared, y0, y1, u, epsilon](double t) {
    const double bump = epsilon * std::sin(std::numbers::pi * t);
    ComplexVector y(y0.size());
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = (1.0 - t) * y0[j] + t * y1[j] + Complex(0.0, bump) * u[j];
    return shared->eval(y);
  };
  return loop;
}

Loop concatenate(const Loop& a, const Loop& b) {
  Loop r;
  r.name = a.name + "*" + b.name;
  r.x0 = a.x0;
  r.y_start = a.y_start;
  if (a.label && b.label) r.label = affine_compose(*a.label, *b.label);
  r.path = [pa = a.path, pb = b.path](double t) { return t < 0.5 ? pa(2.0 * t) : pb(2.0 * t - 1.0); };
  return r;
}

Loop reverse(const Loop& a) {
  Loop r = a;
  r.name = a.name + "^-1";
  if (a.label) r.label = affine_inverse(*a.label);
  r.path = [pa = a.path](double t) { return pa(1.0 - t); };
  return r;
}

std::pair<Loop, Loop> a1_paper_loops(const GeneralizedCosine& psi, const Basepoint& base) {
  const RootSystem& rs = psi.root_system();
  if (rs.rank != 1) throw std::invalid_argument("a1_paper_loops: requires A1");
  const Complex x0 = base.x0[0];
  auto make = [&](double sign, const std::string& name) {
    Loop loop;
    loop.name = name;
    loop.x0 = base.x0;
    loop.y_start = to_complex(base.y0);
    loop.path = [x0, sign](double t) {
      // x0 -> 0, around sign * 2, 0 -> x0
      if (t < 1.0 / 3.0) return ComplexVector{x0 * (1.0 - 3.0 * t)};
      if (t > 2.0 / 3.0) return ComplexVector{x0 * (3.0 * t - 2.0)};
      const double s = 3.0 * t - 1.0;
      return ComplexVector{sign * 2.0 * (1.0 - std::exp(Complex(0.0, 2.0 * std::numbers::pi * s)))};
    };
    return loop;
  };
  return {make(1.0, "gamma+"), make(-1.0, "gamma-")};
}

namespace {

LevelAction level_from_deck(const AffineElement& deck, long long d, int k, std::size_t cap) {
  const int n = static_cast<int>(deck.t.size());
  const long long modulus = checked_power(d, k, 1ll << 40);
  LevelAction a{k, d, n, std::vector<std::int32_t>(vertex_count(n, d, k, cap))};
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    const AffineElement moved =
        affine_compose(AffineElement::translation(decode_vertex(i, n, modulus)), deck);
    a.perm[i] = static_cast<std::int32_t>(encode_vertex(coset_label(moved, modulus), modulus));
  }
  return a;
}

// Lifts the loop through T from every level-1 vertex and matches endpoints.
LevelAction direct_level1(const GeneralizedCosine& psi, const PolynomialMap& t_map,
                          const Loop& loop, long long d, const LiftSettings& base_settings) {
  const int n = psi.rank();
  const std::size_t count = vertex_count(n, d, 1);
  std::vector<ComplexVector> fiber(count);
  const ComplexVector& y0c = loop.y_start;
  for (std::size_t i = 0; i < count; ++i) {
    const IntVector u = decode_vertex(i, n, d);
    ComplexVector y(n);
    for (int j = 0; j < n; ++j) y[j] = (y0c[j] + static_cast<double>(u[j])) / static_cast<double>(d);
    fiber[i] = psi.eval(y);
  }
  double separation = INFINITY;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      separation = std::min(separation, inf_norm(fiber[i] - fiber[j]));

  const auto jac = jacobian_polynomials(t_map);
  ContinuationProblem problem;
  problem.value = [&t_map](const ComplexVector& z) { return eval_poly_map(t_map, z); };
  problem.jacobian = [&jac](const ComplexVector& z) { return eval_jacobian(jac, z); };
  LiftSettings settings = base_settings;
  settings.initial_step = std::min(settings.initial_step, 1.0 / 256.0);
  settings.min_step = std::min(settings.min_step, settings.initial_step);

  LevelAction a{1, d, n, std::vector<std::int32_t>(count, -1)};
  for (std::size_t i = 0; i < count; ++i) {
    const PathSample lift = track_path(problem, loop.path, fiber[i], settings);
    std::size_t best = 0;
    double best_dist = INFINITY;
    for (std::size_t j = 0; j < count; ++j) {
      const double dist = inf_norm(lift.end() - fiber[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best_dist > 1e-3 * separation)
      throw ContinuationFailure("level-1 lift through T did not end on the fiber");
    a.perm[i] = static_cast<std::int32_t>(best);
  }
  return a;
}

}  // namespace

NumericMonodromy numeric_monodromy(const GeneralizedCosine& psi,
                                   const std::vector<WeylElement>& weyl,
                                   const PolynomialMap& t_map, const Loop& loop, int levels,
                                   const NumericOptions& opts) {
  const RootSystem& rs = psi.root_system();
  const int n = rs.rank;
  const long long d = t_map.d;
  if (levels < 1) throw std::invalid_argument("numeric_monodromy: levels must be >= 1");
  vertex_count(n, d, levels, opts.cap_vertices);

  const PathSample lift = lift_path_psi(psi, loop.path, loop.y_start, opts.settings);
  NumericMonodromy out{deck_identify(rs, weyl, loop.y_start, lift.end(), opts.deck_tol), {}};

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick_w(0, weyl.size() - 1);
  std::uniform_int_distribution<long long> pick_shift(-1, 1);
  for (int k = 1; k <= levels; ++k) {
    LevelAction a = level_from_deck(out.deck, d, k, opts.cap_vertices);
    const long long modulus = checked_power(d, k, 1ll << 40);
    // Lift from another preimage g y0 of x0 whose vertex label is u; the
    // endpoint's label must be the image of u.
    std::uniform_int_distribution<std::size_t> pick_u(0, a.perm.size() - 1);
    for (std::size_t s = 0; s < opts.spot_checks; ++s) {
      const std::size_t index = pick_u(rng);
      const WeylElement& w = weyl[pick_w(rng)];
      IntVector shift = decode_vertex(index, n, modulus);
      for (auto& x : shift) x += modulus * pick_shift(rng);
      const AffineElement start{w, w.coroot_matrix.apply(shift)};
      const PathSample l = lift_path_psi(psi, loop.path, affine_apply(start, loop.y_start), opts.settings);
      const AffineElement end = deck_identify(rs, weyl, loop.y_start, l.end(), opts.deck_tol);
      ++out.spot_checks;
      if (encode_vertex(coset_label(end, modulus), modulus) != static_cast<std::size_t>(a.perm[index]))
        ++out.spot_failures;
    }
    out.levels.push_back(std::move(a));
  }

  if (opts.level1_direct) {
    const LevelAction direct = direct_level1(psi, t_map, loop, d, opts.settings);
    out.direct_checked = direct.perm.size();
    for (std::size_t i = 0; i < direct.perm.size(); ++i)
      if (direct.perm[i] != out.levels[0].perm[i]) ++out.direct_failures;
  }
  return out;
}

BigInt generated_group_order(const std::vector<LevelAction>& generators, std::size_t cap) {
  if (generators.empty()) return 1;
  const LevelAction& first = generators.front();
  for (const LevelAction& g : generators)
    if (g.perm.size() != first.perm.size())
      throw DimensionMismatch("generated_group_order: generators act on different levels");
  const std::size_t vertices = first.perm.size();
  std::unordered_set<std::vector<std::int32_t>, PermHash> seen;
  std::vector<const std::vector<std::int32_t>*> queue;
  const LevelAction id = LevelAction::identity(first.n, first.d, first.level);
  queue.push_back(&*seen.insert(id.perm).first);
  std::vector<std::int32_t> product(vertices);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<std::int32_t>& current = *queue[head];
    for (const LevelAction& g : generators) {
      kernels::compose_permutations(g.perm, current, product);
      if (seen.count(product)) continue;
      if (seen.size() + 1 > cap ||
          static_cast<double>(seen.size() + 1) * static_cast<double>(vertices) > kGroupMemoryBudget)
        throw CapExceeded("generated_group_order: more than " + std::to_string(seen.size()) +
                          " elements on " + std::to_string(vertices) + " vertices exceeds the cap");
      queue.push_back(&*seen.insert(product).first);
    }
  }
  return BigInt(seen.size());
}

std::vector<NamedGenerator> affine_generators(const RootSystem& rs) {
  std::vector<NamedGenerator> gens;
  for (int i = 0; i < rs.rank; ++i)
    gens.push_back({"s" + std::to_string(i + 1), AffineElement::linear(simple_reflection(rs, i))});
  for (std::size_t c = 0; c < rs.components.size(); ++c)
    gens.push_back({c == 0 ? "s0" : "s0_" + std::to_string(c + 1),
                    affine_reflection(rs.highest_root(c), 1)});
  return gens;
}

std::optional<long long> element_order(const AffineElement& g, long long limit) {
  AffineElement p = g;
  for (long long m = 1; m <= limit; ++m) {
    if (p.is_identity()) return m;
    p = affine_compose(p, g);
  }
  return std::nullopt;
}

bool GeneratorResult::passed() const {
  return recovered == label && std::all_of(equal.begin(), equal.end(), [](bool b) { return b; }) &&
         spot_failures == 0 && direct_failures == 0 && involution;
}

void check_img_size(const RootSystem& rs, long long d, int levels, const ImgOptions& opts) {
  if (d < 2) throw std::invalid_argument("img-verify: d must be >= 2");
  if (levels < 1) throw std::invalid_argument("img-verify: levels must be >= 1");
  const std::size_t vertices = vertex_count(rs.rank, d, levels, opts.numeric.cap_vertices);
  const BigInt weyl = weyl_group_order_estimate(rs);
  if (weyl > kDefaultWeylCap)
    throw CapExceeded("img-verify: Weyl group of " + rs.type_spec + " has " + weyl.str() +
                      " elements, exceeding the cap of " + std::to_string(kDefaultWeylCap));
  // The level-K image is a subgroup of (Z/d^K)^n x| W.
  const double bound = static_cast<double>(vertices) * weyl.convert_to<double>();
  std::ostringstream os;
  os << "img-verify " << rs.type_spec << " d=" << d << " K=" << levels << ": " << vertices
     << " vertices, group order up to " << static_cast<long long>(bound);
  if (bound > static_cast<double>(opts.cap_group))
    throw CapExceeded(os.str() + ", exceeding the group cap of " + std::to_string(opts.cap_group));
  if (bound * static_cast<double>(vertices) > kGroupMemoryBudget)
    throw CapExceeded(os.str() + "; storing the closure needs up to " +
                      std::to_string(static_cast<long long>(bound * vertices)) +
                      " entries, exceeding the budget of " +
                      std::to_string(static_cast<long long>(kGroupMemoryBudget)));
}

MonodromyReport img_verification(const RootSystem& rs, long long d, int levels,
                                 const ImgOptions& opts) {
  check_img_size(rs, d, levels, opts);
  const GeneralizedCosine psi(rs);
  const std::vector<WeylElement> weyl = weyl_group_elements(rs);
  const Basepoint base = basepoint(psi);
  const PolynomialMap t_map = build_cheb_map(rs, d);

  MonodromyReport rep;
  rep.type_spec = rs.type_spec;
  rep.d = d;
  rep.levels = levels;
  rep.y0 = base.y0;

  std::uint64_t seed = opts.numeric.seed;
  for (const NamedGenerator& g : affine_generators(rs)) {
    const Loop loop = make_generator_loop(psi, g.element, base, opts.epsilon, g.name);
    NumericOptions nopts = opts.numeric;
    nopts.seed = seed++;
    const NumericMonodromy nm = numeric_monodromy(psi, weyl, t_map, loop, levels, nopts);
    GeneratorResult gr;
    gr.name = g.name;
    gr.label = g.element;
    gr.recovered = nm.deck;
    gr.numeric = nm.levels;
    gr.spot_checks = nm.spot_checks;
    gr.spot_failures = nm.spot_failures;
    gr.direct_checked = nm.direct_checked;
    gr.direct_failures = nm.direct_failures;
    for (int k = 1; k <= levels; ++k) {
      gr.algebraic.push_back(algebraic_action(g.element, d, k, opts.numeric.cap_vertices));
      gr.equal.push_back(gr.numeric[k - 1] == gr.algebraic[k - 1]);
      const LevelAction& a = gr.numeric[k - 1];
      if (!compose(a, a).is_identity()) gr.involution = false;
      if (k >= 2) {
        try {
          if (!(project(a, k - 1) == gr.numeric[k - 2])) rep.projection_compatible = false;
        } catch (const std::logic_error&) {
          rep.projection_compatible = false;
        }
      }
    }
    rep.generators.push_back(std::move(gr));
  }

  const auto gens = affine_generators(rs);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto m = element_order(affine_compose(gens[i].element, gens[j].element));
      if (!m) continue;  // infinite order: no relation
      RelationResult rel{i, j, *m, {}};
      for (int k = 0; k < levels; ++k) {
        const LevelAction q = compose(rep.generators[j].numeric[k], rep.generators[i].numeric[k]);
        LevelAction p = LevelAction::identity(q.n, q.d, q.level);
        for (long long r = 0; r < *m; ++r) p = compose(q, p);
        rel.holds.push_back(p.is_identity());
      }
      rep.relations.push_back(std::move(rel));
    }

  for (int k = 0; k < levels; ++k) {
    std::vector<LevelAction> num, alg;
    for (const GeneratorResult& gr : rep.generators) {
      num.push_back(gr.numeric[k]);
      alg.push_back(gr.algebraic[k]);
    }
    rep.numeric_orders.push_back(generated_group_order(num, opts.cap_group));
    rep.algebraic_orders.push_back(generated_group_order(alg, opts.cap_group));
  }

  rep.passed = rep.projection_compatible && rep.numeric_orders == rep.algebraic_orders;
  for (const GeneratorResult& gr : rep.generators) rep.passed = rep.passed && gr.passed();
  for (const RelationResult& rel : rep.relations)
    for (bool h : rel.holds) rep.passed = rep.passed && h;
  return rep;
}

}  // namespace chebimg
