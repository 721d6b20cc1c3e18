#include "chebimg/selfsim.hpp"

#include <doctest.h>

#include <random>

using namespace chebimg;

namespace {

TreeWord random_word(std::mt19937_64& rng, long long d, int n, int length) {
  std::uniform_int_distribution<long long> digit(0, d - 1);
  TreeWord w{d, n, {}};
  for (int i = 0; i < length; ++i) {
    IntVector l(n);
    for (auto& x : l) x = digit(rng);
    w.letters.push_back(l);
  }
  return w;
}

TreeWord concat(const TreeWord& a, const TreeWord& b) {
  TreeWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

AffineElement random_element(std::mt19937_64& rng, const RootSystem& rs) {
  const auto weyl = weyl_group_elements(rs);
  std::uniform_int_distribution<std::size_t> pick(0, weyl.size() - 1);
  std::uniform_int_distribution<long long> shift(-6, 6);
  IntVector t(rs.rank);
  for (auto& x : t) x = shift(rng);
  return {weyl[pick(rng)], t};
}

}  // namespace

TEST_CASE("tree words") {
  const TreeWord w = parse_tree_word("0123", 2, 2);
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[1] == IntVector{1, 0});
  CHECK(w.letters[2] == IntVector{0, 1});
  CHECK(w.letters[3] == IntVector{1, 1});
  CHECK(format_tree_word(w) == "0123");
  CHECK(format_tree_word(parse_tree_word("8aF", 4, 2)) == "8af");
  CHECK_THROWS_AS(parse_tree_word("014", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_tree_word("0-1", 2, 1), ParseError);
  CHECK_THROWS_AS(parse_tree_word("0", 3, 4), std::invalid_argument);
  CHECK(parse_tree_word("", 2, 1).letters.empty());
  // First letter is the lowest digit.
  CHECK(word_to_vertex(parse_tree_word("011", 2, 1)) == 6);
  CHECK(format_tree_word(vertex_to_word(6, 1, 2, 3)) == "011");
  for (std::size_t i = 0; i < 81; ++i) CHECK(word_to_vertex(vertex_to_word(i, 2, 3, 2)) == i);
}

TEST_CASE("the unit translation of A1 is the binary odometer") {
  const TreeAutomorphism t{AffineElement::translation({1}), 2, 1};
  AffineElement final_state;
  CHECK(format_tree_word(act_on_word(t, parse_tree_word("111", 2, 1), &final_state)) == "000");
  CHECK(final_state == AffineElement::translation({1}));
  CHECK(format_tree_word(act_on_word(t, parse_tree_word("011", 2, 1), &final_state)) == "111");
  CHECK(final_state.is_identity());
  for (std::size_t v = 0; v < 32; ++v) {
    const TreeWord w = vertex_to_word(v, 1, 2, 5);
    CHECK(word_to_vertex(act_on_word(t, w)) == (v + 1) % 32);
  }
}

TEST_CASE("word action agrees with the label map") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(spec);
    for (long long d : {2, 3}) {
      for (int trial = 0; trial < 25; ++trial, ++checked) {
        const AffineElement g = random_element(rng, rs);
        const TreeAutomorphism a{g, d, rs.rank};
        const TreeWord w = random_word(rng, d, rs.rank, 3);
        const LevelAction lab = algebraic_action(g, d, 3);
        CHECK(word_to_vertex(act_on_word(a, w)) == static_cast<std::size_t>(lab.perm[word_to_vertex(w)]));
      }
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("renormalization: g(wv) = g(w) g|_w(v)") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const char* spec = trial % 2 ? "A2" : "B2";
    const RootSystem rs = build_root_system(spec);
    const long long d = 2 + trial % 2;
    const TreeAutomorphism g{random_element(rng, rs), d, rs.rank};
    const TreeWord w = random_word(rng, d, rs.rank, 2);
    const TreeWord v = random_word(rng, d, rs.rank, 3);
    AffineElement section;
    const TreeWord gw = act_on_word(g, w, &section);
    CHECK(act_on_word(g, concat(w, v)) == concat(gw, act_on_word({section, d, rs.rank}, v)));
  }
}

TEST_CASE("automata are finite") {
  const RootSystem a1 = build_root_system("A1");
  std::vector<TreeAutomorphism> gens;
  std::vector<std::string> names;
  for (const NamedGenerator& g : affine_generators(a1)) {
    gens.push_back({g.element, 2, 1});
    names.push_back(g.name);
  }
  const Automaton a = reachable_states(gens, names);
  CHECK(a.states.size() == 2);
  CHECK(a.generators.size() == 2);

  CHECK(reachable_states(TreeAutomorphism{AffineElement::translation({1}), 2, 1}).states.size() == 2);
  CHECK(reachable_states(TreeAutomorphism{AffineElement::translation({3}), 2, 1}).states.size() == 4);
  CHECK(reachable_states(TreeAutomorphism{AffineElement::identity(1), 2, 1}).states.size() == 1);

  for (const char* spec : {"A2", "B2", "G2"}) {
    for (long long d : {2, 3}) {
      CAPTURE(std::string(spec));
      CAPTURE(d);
      const RootSystem rs = build_root_system(spec);
      std::vector<TreeAutomorphism> g;
      for (const NamedGenerator& s : affine_generators(rs)) g.push_back({s.element, d, rs.rank});
      const Automaton aut = reachable_states(g);
      CHECK(aut.states.size() < 200);
      for (const auto& row : aut.transitions) {
        CHECK(row.size() == alphabet_size(rs.rank, d));
        std::set<std::size_t> images;
        for (const Transition& tr : row) images.insert(tr.image_letter);
        CHECK(images.size() == row.size());
      }
    }
  }
  CHECK_THROWS_AS(reachable_states(TreeAutomorphism{AffineElement::translation({1000}), 2, 1}, 5),
                  CapExceeded);
}

TEST_CASE("orders on levels") {
  const TreeAutomorphism t{AffineElement::translation({1}), 2, 1};
  for (int k = 1; k <= 6; ++k) CHECK(order_on_level(t, k) == BigInt(1) << k);
  const RootSystem a2 = build_root_system("A2");
  for (const NamedGenerator& s : affine_generators(a2))
    for (int k = 1; k <= 3; ++k) CHECK(order_on_level({s.element, 2, 2}, k) <= 2);
  const TreeAutomorphism t3{AffineElement::translation({3}), 2, 1};
  CHECK(element_equal_up_to_level(t, t3, 1));
  CHECK_FALSE(element_equal_up_to_level(t, t3, 2));
}

TEST_CASE("text export") {
  const RootSystem a1 = build_root_system("A1");
  std::vector<TreeAutomorphism> gens;
  for (const NamedGenerator& g : affine_generators(a1)) gens.push_back({g.element, 2, 1});
  const std::string a = export_automaton_text(reachable_states(gens, {"s1", "s0"}));
  CHECK(a == export_automaton_text(reachable_states(gens, {"s1", "s0"})));
  CHECK(a.find("states 2") != std::string::npos);
  CHECK(a.find("generator s1 = q0") != std::string::npos);
}

TEST_CASE("generator words") {
  const RootSystem a2 = build_root_system("A2");
  const auto gens = affine_generators(a2);
  CHECK(parse_generator_word(a2, "id").is_identity());
  CHECK(parse_generator_word(a2, "s1") == gens[0].element);
  CHECK(parse_generator_word(a2, "s0") == gens[2].element);
  CHECK(parse_generator_word(a2, "s1 s2*s0") ==
        affine_compose(affine_compose(gens[0].element, gens[1].element), gens[2].element));
  CHECK(parse_generator_word(a2, "t2") == AffineElement::translation({0, 1}));
  CHECK(parse_generator_word(a2, "t T") == AffineElement::identity(2));
  CHECK(parse_generator_word(a2, "s1.s1").is_identity());
  CHECK_THROWS_AS(parse_generator_word(a2, "s3"), ParseError);
  CHECK_THROWS_AS(parse_generator_word(a2, "x"), ParseError);
  CHECK_THROWS_AS(parse_generator_word(a2, "s"), ParseError);
  CHECK_THROWS_AS(parse_generator_word(a2, "s0_2"), ParseError);
  const RootSystem prod = build_root_system("A1xA1");
  const auto pg = affine_generators(prod);
  CHECK(parse_generator_word(prod, "s0_2") == pg[3].element);
}

TEST_CASE("faithfulness on balls") {
  const struct {
    const char* spec;
    long long d;
  } cases[] = {{"A1", 2}, {"A1", 3}, {"A2", 2}, {"B2", 2}};
  for (const auto& c : cases) {
    CAPTURE(std::string(c.spec));
    CAPTURE(c.d);
    const FaithfulnessReport rep = faithfulness_sweep(build_root_system(c.spec), c.d, 5, 5);
    CHECK(rep.separated);
    CHECK(rep.separating_level >= 1);
    CHECK(rep.separating_level <= 5);
    CHECK(rep.distinct_elements > 5);
    MESSAGE(std::string(c.spec) << " d=" << c.d << ": " << rep.distinct_elements
                   << " elements separated at level " << rep.separating_level);
  }
  // More levels are needed as the ball grows: s1 and s0 agree on level 1 for d = 2.
  const RootSystem a1 = build_root_system("A1");
  const auto g = affine_generators(a1);
  CHECK(element_equal_up_to_level({g[0].element, 2, 1}, {affine_compose(g[0].element,
                                   AffineElement::translation({2})), 2, 1}, 1));
  CHECK_FALSE(faithfulness_sweep(a1, 2, 5, 1).separated);
}
