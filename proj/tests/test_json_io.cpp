#include "chebimg/json_io.hpp"

#include <doctest.h>

using namespace chebimg;

TEST_CASE("polynomial maps round trip") {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    for (long long d : {2, 3, 5}) {
      CAPTURE(std::string(spec));
      CAPTURE(d);
      const RootSystem rs = build_root_system(spec);
      const InvariantRing ring(rs);
      const PolynomialMap p = build_cheb_map(rs, d);
      const Json j = to_json(p, ring);
      const PolynomialMap back = polynomial_map_from_json(Json::parse(j.dump()));
      CHECK(back == p);
      CHECK(back.d == d);
      CHECK(back.type_spec == spec);
    }
  }
}

TEST_CASE("polynomial text") {
  const RootSystem a2 = build_root_system("A2");
  const InvariantRing ring(a2);
  const PolynomialMap p = build_cheb_map(a2, 2);
  const Json j = to_json(p, ring);
  CHECK(j.at("text")[0] == "X1^2 - 2*X2");
  CHECK(j.at("text")[1] == "X2^2 - 2*X1");
  const RootSystem a1 = build_root_system("A1");
  CHECK(polynomial_to_string(build_cheb_map(a1, 4).components[0], InvariantRing(a1)) ==
        "X1^4 - 4*X1^2 + 2");
  CHECK(polynomial_to_string(Polynomial{}, InvariantRing(a1)) == "0");
}

TEST_CASE("big integers and rationals") {
  CHECK(bigint_json(BigInt(42)) == 42);
  const BigInt big = BigInt(1) << 80;
  CHECK(bigint_json(big) == big.str());
  CHECK(rational_json(Rational(3, 1)) == 3);
  CHECK(rational_json(Rational(-2, 3)) == "-2/3");
}

TEST_CASE("automata round trip") {
  for (const char* spec : {"A1", "A2", "B2"}) {
    CAPTURE(std::string(spec));
    const RootSystem rs = build_root_system(spec);
    std::vector<TreeAutomorphism> gens;
    std::vector<std::string> names;
    for (const NamedGenerator& g : affine_generators(rs)) {
      gens.push_back({g.element, 2, rs.rank});
      names.push_back(g.name);
    }
    const Automaton a = reachable_states(gens, names);
    const Json j = to_json(a);
    const Automaton back = automaton_from_json(Json::parse(j.dump()));
    CHECK(back == a);
    CHECK(to_json(back).dump() == j.dump());
    // The decoded states still act correctly.
    for (std::size_t s = 0; s < a.states.size(); ++s)
      CHECK(algebraic_action(back.states[s], 2, 2) == algebraic_action(a.states[s], 2, 2));
  }
}

TEST_CASE("malformed automaton JSON") {
  Json j = to_json(reachable_states(TreeAutomorphism{AffineElement::translation({1}), 2, 1}));
  j["transitions"][0][1] = 7;
  CHECK_THROWS_AS(automaton_from_json(j), ParseError);
  Json k = to_json(reachable_states(TreeAutomorphism{AffineElement::translation({1}), 2, 1}));
  k["states"][0]["w_matrix"] = Json::array({Json::array({1, 0})});
  CHECK_THROWS_AS(automaton_from_json(k), ParseError);
}

TEST_CASE("root system JSON") {
  const Json j = to_json(build_root_system("B2"));
  CHECK(j.at("type") == "B2");
  CHECK(j.at("rank") == 2);
  CHECK(j.at("cartan") == Json::parse("[[2,-1],[-2,2]]"));
  CHECK(j.at("roots").size() == 8);
  CHECK(j.at("gram")[0][0] == 1);
  CHECK(j.at("gram")[1][1] == 2);
  const Json ax = to_json(verify_axioms(build_root_system("B2")));
  CHECK(ax.at("all_passed") == true);
  CHECK(ax.at("axioms").size() == 4);
}

TEST_CASE("reports serialize deterministically") {
  const MonodromyReport rep = img_verification(build_root_system("A1"), 2, 2);
  const std::string a = to_json(rep).dump();
  const std::string b = to_json(img_verification(build_root_system("A1"), 2, 2)).dump();
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j.at("passed") == true);
  CHECK(j.at("numeric_orders") == Json::parse("[2, 8]"));
}
