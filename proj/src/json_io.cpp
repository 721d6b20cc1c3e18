#include "chebimg/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace chebimg {

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t n = j.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (j[r].size() != n) throw ParseError("matrix is not square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = j[r][c].get<long long>();
  }
  return m;
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

std::vector<std::pair<IntVector, BigInt>> sorted_terms(const Polynomial& p,
                                                       const InvariantRing& ring) {
  std::vector<std::pair<IntVector, BigInt>> terms(p.terms.begin(), p.terms.end());
  std::sort(terms.begin(), terms.end(),
            [&ring](const auto& a, const auto& b) { return ring.order_less(b.first, a.first); });
  return terms;
}

Json bool_array(const std::vector<bool>& v) {
  Json a = Json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

}  // namespace

Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type_spec;
  j["rank"] = rs.rank;
  j["cartan"] = matrix_json(rs.cartan);
  Json gram = Json::array();
  for (int r = 0; r < rs.rank; ++r) {
    Json row = Json::array();
    for (int c = 0; c < rs.rank; ++c) row.push_back(rational_json(rs.gram(r, c)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  j["simple_root_indices"] = rs.simple_root_indices;
  Json roots = Json::array();
  for (const Root& r : rs.roots) {
    Json e;
    e["weight_coords"] = r.weight_coords;
    e["coroot_coords"] = r.coroot_coords;
    e["root_coords"] = r.root_coords;
    e["length_sq"] = rational_json(r.length_sq);
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["all_passed"] = r.all_passed();
  Json list = Json::array();
  for (const AxiomResult& a : r.results) {
    Json e;
    e["name"] = a.name;
    e["passed"] = a.passed;
    if (!a.witness.empty()) e["witness"] = a.witness;
    list.push_back(std::move(e));
  }
  j["axioms"] = std::move(list);
  return j;
}

Json to_json(const WeylElement& w) {
  Json j;
  j["weight_matrix"] = matrix_json(w.weight_matrix);
  j["coroot_matrix"] = matrix_json(w.coroot_matrix);
  return j;
}

Json to_json(const AffineElement& g) {
  Json j;
  j["t"] = g.t;
  j["w"] = matrix_json(g.w.coroot_matrix);
  return j;
}

std::string polynomial_to_string(const Polynomial& p, const InvariantRing& ring) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p, ring)) {
    const bool constant = std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    bool first_factor = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << "X" << (j + 1);
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

Json to_json(const PolynomialMap& p, const InvariantRing& ring) {
  Json j;
  j["type_spec"] = p.type_spec;
  j["d"] = p.d;
  Json comps = Json::array();
  Json text = Json::array();
  for (const Polynomial& poly : p.components) {
    Json terms = Json::array();
    for (const auto& [e, c] : sorted_terms(poly, ring)) {
      Json t;
      t["exponents"] = e;
      t["coeff"] = bigint_json(c);
      terms.push_back(std::move(t));
    }
    comps.push_back(std::move(terms));
    text.push_back(polynomial_to_string(poly, ring));
  }
  j["components"] = std::move(comps);
  j["text"] = std::move(text);
  return j;
}

PolynomialMap polynomial_map_from_json(const Json& j) {
  PolynomialMap p;
  p.type_spec = j.at("type_spec").get<std::string>();
  p.d = j.at("d").get<long long>();
  for (const Json& comp : j.at("components")) {
    Polynomial poly;
    for (const Json& t : comp) poly.terms[t.at("exponents").get<IntVector>()] = bigint_from_json(t.at("coeff"));
    p.components.push_back(std::move(poly));
  }
  p.rank = static_cast<int>(p.components.size());
  return p;
}

Json to_json(const FunctionalEquationReport& r) {
  Json j;
  j["type_spec"] = r.type_spec;
  j["d"] = r.d;
  j["samples"] = r.samples;
  j["tol"] = r.tol;
  j["max_residual"] = r.max_residual;
  j["max_abs_residual"] = r.max_abs_residual;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const IntegralityReport& r) {
  Json j;
  j["integral"] = r.integral;
  j["matches_integer_path"] = r.matches_integer_path;
  j["coefficients"] = r.coefficients;
  return j;
}

Json to_json(const PostCriticalReport& r) {
  Json j;
  j["type_spec"] = r.type_spec;
  j["d"] = r.d;
  j["tol"] = r.tol;
  j["requested"] = r.requested;
  j["evaluated"] = r.evaluated;
  j["skipped_on_diagram"] = r.skipped;
  j["max_det_normalized"] = r.max_det_normalized;
  j["max_det_abs"] = r.max_det_abs;
  j["max_functional_residual"] = r.max_functional_residual;
  j["critical_values_on_diagram"] = r.critical_values_on_diagram;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const DiagramInvarianceReport& r) {
  Json j;
  j["type_spec"] = r.type_spec;
  j["d"] = r.d;
  j["samples"] = r.samples;
  j["witnessed"] = r.witnessed;
  j["max_distance"] = r.max_distance;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const DeltoidReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["max_on_diagram"] = r.max_on_diagram;
  j["min_off_diagram"] = r.min_off_diagram;
  return j;
}

Json to_json(const LevelAction& a) {
  Json j;
  j["level"] = a.level;
  j["perm"] = a.perm;
  return j;
}

Json to_json(const MonodromyReport& r) {
  Json j;
  j["type_spec"] = r.type_spec;
  j["d"] = r.d;
  j["levels"] = r.levels;
  Json y0 = Json::array();
  for (const Rational& x : r.y0) y0.push_back(rational_json(x));
  j["basepoint"] = std::move(y0);
  Json gens = Json::array();
  for (const GeneratorResult& g : r.generators) {
    Json e;
    e["name"] = g.name;
    e["label"] = to_json(g.label);
    e["recovered"] = to_json(g.recovered);
    e["deck_match"] = g.recovered == g.label;
    Json num = Json::array(), alg = Json::array();
    for (const LevelAction& a : g.numeric) num.push_back(a.perm);
    for (const LevelAction& a : g.algebraic) alg.push_back(a.perm);
    e["numeric"] = std::move(num);
    e["algebraic"] = std::move(alg);
    e["equal"] = bool_array(g.equal);
    e["spot_checks"] = g.spot_checks;
    e["spot_failures"] = g.spot_failures;
    e["direct_checked"] = g.direct_checked;
    e["direct_failures"] = g.direct_failures;
    e["involution"] = g.involution;
    e["passed"] = g.passed();
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const RelationResult& rel : r.relations) {
    Json e;
    e["pair"] = {r.generators[rel.i].name, r.generators[rel.j].name};
    e["m"] = rel.m;
    e["holds"] = bool_array(rel.holds);
    rels.push_back(std::move(e));
  }
  j["relations"] = std::move(rels);
  Json no = Json::array(), ao = Json::array();
  for (const BigInt& x : r.numeric_orders) no.push_back(bigint_json(x));
  for (const BigInt& x : r.algebraic_orders) ao.push_back(bigint_json(x));
  j["numeric_orders"] = std::move(no);
  j["algebraic_orders"] = std::move(ao);
  j["projection_compatible"] = r.projection_compatible;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const Automaton& a) {
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["alphabet_size"] = alphabet_size(a.n, a.d);
  Json states = Json::array();
  for (const AffineElement& s : a.states) {
    Json e;
    e["t"] = s.t;
    e["w_matrix"] = matrix_json(s.w.coroot_matrix);
    states.push_back(std::move(e));
  }
  j["states"] = std::move(states);
  Json transitions = Json::array();
  for (std::size_t s = 0; s < a.transitions.size(); ++s)
    for (std::size_t l = 0; l < a.transitions[s].size(); ++l)
      transitions.push_back({s, l, a.transitions[s][l].image_letter, a.transitions[s][l].child});
  j["transitions"] = std::move(transitions);
  j["generators"] = a.generators;
  j["generator_names"] = a.generator_names;
  return j;
}

Automaton automaton_from_json(const Json& j) {
  Automaton a;
  a.d = j.at("d").get<long long>();
  a.n = j.at("n").get<int>();
  for (const Json& s : j.at("states")) {
    const IntMatrix coroot = matrix_from_json(s.at("w_matrix"));
    const RationalMatrix inv = inverse(to_rational(coroot));
    IntMatrix weight(coroot.rows(), coroot.cols());
    for (std::size_t r = 0; r < coroot.rows(); ++r)
      for (std::size_t c = 0; c < coroot.cols(); ++c) {
        const Rational x = inv(c, r);  // weight matrix = coroot matrix^{-T}
        if (x.denominator() != 1) throw ParseError("automaton state is not an integral Weyl element");
        weight(r, c) = x.numerator();
      }
    a.states.push_back({WeylElement{weight, coroot}, s.at("t").get<IntVector>()});
  }
  const std::size_t letters = alphabet_size(a.n, a.d);
  a.transitions.assign(a.states.size(), std::vector<Transition>(letters));
  for (const Json& t : j.at("transitions")) {
    const auto s = t.at(0).get<std::size_t>(), l = t.at(1).get<std::size_t>();
    if (s >= a.states.size() || l >= letters) throw ParseError("transition out of range");
    a.transitions[s][l] = {t.at(2).get<std::size_t>(), t.at(3).get<std::size_t>()};
  }
  a.generators = j.at("generators").get<std::vector<std::size_t>>();
  a.generator_names = j.value("generator_names", std::vector<std::string>{});
  return a;
}

Json to_json(const FaithfulnessReport& r) {
  Json j;
  j["type_spec"] = r.type_spec;
  j["d"] = r.d;
  j["max_length"] = r.max_length;
  j["max_level"] = r.max_level;
  j["distinct_elements"] = r.distinct_elements;
  j["separating_level"] = r.separating_level;
  j["separated"] = r.separated;
  return j;
}

}  // namespace chebimg
