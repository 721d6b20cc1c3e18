// chebimg: command-line driver.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
// 3 a size cap refused the job, 4 numerical failure.

#include "chebimg/chebmap.hpp"
#include "chebimg/critical.hpp"
#include "chebimg/json_io.hpp"
#include "chebimg/monodromy.hpp"
#include "chebimg/rootsys.hpp"
#include "chebimg/selfsim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace chebimg;

namespace {

enum Exit { kPass = 0, kFail = 1, kBadInput = 2, kCap = 3, kNumeric = 4 };

struct RunConfig {
  std::vector<std::string> positionals;
  std::string type_flag;
  std::optional<long long> d_flag;
  std::optional<int> levels_flag;
  std::optional<std::size_t> samples;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;  // per-subcommand default when empty
  std::size_t cap_vertices = kDefaultVertexCap;
  std::optional<std::size_t> cap_group;
  std::string generator_word, tree_word;

  std::string type() const {
    if (type_flag.empty()) throw ParseError("missing root system type (positional or --type)");
    return type_flag;
  }
  long long d(long long fallback) const { return d_flag.value_or(fallback); }
  int levels(int fallback) const { return levels_flag.value_or(fallback); }
};

long long parse_integer(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

// Positional arguments fill, in order, whichever of the listed fields were
// not given as flags.
void bind_positionals(RunConfig& cfg, const std::vector<std::string>& fields) {
  std::size_t next = 0;
  for (const std::string& field : fields) {
    if (next == cfg.positionals.size()) break;
    const std::string& v = cfg.positionals[next];
    if (field == "type" && cfg.type_flag.empty()) {
      cfg.type_flag = v;
    } else if (field == "d" && !cfg.d_flag) {
      cfg.d_flag = parse_integer(v, "d");
    } else if (field == "levels" && !cfg.levels_flag) {
      cfg.levels_flag = static_cast<int>(parse_integer(v, "levels"));
    } else if (field == "element") {
      cfg.generator_word = v;
    } else if (field == "word") {
      cfg.tree_word = v;
    } else {
      continue;
    }
    ++next;
  }
  if (next != cfg.positionals.size())
    throw ParseError("unexpected argument '" + cfg.positionals[next] + "'");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << text << "\n";
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2)); }

void require_d(long long d, long long min) {
  if (d < min) throw std::invalid_argument("d must be >= " + std::to_string(min));
}

int cmd_roots(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  const AxiomReport axioms = verify_axioms(rs);
  Json j = to_json(rs);
  j["axioms"] = to_json(axioms);
  emit(cfg, j);
  return axioms.all_passed() ? kPass : kFail;
}

int cmd_weyl(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  const auto elements = weyl_group_elements(rs, cfg.cap_group.value_or(kDefaultWeylCap));
  Json j;
  j["type"] = rs.type_spec;
  j["order"] = elements.size();
  j["order_from_classification"] = bigint_json(weyl_group_order_estimate(rs));
  Json list = Json::array();
  for (const WeylElement& w : elements) list.push_back(to_json(w));
  j["elements"] = std::move(list);
  emit(cfg, j);
  return BigInt(elements.size()) == weyl_group_order_estimate(rs) ? kPass : kFail;
}

int cmd_chebmap(const RunConfig& cfg, bool full_map) {
  const RootSystem rs = build_root_system(cfg.type());
  const long long d = cfg.d(2);
  require_d(d, 1);
  const InvariantRing ring(rs);
  const PolynomialMap p = build_cheb_map(rs, d);
  const GeneralizedCosine psi(rs);
  const FunctionalEquationReport fe =
      verify_functional_equation(psi, d, p, cfg.samples.value_or(100), cfg.tol.value_or(1e-8), cfg.seed);
  const IntegralityReport integ = check_integrality(rs, d, p);
  Json j;
  if (full_map) j = to_json(p, ring);
  j["functional_equation"] = to_json(fe);
  j["integrality"] = to_json(integ);
  const bool ok = fe.passed && integ.integral && integ.matches_integer_path;
  j["passed"] = ok;
  emit(cfg, j);
  return ok ? kPass : kFail;
}

int cmd_postcritical(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  const long long d = cfg.d(2);
  require_d(d, 2);
  const std::size_t samples = cfg.samples.value_or(50);
  const GeneralizedCosine psi(rs);
  const PolynomialMap p = build_cheb_map(rs, d);
  const PostCriticalReport pc = post_critical_check(psi, d, p, samples, cfg.tol.value_or(1e-7), cfg.seed);
  const DiagramInvarianceReport inv = diagram_invariance_check(rs, d, samples, cfg.seed);
  Json j = to_json(pc);
  j["diagram_invariance"] = to_json(inv);
  bool ok = pc.passed && inv.passed;
  if (rs.rank == 2 && rs.components.size() == 1 && rs.components[0].family == 'A') {
    const DeltoidReport del = deltoid_check(psi, samples, cfg.seed);
    j["deltoid"] = to_json(del);
    ok = ok && del.max_on_diagram <= 1e-7;
  }
  j["all_passed"] = ok;
  emit(cfg, j);
  return ok ? kPass : kFail;
}

int cmd_img_verify(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  ImgOptions opts;
  opts.numeric.cap_vertices = cfg.cap_vertices;
  opts.numeric.seed = cfg.seed;
  if (cfg.cap_group) opts.cap_group = *cfg.cap_group;
  const MonodromyReport rep = img_verification(rs, cfg.d(2), cfg.levels(1), opts);
  emit(cfg, to_json(rep));
  return rep.passed ? kPass : kFail;
}

int cmd_automaton(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  const long long d = cfg.d(2);
  require_d(d, 2);
  std::vector<TreeAutomorphism> gens;
  std::vector<std::string> names;
  for (const NamedGenerator& g : affine_generators(rs)) {
    gens.push_back({g.element, d, rs.rank});
    names.push_back(g.name);
  }
  const Automaton a = reachable_states(gens, names);
  if (cfg.format == "text")
    emit(cfg, export_automaton_text(a));
  else
    emit(cfg, to_json(a));
  return kPass;
}

int cmd_act(const RunConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.type());
  const long long d = cfg.d(2);
  require_d(d, 2);
  const AffineElement g = parse_generator_word(rs, cfg.generator_word);
  const TreeWord w = parse_tree_word(cfg.tree_word, d, rs.rank);
  AffineElement final_state;
  const TreeWord image = act_on_word({g, d, rs.rank}, w, &final_state);
  if (cfg.format == "json") {
    Json j;
    j["element"] = to_json(g);
    j["word"] = cfg.tree_word;
    j["image"] = format_tree_word(image);
    j["final_state"] = to_json(final_state);
    emit(cfg, j);
  } else {
    emit(cfg, format_tree_word(image));
  }
  return kPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.type_flag, "root system, e.g. A2 or B3xA1");
  sub->add_option("--d", cfg.d_flag, "degree d");
  sub->add_option("--levels", cfg.levels_flag, "tree levels K");
  sub->add_option("--samples", cfg.samples, "number of random samples");
  sub->add_option("--tol", cfg.tol, "tolerance");
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--out", cfg.out, "write output to this file");
  sub->add_option("--cap-vertices", cfg.cap_vertices, "largest tree level size")->capture_default_str();
  sub->add_option("--cap-group", cfg.cap_group, "largest group to enumerate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, Chebyshev-like maps and their iterated monodromy groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* roots = app.add_subcommand("roots", "root system data and axiom checks");
  auto* weyl = app.add_subcommand("weyl", "enumerate the Weyl group");
  auto* cheb = app.add_subcommand("chebmap", "synthesize T for (type, d)");
  auto* func = app.add_subcommand("verify-functional", "check T(Psi(x)) = Psi(d x)");
  auto* post = app.add_subcommand("verify-postcritical", "critical and post-critical checks");
  auto* img = app.add_subcommand("img-verify", "compare numeric and algebraic monodromy");
  auto* aut = app.add_subcommand("automaton", "automaton of the affine generators");
  auto* act = app.add_subcommand("act", "apply a group element to a tree word");

  for (auto* sub : {roots, weyl, cheb, func, post, img, aut, act}) {
    add_common(sub, cfg);
    sub->add_option("ARGS", cfg.positionals, "TYPE [D [LEVELS]] or, for act, TYPE D ELEMENT WORD");
  }
  aut->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  act->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kBadInput;
  }

  try {
    if (*act) {
      bind_positionals(cfg, {"type", "d", "element", "word"});
      if (cfg.generator_word.empty() || cfg.tree_word.empty())
        throw ParseError("act needs a group element and a tree word");
    } else {
      bind_positionals(cfg, {"type", "d", "levels"});
    }
    if (*roots) return cmd_roots(cfg);
    if (*weyl) return cmd_weyl(cfg);
    if (*cheb) return cmd_chebmap(cfg, true);
    if (*func) return cmd_chebmap(cfg, false);
    if (*post) return cmd_postcritical(cfg);
    if (*img) return cmd_img_verify(cfg);
    if (*aut) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_automaton(cfg);
    }
    if (*act) {
      if (cfg.format.empty()) cfg.format = "text";
      return cmd_act(cfg);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UnsupportedRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ContinuationFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const NearSingularJacobian& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const NoDeckMatch& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kBadInput;
}
