#include "chebimg/selfsim.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace chebimg {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void check_alphabet(const TreeAutomorphism& g, const TreeWord& w) {
  if (g.d != w.d || g.n != w.n || static_cast<int>(g.state.t.size()) != g.n)
    throw DimensionMismatch("alphabet mismatch between automorphism and word");
}

}  // namespace

std::size_t alphabet_size(int n, long long d) { return vertex_count(n, d, 1); }

std::size_t letter_index(const IntVector& letter, long long d) {
  for (long long x : letter)
    if (x < 0 || x >= d) throw std::out_of_range("letter digit out of range");
  return encode_vertex(letter, d);
}

IntVector letter_from_index(std::size_t index, int n, long long d) {
  if (index >= alphabet_size(n, d)) throw std::out_of_range("letter index out of range");
  return decode_vertex(index, n, d);
}

TreeWord parse_tree_word(std::string_view text, long long d, int n) {
  const std::size_t size = alphabet_size(n, d);
  if (size > kDigits.size())
    throw std::invalid_argument("tree words are printable only for alphabets of size <= 36");
  TreeWord w{d, n, {}};
  for (char c : text) {
    const std::size_t pos = kDigits.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (pos == std::string_view::npos || pos >= size)
      throw ParseError(std::string("invalid letter '") + c + "' for an alphabet of size " +
                       std::to_string(size));
    w.letters.push_back(letter_from_index(pos, n, d));
  }
  return w;
}

std::string format_tree_word(const TreeWord& w) {
  std::string s;
  for (const IntVector& l : w.letters) {
    const std::size_t i = letter_index(l, w.d);
    if (i >= kDigits.size()) throw std::invalid_argument("letter not printable");
    s.push_back(kDigits[i]);
  }
  return s;
}

std::size_t word_to_vertex(const TreeWord& w) {
  IntVector u(w.n, 0);
  long long place = 1;
  for (const IntVector& l : w.letters) {
    for (int j = 0; j < w.n; ++j) u[j] += place * l[j];
    place *= w.d;
  }
  return encode_vertex(u, place);
}

TreeWord vertex_to_word(std::size_t index, int n, long long d, int k) {
  long long modulus = 1;
  for (int i = 0; i < k; ++i) modulus *= d;
  IntVector u = decode_vertex(index, n, modulus);
  TreeWord w{d, n, {}};
  for (int i = 0; i < k; ++i) {
    IntVector l(n);
    for (int j = 0; j < n; ++j) {
      l[j] = u[j] % d;
      u[j] /= d;
    }
    w.letters.push_back(std::move(l));
  }
  return w;
}

TreeWord act_on_word(const TreeAutomorphism& g, const TreeWord& w, AffineElement* final_state) {
  check_alphabet(g, w);
  TreeWord out{w.d, w.n, {}};
  AffineElement state = g.state;
  for (const IntVector& l : w.letters) {
    WreathStep step = wreath_digit_step(state, g.d, l);
    out.letters.push_back(std::move(step.letter));
    state = std::move(step.child);
  }
  if (final_state) *final_state = std::move(state);
  return out;
}

bool operator==(const Automaton& a, const Automaton& b) {
  if (a.d != b.d || a.n != b.n || a.states != b.states || a.generators != b.generators ||
      a.generator_names != b.generator_names || a.transitions.size() != b.transitions.size())
    return false;
  for (std::size_t s = 0; s < a.transitions.size(); ++s) {
    if (a.transitions[s].size() != b.transitions[s].size()) return false;
    for (std::size_t l = 0; l < a.transitions[s].size(); ++l)
      if (a.transitions[s][l].image_letter != b.transitions[s][l].image_letter ||
          a.transitions[s][l].child != b.transitions[s][l].child)
        return false;
  }
  return true;
}

Automaton reachable_states(const std::vector<TreeAutomorphism>& generators,
                           const std::vector<std::string>& names, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("reachable_states: no generators");
  Automaton a;
  a.d = generators.front().d;
  a.n = generators.front().n;
  a.generator_names = names;
  std::map<AffineElement, std::size_t> index;
  auto intern = [&](const AffineElement& g) {
    auto [it, inserted] = index.try_emplace(g, a.states.size());
    if (inserted) {
      if (a.states.size() >= cap)
        throw CapExceeded("reachable_states: more than " + std::to_string(cap) + " states");
      a.states.push_back(g);
    }
    return it->second;
  };
  for (const TreeAutomorphism& g : generators) {
    if (g.d != a.d || g.n != a.n) throw DimensionMismatch("reachable_states: mixed alphabets");
    a.generators.push_back(intern(g.state));
  }
  const std::size_t letters = alphabet_size(a.n, a.d);
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    std::vector<Transition> row(letters);
    for (std::size_t l = 0; l < letters; ++l) {
      const WreathStep step = wreath_digit_step(a.states[s], a.d, letter_from_index(l, a.n, a.d));
      row[l] = {letter_index(step.letter, a.d), intern(step.child)};
    }
    a.transitions.push_back(std::move(row));
  }
  return a;
}

Automaton reachable_states(const TreeAutomorphism& g, std::size_t cap) {
  return reachable_states(std::vector<TreeAutomorphism>{g}, {}, cap);
}

std::string export_automaton_text(const Automaton& a) {
  std::ostringstream os;
  os << "alphabet " << alphabet_size(a.n, a.d) << " (d=" << a.d << ", n=" << a.n << ")\n";
  os << "states " << a.states.size() << "\n";
  for (std::size_t s = 0; s < a.states.size(); ++s)
    os << "q" << s << " := " << describe(a.states[s]) << "\n";
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    os << "generator ";
    if (g < a.generator_names.size()) os << a.generator_names[g] << " ";
    os << "= q" << a.generators[g] << "\n";
  }
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    os << "q" << s << " = [";
    for (std::size_t l = 0; l < a.transitions[s].size(); ++l)
      os << (l ? " " : "") << a.transitions[s][l].image_letter;
    os << "](";
    for (std::size_t l = 0; l < a.transitions[s].size(); ++l)
      os << (l ? ", " : "") << "q" << a.transitions[s][l].child;
    os << ")\n";
  }
  return os.str();
}

bool element_equal_up_to_level(const TreeAutomorphism& g1, const TreeAutomorphism& g2, int k,
                               std::size_t cap) {
  if (g1.d != g2.d || g1.n != g2.n) throw DimensionMismatch("alphabet mismatch");
  return algebraic_action(g1.state, g1.d, k, cap) == algebraic_action(g2.state, g2.d, k, cap);
}

BigInt order_on_level(const TreeAutomorphism& g, int k, std::size_t cap) {
  return permutation_order(algebraic_action(g.state, g.d, k, cap));
}

AffineElement parse_generator_word(const RootSystem& rs, std::string_view text) {
  const auto gens = affine_generators(rs);
  AffineElement result = AffineElement::identity(rs.rank);
  std::size_t i = 0;
  auto read_number = [&](std::optional<long long> fallback) -> long long {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) {
      if (!fallback) throw ParseError("generator word: expected an index at position " + std::to_string(i));
      return *fallback;
    }
    return std::stoll(std::string(text.substr(start, i - start)));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '*' || c == '.' || c == ',') {
      ++i;
      continue;
    }
    AffineElement factor;
    if (text.substr(i, 2) == "id") {
      i += 2;
      factor = AffineElement::identity(rs.rank);
    } else if (c == 's') {
      ++i;
      const long long k = read_number(std::nullopt);
      if (k == 0) {
        long long comp = 1;
        if (i < text.size() && text[i] == '_') {
          ++i;
          comp = read_number(std::nullopt);
        }
        if (comp < 1 || comp > static_cast<long long>(rs.components.size()))
          throw ParseError("generator word: no irreducible factor " + std::to_string(comp));
        factor = gens[rs.rank + comp - 1].element;
      } else {
        if (k > rs.rank) throw ParseError("generator word: no simple reflection s" + std::to_string(k));
        factor = gens[k - 1].element;
      }
    } else if (c == 't' || c == 'T') {
      ++i;
      const long long k = read_number(1);
      if (k < 1 || k > rs.rank) throw ParseError("generator word: no translation t" + std::to_string(k));
      IntVector t(rs.rank, 0);
      t[k - 1] = c == 't' ? 1 : -1;
      factor = AffineElement::translation(t);
    } else {
      throw ParseError(std::string("generator word: unexpected '") + c + "'");
    }
    result = affine_compose(result, factor);
  }
  return result;
}

FaithfulnessReport faithfulness_sweep(const RootSystem& rs, long long d, std::size_t max_length,
                                      int max_level, std::size_t cap) {
  FaithfulnessReport rep;
  rep.type_spec = rs.type_spec;
  rep.d = d;
  rep.max_length = max_length;
  rep.max_level = max_level;
  const auto gens = affine_generators(rs);
  std::set<AffineElement> ball{AffineElement::identity(rs.rank)};
  std::vector<AffineElement> frontier(ball.begin(), ball.end());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<AffineElement> next;
    for (const AffineElement& g : frontier)
      for (const NamedGenerator& s : gens) {
        AffineElement h = affine_compose(g, s.element);
        if (ball.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  rep.distinct_elements = ball.size();
  for (int k = 1; k <= max_level; ++k) {
    std::set<std::vector<std::int32_t>> images;
    for (const AffineElement& g : ball) images.insert(algebraic_action(g, d, k, cap).perm);
    if (images.size() == ball.size()) {
      rep.separating_level = k;
      rep.separated = true;
      break;
    }
  }
  return rep;
}

}  // namespace chebimg
