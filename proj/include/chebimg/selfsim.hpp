#pragma once

// The affine Weyl group as a self-similar group on the d^n-ary tree.
//
// A letter is a digit vector in {0..d-1}^n, printed as its index
// sum_j digit_j d^j in 0-9a-z. The first letter of a word is the lowest
// base-d digit of the vertex label, so a word of length k is a level-k
// vertex. Actions follow the monodromy convention: g acts by E_g.

#include "chebimg/monodromy.hpp"
#include "chebimg/rootsys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace chebimg {

inline constexpr std::size_t kDefaultStateCap = 10000;

struct TreeWord {
  long long d = 2;
  int n = 1;
  std::vector<IntVector> letters;

  friend bool operator==(const TreeWord&, const TreeWord&) = default;
};

std::size_t letter_index(const IntVector& letter, long long d);
IntVector letter_from_index(std::size_t index, int n, long long d);
std::size_t alphabet_size(int n, long long d);

TreeWord parse_tree_word(std::string_view text, long long d, int n);
std::string format_tree_word(const TreeWord& w);

// Level-k vertex index of a word of length k, and back.
std::size_t word_to_vertex(const TreeWord& w);
TreeWord vertex_to_word(std::size_t index, int n, long long d, int k);

struct TreeAutomorphism {
  AffineElement state;
  long long d = 2;
  int n = 1;
};

// Letter-by-letter wreath recursion. If final_state is given it receives the
// state left after the last letter.
TreeWord act_on_word(const TreeAutomorphism& g, const TreeWord& w,
                     AffineElement* final_state = nullptr);

struct Transition {
  std::size_t image_letter = 0;
  std::size_t child = 0;  // index into Automaton::states
};

struct Automaton {
  long long d = 2;
  int n = 1;
  std::vector<AffineElement> states;             // breadth-first from the generators
  std::vector<std::vector<Transition>> transitions;  // [state][letter]
  std::vector<std::size_t> generators;
  std::vector<std::string> generator_names;

  friend bool operator==(const Automaton&, const Automaton&);
};

Automaton reachable_states(const std::vector<TreeAutomorphism>& generators,
                           const std::vector<std::string>& names = {},
                           std::size_t cap = kDefaultStateCap);
Automaton reachable_states(const TreeAutomorphism& g, std::size_t cap = kDefaultStateCap);

// One line per state: "q3 = (perm)(q0, q1, ...)".
std::string export_automaton_text(const Automaton& a);

bool element_equal_up_to_level(const TreeAutomorphism& g1, const TreeAutomorphism& g2, int k,
                               std::size_t cap = kDefaultVertexCap);
BigInt order_on_level(const TreeAutomorphism& g, int k, std::size_t cap = kDefaultVertexCap);

// Words over the affine generators: tokens id, s0..sn (s0_c for factor c),
// t or t1..tn for unit coroot translations, T/T1..Tn for their inverses;
// optional separators are spaces, '*' and '.'. Multiplied left to right.
AffineElement parse_generator_word(const RootSystem& rs, std::string_view text);

struct FaithfulnessReport {
  std::string type_spec;
  long long d = 0;
  std::size_t max_length = 0;
  int max_level = 0;
  std::size_t distinct_elements = 0;
  int separating_level = 0;  // least level separating all elements; 0 if none
  bool separated = false;
};

// Every distinct element of word length <= max_length in the affine
// generators must have a distinct action on some level <= max_level.
FaithfulnessReport faithfulness_sweep(const RootSystem& rs, long long d, std::size_t max_length,
                                      int max_level, std::size_t cap = kDefaultVertexCap);

}  // namespace chebimg
