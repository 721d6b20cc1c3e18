#pragma once

// JSON encodings of library objects. Keys keep insertion order so output is
// byte-reproducible.

#include "chebimg/chebmap.hpp"
#include "chebimg/critical.hpp"
#include "chebimg/monodromy.hpp"
#include "chebimg/rootsys.hpp"
#include "chebimg/selfsim.hpp"

#include <json.hpp>

#include <string>

namespace chebimg {

using Json = nlohmann::ordered_json;

// Integer if it fits in 64 bits, otherwise a decimal string.
Json bigint_json(const BigInt& x);
Json rational_json(const Rational& r);  // "p/q", or an integer when q = 1

Json to_json(const RootSystem& rs);
Json to_json(const AxiomReport& r);
Json to_json(const WeylElement& w);
Json to_json(const AffineElement& g);

// Terms sorted leading-first in the reduction order of `ring`.
Json to_json(const PolynomialMap& p, const InvariantRing& ring);
std::string polynomial_to_string(const Polynomial& p, const InvariantRing& ring);
PolynomialMap polynomial_map_from_json(const Json& j);

Json to_json(const FunctionalEquationReport& r);
Json to_json(const IntegralityReport& r);
Json to_json(const PostCriticalReport& r);
Json to_json(const DiagramInvarianceReport& r);
Json to_json(const DeltoidReport& r);

Json to_json(const LevelAction& a);
Json to_json(const MonodromyReport& r);

Json to_json(const Automaton& a);
Automaton automaton_from_json(const Json& j);

Json to_json(const FaithfulnessReport& r);

}  // namespace chebimg
