#pragma once

#include <stdexcept>
#include <string>

namespace chebimg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedRank : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// A size guard tripped: Weyl group enumeration, vertex count, BFS closure,
// automaton states, polynomial term count.
struct CapExceeded : Error {
  using Error::Error;
};

struct ContinuationFailure : Error {
  using Error::Error;
};

struct NearSingularJacobian : Error {
  using Error::Error;
};

// deck_identify found no affine Weyl element relating the two points.
struct NoDeckMatch : Error {
  using Error::Error;
};

}  // namespace chebimg
