#pragma once

#include <stdexcept>

namespace outerdom {

// An input is within the operation's contract but beyond the size caps of
// the implementation (exhaustive searches, exact solvers, canonical forms).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A node program emitted a symbol outside its declared alphabet, or a
// malformed per-port message vector.
struct protocol_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace outerdom
