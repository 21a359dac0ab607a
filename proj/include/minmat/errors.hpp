#pragma once

#include <stdexcept>

namespace minmat {

// Error taxonomy shared across the library.  The CLI maps these onto process
// exit codes: input/domain -> 2, capacity -> 3.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, unparsable files, axiom violations.
struct input_error : error {
  using error::error;
};

// Structurally valid input outside an operation's mathematical domain.
struct domain_error : error {
  using error::error;
};

// Request exceeds a hard enumeration cap.
struct capacity_error : error {
  using error::error;
};

}  // namespace minmat
