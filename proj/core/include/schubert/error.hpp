#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Rejected user input (malformed permutation, non-reduced word, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word that was required to be reduced is not.
class NotReduced : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A theorem-level guarantee was violated; this is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubert
