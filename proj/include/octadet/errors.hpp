#ifndef OCTADET_ERRORS_HPP
#define OCTADET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace octadet {

// Malformed textual input (ring specs, JSON payloads).
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Violated operation precondition (ring mismatch, shape mismatch, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cost refusal: the request is well-formed but too large to enumerate.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace octadet

#endif
