#pragma once

#include <stdexcept>

namespace hc {

// Invalid user input or out-of-domain parameters; mapped to a domain error
// by the C API and CLI.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; mapped to a verification error.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace hc
