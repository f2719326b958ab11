#pragma once

#include <stdexcept>
#include <string>

namespace qhlin {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qhlin
