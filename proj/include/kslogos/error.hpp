#pragma once

#include <stdexcept>
#include <string>

namespace kslogos {

/// Raised for precondition failures, malformed input and invalid domain objects.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kslogos
