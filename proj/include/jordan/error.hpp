#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace jordan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: inadmissible type, malformed weight, non-abelian group where
/// an abelian one is required, and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was reached before the computation finished.
/// Carries the module that hit the cap and, when one is known, a lower bound on
/// the quantity being computed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string module, std::string const& detail,
              std::optional<std::string> lower_bound = std::nullopt)
      : Error(module + ": cap exceeded: " + detail),
        module_(std::move(module)),
        detail_(detail),
        lower_bound_(std::move(lower_bound)) {}

  std::string const& module() const noexcept { return module_; }
  std::string const& detail() const noexcept { return detail_; }
  std::optional<std::string> const& lower_bound() const noexcept { return lower_bound_; }

 private:
  std::string module_;
  std::string detail_;
  std::optional<std::string> lower_bound_;
};

}  // namespace jordan
