#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abpair {

// Which physical precondition an input failed.
enum class Violation {
  below_threshold,
  no_pair_solution,
  momentum_excess,
  normal_incidence,
  z_momentum,
  parameter_domain,
  regime,
};

std::string_view to_string(Violation v);

// Invalid physics input. The CLI maps this to exit code 2.
class PhysicsError : public std::domain_error {
 public:
  PhysicsError(Violation v, const std::string& what)
      : std::domain_error(what), violation_(v) {}
  Violation violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

// A numerical method failed to reach its tolerance. Exit code 1.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abpair
