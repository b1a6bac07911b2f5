#pragma once

#include <stdexcept>
#include <string>

namespace tropbound {

/// Malformed or invariant-violating input. `field()` names the offending
/// location as a JSON pointer when the input came from a document.
class InvalidInput : public std::invalid_argument {
public:
  InvalidInput(std::string field, const std::string &message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

private:
  std::string field_;
};

/// No marking is mapped into the torus (no all-zero tangency row).
class HypothesisViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Insertion codimensions do not sum to n + k - 3.
class DimensionMismatch : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Tropical enumeration refused because it exceeds the configured leg cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::size_t legs, std::size_t cap, std::string estimated_work)
      : std::runtime_error("enumeration over " + std::to_string(legs) +
                           " legs exceeds cap of " + std::to_string(cap) +
                           " (estimated " + estimated_work +
                           " linear solves)"),
        estimated_work_(std::move(estimated_work)) {}

  const std::string &estimated_work() const noexcept { return estimated_work_; }

private:
  std::string estimated_work_;
};

/// Point configurations kept landing on degenerate loci, or two generic
/// configurations produced different counts.
class GenericityFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tropbound
