#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace persched {

/// Input violates an operation's precondition (bad offset, unknown robot id,
/// horizon that is not a common multiple, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checked integer arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A search or enumeration hit its configured budget. `lower` and `upper`
/// bracket the optimum as far as the search got before stopping.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::int64_t lower,
                     std::int64_t upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  std::int64_t lower() const noexcept { return lower_; }
  std::int64_t upper() const noexcept { return upper_; }

 private:
  std::int64_t lower_;
  std::int64_t upper_;
};

}  // namespace persched
