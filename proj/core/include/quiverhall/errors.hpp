#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qh {

/// Malformed input, precondition violation, unknown name.  CLI exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was refused because it would exceed a configured budget.
/// CLI exit code 2.
struct BudgetError : std::runtime_error {
  std::uint64_t needed;
  std::uint64_t allowed;
  BudgetError(const std::string& what_needed, std::uint64_t n, std::uint64_t a)
      : std::runtime_error(what_needed + ": needs " + std::to_string(n) +
                           ", budget is " + std::to_string(a)),
        needed(n),
        allowed(a) {}
};

/// An internal cross-check failed (dual classifiers disagree, interpolation
/// inconsistent, ambiguous class matching).  CLI exit code 3.
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Interpolation through sampled primes is inconsistent with the requested
/// degree bound; carries the first prime that witnessed the mismatch.
struct InterpolationUnstableError : InvariantError {
  std::int64_t witness_prime;
  explicit InterpolationUnstableError(std::int64_t p)
      : InvariantError("interpolation unstable: witness prime " +
                       std::to_string(p)),
        witness_prime(p) {}
};

/// Decomposition over Q needs an eigenvalue outside the base field.
struct FieldNotSplittingError : std::runtime_error {
  explicit FieldNotSplittingError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace qh
