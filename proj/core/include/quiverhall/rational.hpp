#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "quiverhall/errors.hpp"

namespace qh {

/// Exact arbitrary-precision rational, the coefficient domain everything in
/// this library bottoms out in.  Backed by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

/// Canonical "num/den" string; plain "num" when the denominator is 1.
inline std::string rational_str(const Rational& r) {
  return r.get_str();
}

/// Parses "num", "-num" or "num/den".  Throws InputError on garbage.
inline Rational rational_parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw InputError("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw InputError("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Floor of log_p of the denominator when it is a pure power of p; -1 if the
/// denominator has another factor.
inline int denominator_power_of(const Rational& r, std::int64_t p) {
  BigInt den = r.get_den();
  int k = 0;
  while (den > 1) {
    if (!mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
      return -1;
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(),
                    static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

}  // namespace qh
