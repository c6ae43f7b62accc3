#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "quiverhall/rational.hpp"

namespace qh {

/// Laurent polynomial in one variable with exact rational coefficients,
/// stored sparsely as exponent -> coefficient with no zero entries.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  static LaurentPoly monomial(int exponent, const Rational& coeff = Rational(1));

  const std::map<int, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int exponent) const;
  int min_exponent() const;  // throws on zero
  int max_exponent() const;  // throws on zero

  void set_coeff(int exponent, const Rational& value);
  void add_term(int exponent, const Rational& value);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly scaled(const Rational& s) const;
  LaurentPoly shifted(int delta) const;  // multiply by t^delta
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  /// Exact quotient; throws InvariantError if the division is not exact.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  Rational eval_at_one() const;
  Rational eval(const Rational& t) const;

  /// Human-readable form like "t^2 + 1 + t^-2"; variable name configurable.
  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, Rational> c_;
};

/// Balanced quantum integer [n] = (t^n - t^-n)/(t - t^-1):
/// t^{n-1} + t^{n-3} + ... + t^{1-n} for n >= 1, with [-n] = -[n], [0] = 0.
LaurentPoly quantum_int(int n);

/// [n]! = [1][2]...[n].
LaurentPoly quantum_factorial(int n);

/// Quantum binomial [m]! / ([p]! [m-p]!), exact; requires 0 <= p <= m.
LaurentPoly quantum_binomial(int m, int p);

}  // namespace qh
