#include "quiverhall/laurent.hpp"

#include <sstream>

#include "quiverhall/errors.hpp"

namespace qh {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) c_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exponent] = coeff;
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (c_.empty()) throw InvariantError("min_exponent of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (c_.empty()) throw InvariantError("max_exponent of zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::set_coeff(int exponent, const Rational& value) {
  if (value == 0)
    c_.erase(exponent);
  else
    c_[exponent] = value;
}

void LaurentPoly::add_term(int exponent, const Rational& value) {
  auto it = c_.find(exponent);
  if (it == c_.end()) {
    if (value != 0) c_[exponent] = value;
    return;
  }
  it->second += value;
  if (it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

LaurentPoly LaurentPoly::shifted(int delta) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + delta] = v;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InvariantError("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials, long-divide, shift back.
  LaurentPoly num = shifted(-min_exponent());
  LaurentPoly den = divisor.shifted(-divisor.min_exponent());
  int result_shift = min_exponent() - divisor.min_exponent();
  LaurentPoly quot;
  int dd = den.max_exponent();
  Rational lead = den.coeff(dd);
  while (!num.is_zero()) {
    int nd = num.max_exponent();
    if (nd < dd) throw InvariantError("inexact Laurent division");
    Rational q = num.coeff(nd) / lead;
    quot.add_term(nd - dd, q);
    num -= den.shifted(nd - dd).scaled(q);
  }
  return quot.shifted(result_shift);
}

Rational LaurentPoly::eval_at_one() const {
  Rational s(0);
  for (const auto& [e, v] : c_) s += v;
  return s;
}

Rational LaurentPoly::eval(const Rational& t) const {
  if (t == 0) throw InputError("Laurent polynomial evaluated at 0");
  Rational s(0);
  for (const auto& [e, v] : c_) {
    Rational power(1);
    Rational base = e >= 0 ? t : Rational(1) / t;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    s += v * power;
  }
  return s;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponent first.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational v = it->second;
    if (!first) {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    int e = it->first;
    if (e == 0) {
      out << rational_str(v);
    } else {
      if (v != 1) out << rational_str(v) << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly quantum_int(int n) {
  if (n == 0) return LaurentPoly();
  if (n < 0) return -quantum_int(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r.set_coeff(e, Rational(1));
  return r;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw InputError("quantum factorial of negative integer");
  LaurentPoly r{Rational(1)};
  for (int k = 2; k <= n; ++k) r *= quantum_int(k);
  return r;
}

LaurentPoly quantum_binomial(int m, int p) {
  if (p < 0 || p > m)
    throw InputError("quantum binomial needs 0 <= p <= m, got (" +
                     std::to_string(m) + "," + std::to_string(p) + ")");
  // [m]...[m-p+1] / [p]!, computed by exact division.
  LaurentPoly num{Rational(1)};
  for (int k = m; k > m - p; --k) num *= quantum_int(k);
  return num.divide_exact(quantum_factorial(p));
}

}  // namespace qh
