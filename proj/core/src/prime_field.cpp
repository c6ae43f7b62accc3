#include "quiverhall/prime_field.hpp"

#include <vector>

namespace qh {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p))
    throw InputError("modulus " + std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31))
    throw InputError("modulus too large for 64-bit field arithmetic");
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
  BigInt num = r.get_num();
  BigInt den = r.get_den();
  std::int64_t n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p_));
  std::int64_t d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p_));
  if (d == 0)
    throw InputError("rational " + rational_str(r) +
                     " has no image in F_" + std::to_string(p_));
  return mul(n, inv(d));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p_ : t;
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  // Factor p-1, then test candidates in increasing order.
  std::vector<std::int64_t> prime_factors;
  std::int64_t m = p_ - 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (Elem g = 2; g < p_; ++g) {
    bool ok = true;
    for (std::int64_t f : prime_factors) {
      if (pow(g, static_cast<std::uint64_t>((p_ - 1) / f)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantError("no primitive root found mod " + std::to_string(p_));
}

}  // namespace qh
