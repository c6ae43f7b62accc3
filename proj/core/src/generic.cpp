#include "quiverhall/generic.hpp"

#include <algorithm>
#include <set>

#include "quiverhall/errors.hpp"
#include "quiverhall/interpolate.hpp"

namespace qh {

namespace {

struct PrimeTerm {
  ReducedCoeff reduced;        // canonical a + b v value at this prime
  std::uint64_t members = 0;   // family size at this prime
};

// Interpolates one parity component across the primes.  The per-prime value
// is f(p) / p^k for the sought polynomial f; the denominator power is
// stripped via the largest k observed, the scaled values are interpolated
// with the correspondingly enlarged bound, and the q-power is folded back.
// Returns the component as a Laurent polynomial in q.
LaurentPoly lift_component(const std::vector<std::int64_t>& primes,
                           const std::vector<Rational>& values,
                           std::size_t degree_bound) {
  bool all_zero = true;
  for (const Rational& v : values)
    if (v != 0) all_zero = false;
  if (all_zero) return LaurentPoly();

  int max_denom = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    int k = denominator_power_of(values[i], primes[i]);
    if (k < 0)
      throw InvariantError(
          "coefficient denominator is not a power of the prime " +
          std::to_string(primes[i]));
    max_denom = std::max(max_denom, k);
  }

  std::size_t bound = degree_bound + static_cast<std::size_t>(max_denom);
  if (primes.size() < bound + 2)
    throw InputError(
        "generic lift needs more primes: denominator power " +
        std::to_string(max_denom) + " raises the interpolation degree to " +
        std::to_string(bound));

  std::vector<std::pair<std::int64_t, Rational>> samples;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Rational scale(1);
    for (int k = 0; k < max_denom; ++k) scale *= Rational(static_cast<long>(primes[i]));
    samples.emplace_back(primes[i], values[i] * scale);
  }
  LaurentPoly scaled = interpolate_in_q(samples, bound);
  return scaled.shifted(-max_denom);
}

}  // namespace

GenericElement generic_lift(
    const QuiverPtr& q, const std::vector<std::int64_t>& primes,
    const std::function<HallElement(HallAlgebra&)>& computation,
    const GenericOptions& opts) {
  if (primes.size() < opts.degree_bound + 3)
    throw InputError("generic lift needs at least degree_bound + 3 primes");
  {
    std::set<std::int64_t> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size())
      throw InputError("generic lift primes must be distinct");
  }

  // Per-prime computation, terms bucketed by fingerprint, coefficients in
  // the reduced a + b v form.
  std::vector<std::map<GenericClassKey, PrimeTerm>> per_prime;
  for (std::int64_t p : primes) {
    HallAlgebra hall(q, p, opts.hall);
    HallElement elem = computation(hall);
    std::map<GenericClassKey, PrimeTerm> keyed;
    for (const auto& [cls, coeff] : elem.terms) {
      ReducedCoeff reduced = reduce_at_prime(coeff, p);
      if (reduced.is_zero()) continue;
      GenericClassKey key{cls.dim, rep_fingerprint(hall.representative(cls))};
      auto [it, fresh] = keyed.emplace(key, PrimeTerm{reduced, 1});
      if (!fresh) {
        // A family: members indistinguishable by every recorded invariant.
        // Lifting it as a whole is sound only when the members agree.
        if (!(it->second.reduced == reduced))
          throw InvariantError(
              "ambiguous class matching: classes of dimension " +
              cls.dim.str() +
              " share an invariant fingerprint with distinct coefficients "
              "at p = " + std::to_string(p));
        it->second.members += 1;
      }
    }
    per_prime.push_back(std::move(keyed));
  }

  std::set<GenericClassKey> keys;
  for (const auto& keyed : per_prime)
    for (const auto& [k, t] : keyed) keys.insert(k);

  GenericElement out;
  out.primes = primes;
  for (const GenericClassKey& key : keys) {
    GenericTerm term;
    std::vector<Rational> even, odd;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      auto it = per_prime[i].find(key);
      if (it == per_prime[i].end()) {
        even.emplace_back(0);
        odd.emplace_back(0);
        term.member_counts.push_back(0);
      } else {
        even.push_back(it->second.reduced.even);
        odd.push_back(it->second.reduced.odd);
        term.member_counts.push_back(it->second.members);
      }
    }
    LaurentPoly even_q = lift_component(primes, even, opts.degree_bound);
    LaurentPoly odd_q = lift_component(primes, odd, opts.degree_bound);
    for (const auto& [m, c] : even_q.terms()) term.coeff.add_term(2 * m, c);
    for (const auto& [m, c] : odd_q.terms()) term.coeff.add_term(2 * m + 1, c);
    if (!term.coeff.is_zero()) out.terms.emplace(key, std::move(term));
  }
  return out;
}

GenericElement generic_lift_word(const QuiverPtr& q,
                                 const std::vector<int>& word,
                                 const std::vector<std::int64_t>& primes,
                                 const GenericOptions& opts) {
  return generic_lift(
      q, primes,
      [&word](HallAlgebra& h) { return h.composition_monomial(word); }, opts);
}

GenericElement generic_lift_serre(const QuiverPtr& q, int i, int j,
                                  const std::vector<std::int64_t>& primes,
                                  const GenericOptions& opts) {
  return generic_lift(
      q, primes, [i, j](HallAlgebra& h) { return h.serre_check(i, j).residual; },
      opts);
}

}  // namespace qh
