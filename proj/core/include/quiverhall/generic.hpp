#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverhall/hall.hpp"

namespace qh {

/// Cross-prime key for isomorphism classes: the dimension vector plus the
/// invariant fingerprint (arrow/path-composite ranks and dim End) of the
/// canonical representative.
struct GenericClassKey {
  DimVector dim;
  std::vector<std::int64_t> fingerprint;

  bool operator<(const GenericClassKey& o) const {
    if (dim != o.dim) return dim < o.dim;
    return fingerprint < o.fingerprint;
  }
};

/// One lifted term.  Classes sharing a fingerprint within one prime form a
/// family (e.g. the one-parameter families of tame type, whose members no
/// discrete invariant separates); such a family is lifted as a whole: every
/// member must carry the same coefficient at every sampled prime, that
/// common coefficient is interpolated, and the member counts per prime are
/// recorded.  Unequal coefficients inside a family abort the lift instead of
/// guessing an unsound matching.
struct GenericTerm {
  LaurentPoly coeff;                          // per family member, in v
  std::vector<std::uint64_t> member_counts;   // parallel to primes
};

/// Element of the generic composition algebra: coefficients are Laurent
/// polynomials in v with q identified with v^2 symbolically, so the formal
/// zero test is exact.
struct GenericElement {
  std::vector<std::int64_t> primes;
  std::map<GenericClassKey, GenericTerm> terms;

  bool is_zero() const {
    for (const auto& [k, t] : terms)
      if (!t.coeff.is_zero()) return false;
    return true;
  }
};

struct GenericOptions {
  std::size_t degree_bound = 2;
  HallOptions hall;
};

/// Lifts a per-prime Hall computation to the generic composition algebra:
/// classes are matched across primes by fingerprint, each coefficient of
/// each v-power is interpolated as a polynomial in q through the sampled
/// primes (surplus primes verify the result), and the interpolated q-powers
/// fold back into v via q = v^2.
///
/// Requires at least degree_bound + 3 primes.  Interpolation inconsistency
/// and coefficient ambiguity inside a fingerprint family raise
/// InvariantError subclasses.
GenericElement generic_lift(
    const QuiverPtr& q, const std::vector<std::int64_t>& primes,
    const std::function<HallElement(HallAlgebra&)>& computation,
    const GenericOptions& opts = {});

/// The two standard computations to lift.
GenericElement generic_lift_word(const QuiverPtr& q,
                                 const std::vector<int>& word,
                                 const std::vector<std::int64_t>& primes,
                                 const GenericOptions& opts = {});
GenericElement generic_lift_serre(const QuiverPtr& q, int i, int j,
                                  const std::vector<std::int64_t>& primes,
                                  const GenericOptions& opts = {});

}  // namespace qh
