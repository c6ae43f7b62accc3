#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quiverhall/rep.hpp"

namespace qh {

struct DecomposeOptions {
  /// Cap on p^(dim End) for the exhaustive idempotent certification pass.
  std::uint64_t end_scan_budget = std::uint64_t{1} << 20;
  /// Seeded random endomorphism candidates tried before giving up.
  int random_trials = 200;
  /// Trial-division budget for minimal-polynomial factoring over F_p.
  std::uint64_t factor_budget = 2'000'000;
  std::uint64_t seed = 0x5eed5eed;
};

/// Searches End(V) for an endomorphism whose minimal polynomial has two
/// coprime nonconstant factors; the primary decomposition it induces splits
/// V into two nonzero subrepresentations.  Candidates: the Hom basis, its
/// pairwise sums and products, then seeded random combinations.  Over a
/// prime field, when p^(dim End) fits the budget and the search fails, an
/// exhaustive idempotent scan certifies indecomposability exactly.
///
/// Returns nullopt when V is (certified or presumed) indecomposable.  Over Q
/// throws FieldNotSplittingError when a candidate's minimal polynomial has an
/// irreducible factor of degree >= 2 and no split was found elsewhere.
template <Field F>
std::optional<std::pair<Rep<F>, Rep<F>>> find_split(
    const Rep<F>& v, const DecomposeOptions& opts = {});

/// True iff V admits no nontrivial direct-sum decomposition.  The zero
/// representation is rejected.
template <Field F>
bool is_indecomposable(const Rep<F>& v, const DecomposeOptions& opts = {});

/// Full decomposition into indecomposable summands, deterministically
/// ordered (by total dimension, dimension vector, then entries).
template <Field F>
std::vector<Rep<F>> krull_schmidt(const Rep<F>& v,
                                  const DecomposeOptions& opts = {});

}  // namespace qh
