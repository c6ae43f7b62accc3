#include "quiverhall/interpolate.hpp"

#include <set>

#include "quiverhall/errors.hpp"

namespace qh {

LaurentPoly interpolate_in_q(
    const std::vector<std::pair<std::int64_t, Rational>>& samples,
    std::size_t degree_bound) {
  if (samples.size() < degree_bound + 1)
    throw InputError("interpolation needs at least degree_bound+1 samples");
  std::set<std::int64_t> seen;
  for (const auto& [q, v] : samples)
    if (!seen.insert(q).second)
      throw InputError("duplicate sample point q = " + std::to_string(q));

  const std::size_t n = degree_bound + 1;
  LaurentPoly result;
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for node i over the first n samples.
    LaurentPoly basis{Rational(1)};
    Rational denom(1);
    Rational xi(static_cast<long>(samples[i].first));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational xj(static_cast<long>(samples[j].first));
      LaurentPoly factor = LaurentPoly::monomial(1);
      factor.add_term(0, -xj);
      basis *= factor;
      denom *= xi - xj;
    }
    result += basis.scaled(samples[i].second / denom);
  }

  for (std::size_t i = n; i < samples.size(); ++i) {
    Rational predicted =
        result.is_zero()
            ? Rational(0)
            : result.eval(Rational(static_cast<long>(samples[i].first)));
    if (predicted != samples[i].second)
      throw InterpolationUnstableError(samples[i].first);
  }
  return result;
}

}  // namespace qh
