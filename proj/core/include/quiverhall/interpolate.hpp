#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quiverhall/laurent.hpp"
#include "quiverhall/rational.hpp"

namespace qh {

/// Exact Lagrange interpolation of a polynomial in q through values sampled
/// at distinct primes.  The first degree_bound+1 samples determine the
/// polynomial; every surplus sample is then checked and a mismatch raises
/// InterpolationUnstableError with the witness prime (the degree bound was
/// too small, or the quantity is not polynomial in q).
///
/// Returns the polynomial as a LaurentPoly in q with exponents >= 0.
LaurentPoly interpolate_in_q(
    const std::vector<std::pair<std::int64_t, Rational>>& samples,
    std::size_t degree_bound);

}  // namespace qh
