#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quiverhall/matrix.hpp"

namespace qh {

/// Univariate polynomial over a field: ascending coefficients, no trailing
/// zeros, [] is the zero polynomial.
template <Field F>
using Poly = std::vector<typename F::Elem>;

/// Monic minimal polynomial of a graded endomorphism (one square matrix per
/// vertex), computed by Krylov iteration on the block-diagonal total matrix.
template <Field F>
Poly<F> min_poly_graded(const F& f, const std::vector<Matrix<F>>& psi);

/// Evaluates a polynomial on a graded endomorphism (per-vertex Horner).
template <Field F>
std::vector<Matrix<F>> eval_poly_graded(const F& f, const Poly<F>& poly,
                                        const std::vector<Matrix<F>>& psi);

/// Splits a monic polynomial over F_p into a coprime pair f = g * h with
/// g, h nonconstant, when one exists: g is the primary part of the smallest
/// irreducible factor (found by bounded trial division).  Returns nullopt
/// when f is a power of a single irreducible.  Throws BudgetError when the
/// trial-division candidate count would exceed the budget.
std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
coprime_split_fp(const PrimeField& f, std::vector<std::int64_t> poly,
                 std::uint64_t budget);

struct RationalSplit {
  // Set when f = g * h with g = (x - r)^e the primary part of a rational
  // root and h a nonconstant coprime cofactor.
  std::optional<std::pair<Poly<RationalField>, Poly<RationalField>>> split;
  // True when the part of f without rational roots has degree >= 2, i.e. f
  // does not split into linear factors over Q.
  bool has_nonlinear_part = false;
};

/// Rational-root analysis of a monic polynomial over Q.  Root candidates are
/// read off the divisors of the constant term (cleared to an integer
/// polynomial); divisor enumeration is bounded, and a constant term too hard
/// to factor is reported as a nonlinear part.
RationalSplit coprime_split_q(const Poly<RationalField>& poly);

}  // namespace qh
