#include "quiverhall/minpoly.hpp"

#include <algorithm>

#include "quiverhall/errors.hpp"

namespace qh {

namespace {

template <Field F>
Matrix<F> total_matrix(const F& f, const std::vector<Matrix<F>>& psi) {
  int n = 0;
  for (const Matrix<F>& m : psi) n += m.rows();
  Matrix<F> big(n, n, f);
  int off = 0;
  for (const Matrix<F>& m : psi) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) big.at(off + i, off + j) = m.at(i, j);
    off += m.rows();
  }
  return big;
}

}  // namespace

template <Field F>
Poly<F> min_poly_graded(const F& f, const std::vector<Matrix<F>>& psi) {
  Matrix<F> m = total_matrix(f, psi);
  int n = m.rows();
  if (n == 0) return Poly<F>{f.one()};  // minimal polynomial of the empty map
  // Rows of `powers` are the flattened matrices I, M, M^2, ...
  Matrix<F> cur = Matrix<F>::identity(n, f);
  std::vector<std::vector<typename F::Elem>> flat;
  auto flatten = [&](const Matrix<F>& x) {
    std::vector<typename F::Elem> v;
    v.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(x.at(i, j));
    return v;
  };
  for (int k = 0;; ++k) {
    std::vector<typename F::Elem> target = flatten(cur);
    if (k > 0) {
      Matrix<F> prev(k, n * n, f);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < n * n; ++c) prev.at(r, c) = flat[r][c];
      if (auto coords = prev.solve_row(target)) {
        // M^k = sum coords_j M^j, so minpoly = x^k - sum coords_j x^j.
        Poly<F> p(static_cast<std::size_t>(k) + 1, f.zero());
        for (int j = 0; j < k; ++j) p[j] = f.neg((*coords)[j]);
        p[k] = f.one();
        return p;
      }
    }
    flat.push_back(std::move(target));
    cur = cur * m;
    if (k > n) throw InvariantError("minimal polynomial iteration ran away");
  }
}

template <Field F>
std::vector<Matrix<F>> eval_poly_graded(const F& f, const Poly<F>& poly,
                                        const std::vector<Matrix<F>>& psi) {
  std::vector<Matrix<F>> out;
  for (const Matrix<F>& m : psi) {
    int n = m.rows();
    Matrix<F> acc(n, n, f);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      acc = acc * m;
      for (int i = 0; i < n; ++i) acc.at(i, i) = f.add(acc.at(i, i), *it);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template Poly<PrimeField> min_poly_graded(const PrimeField&,
                                          const std::vector<MatF>&);
template Poly<RationalField> min_poly_graded(const RationalField&,
                                             const std::vector<MatQ>&);
template std::vector<MatF> eval_poly_graded(const PrimeField&,
                                            const Poly<PrimeField>&,
                                            const std::vector<MatF>&);
template std::vector<MatQ> eval_poly_graded(const RationalField&,
                                            const Poly<RationalField>&,
                                            const std::vector<MatQ>&);

namespace {

using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder by a monic divisor.
std::pair<FpPoly, FpPoly> fp_divmod(const PrimeField& f, FpPoly num,
                                    const FpPoly& den) {
  FpPoly quot(num.size(), 0);
  while (num.size() >= den.size() && !num.empty()) {
    std::int64_t c = num.back();
    std::size_t shift = num.size() - den.size();
    if (c != 0) {
      quot[shift] = c;
      for (std::size_t i = 0; i < den.size(); ++i)
        num[shift + i] = f.sub(num[shift + i], f.mul(c, den[i]));
    }
    num.pop_back();
  }
  fp_trim(num);
  fp_trim(quot);
  return {quot, num};
}

}  // namespace

std::optional<std::pair<FpPoly, FpPoly>> coprime_split_fp(const PrimeField& f,
                                                          FpPoly poly,
                                                          std::uint64_t budget) {
  fp_trim(poly);
  if (poly.size() <= 2) return std::nullopt;  // constant or linear
  int deg = static_cast<int>(poly.size()) - 1;
  std::int64_t p = f.modulus();

  // Smallest-degree proper divisor (necessarily irreducible) by trial
  // division; a proper divisor, if any, has degree <= deg/2.
  std::uint64_t candidates = 0;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      if (count > budget / static_cast<std::uint64_t>(p))
        throw BudgetError("minimal polynomial trial division", 0, budget);
      count *= static_cast<std::uint64_t>(p);
      if (candidates + count > budget)
        throw BudgetError("minimal polynomial trial division",
                          candidates + count, budget);
    }
    candidates += count;
    FpPoly div(static_cast<std::size_t>(d) + 1, 0);
    div[d] = 1;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t x = k;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<std::int64_t>(x % p);
        x /= p;
      }
      auto [q, r] = fp_divmod(f, poly, div);
      if (!r.empty()) continue;
      // Found the smallest irreducible factor g; peel its full primary part.
      FpPoly primary{1};
      FpPoly rest = poly;
      while (true) {
        auto [q2, r2] = fp_divmod(f, rest, div);
        if (!r2.empty()) break;
        rest = q2;
        // primary *= div
        FpPoly next(primary.size() + div.size() - 1, 0);
        for (std::size_t i = 0; i < primary.size(); ++i)
          for (std::size_t j = 0; j < div.size(); ++j)
            next[i + j] = f.add(next[i + j], f.mul(primary[i], div[j]));
        primary = std::move(next);
      }
      if (rest.size() <= 1) return std::nullopt;  // poly is a prime power
      return std::make_pair(primary, rest);
    }
  }
  return std::nullopt;  // irreducible
}

RationalSplit coprime_split_q(const Poly<RationalField>& poly) {
  RationalSplit result;
  if (poly.size() <= 2) return result;

  // Clear denominators: integer polynomial with the same roots.
  BigInt lcm = 1;
  for (const Rational& c : poly)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> zp;
  for (const Rational& c : poly) {
    Rational scaled = c * Rational(lcm);
    zp.push_back(scaled.get_num());
  }

  // Rational roots r = a/b with a | constant term, b | leading coefficient.
  // The divisor scan is bounded; desk-scale eigenvalues are small.
  int low = 0;
  while (low < static_cast<int>(zp.size()) && zp[low] == 0) ++low;
  if (low > 0) {
    // x^low divides: 0 is a root.
    Poly<RationalField> g(static_cast<std::size_t>(low) + 1, Rational(0));
    g[low] = Rational(1);
    Poly<RationalField> h(poly.begin() + low, poly.end());
    if (h.size() > 1) {
      result.split = std::make_pair(g, h);
      return result;
    }
    return result;  // poly = x^deg, a prime power
  }

  const BigInt& a0 = zp.front();
  const BigInt& lead = zp.back();
  const long kDivisorScan = 2000000;
  BigInt abs_a0 = abs(a0);
  BigInt abs_lead = abs(lead);

  auto divisors = [&](const BigInt& n) {
    std::vector<BigInt> divs;
    for (long d = 1; BigInt(d) * d <= n && d <= kDivisorScan; ++d) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
        divs.push_back(d);
        divs.push_back(n / d);
      }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
  };

  auto eval = [&](const Rational& x) {
    Rational acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  for (const BigInt& a : divisors(abs_a0)) {
    for (const BigInt& b : divisors(abs_lead)) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational root = Rational(a) / Rational(b);
        if (sign) root = -root;
        root.canonicalize();
        if (eval(root) != 0) continue;
        // Peel the primary part (x - root)^e.
        Poly<RationalField> linear{-root, Rational(1)};
        Poly<RationalField> primary{Rational(1)};
        Poly<RationalField> rest = poly;
        while (true) {
          // Synthetic division of rest by (x - root).
          Poly<RationalField> quot(rest.size() - 1, Rational(0));
          Rational carry(0);
          for (int i = static_cast<int>(rest.size()) - 1; i >= 1; --i) {
            carry = rest[i] + carry * root;
            quot[i - 1] = carry;
          }
          if (rest[0] + carry * root != 0) break;
          rest = quot;
          Poly<RationalField> next(primary.size() + 1, Rational(0));
          for (std::size_t i = 0; i < primary.size(); ++i) {
            next[i] += primary[i] * (-root);
            next[i + 1] += primary[i];
          }
          primary = std::move(next);
          if (rest.size() <= 1) break;
        }
        if (rest.size() > 1) {
          result.split = std::make_pair(primary, rest);
          return result;
        }
        return result;  // poly = (x - root)^deg
      }
    }
  }
  // No rational root and degree >= 2: some irreducible factor is nonlinear.
  result.has_nonlinear_part = true;
  return result;
}

}  // namespace qh
