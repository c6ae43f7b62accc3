#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quiverhall/forms.hpp"
#include "quiverhall/laurent.hpp"
#include "quiverhall/rep_enum.hpp"

namespace qh {

/// Isomorphism class handle: dimension vector plus the class index in the
/// canonical enumeration order of that dimension's representation space.
struct IsoClassId {
  DimVector dim;
  int index = 0;

  bool operator<(const IsoClassId& o) const {
    if (dim != o.dim) return dim < o.dim;
    return index < o.index;
  }
  bool operator==(const IsoClassId& o) const {
    return dim == o.dim && index == o.index;
  }
};

/// Coefficient of a Hall algebra term over a fixed prime: an element of
/// Z[v, v^-1] kept formal in v.  The ring relation v^2 = q is NOT applied to
/// the formal representative (the q-structure of the coefficients must stay
/// visible for the multi-prime lift); equality and zero tests go through
/// reduce_at_prime, which maps v^(2k+e) to q^k v^e with q the actual prime.
using HallCoeff = LaurentPoly;

/// a + b*v with exact rationals; the canonical reduced value of a HallCoeff
/// at a fixed prime.
struct ReducedCoeff {
  Rational even;  // a
  Rational odd;   // b
  bool is_zero() const { return even == 0 && odd == 0; }
  bool operator==(const ReducedCoeff& o) const {
    return even == o.even && odd == o.odd;
  }
};

ReducedCoeff reduce_at_prime(const HallCoeff& c, std::int64_t p);

/// Even/odd split of a formal v-Laurent polynomial into two Laurent
/// polynomials in q = v^2 (exponents may be negative): c(v) is zero modulo
/// (v^2 - q) iff both parts vanish.
std::pair<LaurentPoly, LaurentPoly> reduce_parity(const LaurentPoly& c);

/// Canonical serialization form v^parity * f(q) / q^denom_pow.
struct CanonicalCoeff {
  int v_parity = 0;        // 0 or 1
  LaurentPoly q_poly;      // integer polynomial in q, not divisible by q
  int q_denom_pow = 0;
};

/// Canonicalizes a reduced coefficient; throws InvariantError on mixed
/// parity or on a denominator that is not a power of the prime.
CanonicalCoeff canonical_coeff(const ReducedCoeff& c, std::int64_t p);

/// Finite formal sum of isomorphism classes with HallCoeff coefficients.
struct HallElement {
  std::map<IsoClassId, HallCoeff> terms;

  bool is_zero_at(std::int64_t p) const {
    for (const auto& [cls, c] : terms)
      if (!reduce_at_prime(c, p).is_zero()) return false;
    return true;
  }
  void add_term(const IsoClassId& cls, const HallCoeff& c) {
    auto it = terms.find(cls);
    if (it == terms.end()) {
      if (!c.is_zero()) terms.emplace(cls, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  HallElement operator+(const HallElement& o) const {
    HallElement r = *this;
    for (const auto& [cls, c] : o.terms) r.add_term(cls, c);
    return r;
  }
  HallElement scaled(const LaurentPoly& s) const {
    HallElement r;
    for (const auto& [cls, c] : terms) {
      LaurentPoly prod = c * s;
      if (!prod.is_zero()) r.terms.emplace(cls, prod);
    }
    return r;
  }
};

struct HallOptions {
  std::uint64_t rep_point_budget = 1'000'000;
  std::uint64_t subspace_budget = 10'000'000;
};

/// Ringel-Hall algebra of an acyclic quiver over F_p: structure constants by
/// exhaustive stable-subspace counting, the v-twisted product, composition
/// monomials and the quantum Serre residuals.  Caches the iso-class tables
/// per dimension vector.
class HallAlgebra {
 public:
  HallAlgebra(QuiverPtr q, std::int64_t p, HallOptions opts = {});

  const QuiverPtr& quiver() const { return q_; }
  std::int64_t prime() const { return p_; }
  const HallOptions& options() const { return opts_; }

  /// Iso-class table for a dimension vector (built and cached on demand).
  const IsoClassTable& classes(const DimVector& dim);

  const Rep<PrimeField>& representative(const IsoClassId& id);
  IsoClassId class_of(const Rep<PrimeField>& rep);
  IsoClassId simple_class(int vertex);
  IsoClassId unit_class();  // [0]

  /// g^V_{V1,V2}: the number of submodules W of V with W iso V2 and
  /// V/W iso V1.  Dimension mismatch returns 0.
  std::uint64_t hall_constant(const IsoClassId& v, const IsoClassId& v1,
                              const IsoClassId& v2);

  /// [V1].[V2] = v^<dim V1, dim V2> sum_V g^V_{V1,V2} [V].
  HallElement multiply_classes(const IsoClassId& v1, const IsoClassId& v2);
  HallElement multiply(const HallElement& x, const HallElement& y);

  /// Left-to-right product [S^{i_1}] ... [S^{i_n}].
  HallElement composition_monomial(const std::vector<int>& word);

  /// Quantum Serre residual for vertices i != j:
  /// sum_{k=0}^{1-c_ij} (-1)^k qbinom(1-c_ij, k) E_i^k E_j E_i^{1-c_ij-k}
  /// evaluated with E_i = [S^i] and t = v.  holds() iff it reduces to zero.
  struct SerreResult {
    bool holds;
    HallElement residual;
  };
  SerreResult serre_check(int i, int j);

 private:
  QuiverPtr q_;
  std::int64_t p_;
  HallOptions opts_;
  IntMatrix cartan_;
  std::map<DimVector, std::unique_ptr<IsoClassTable>> cache_;
};

/// Number of stable graded subspaces a product scan would enumerate; used
/// for the budget refusal.
std::uint64_t subspace_scan_cost(const DimVector& ambient, const DimVector& sub,
                                 std::int64_t p);

/// Gaussian binomial [n choose k]_p: the number of k-dimensional subspaces
/// of F_p^n, as an exact integer.
std::uint64_t gaussian_binomial_count(int n, int k, std::int64_t p);

/// Enumerates the k-dimensional subspaces of F_p^n as row-reduced basis
/// matrices (k x n, RREF), invoking fn on each.
void for_each_subspace(const PrimeField& f, int n, int k,
                       const std::function<void(const MatF&)>& fn);

struct DimCheckReport {
  DimVector nu;
  int hall_dim = 0;    // iso-class count = dim H_nu
  int uplus_dim = 0;   // graded dimension of the Serre-presented algebra
  bool equal = false;
};

/// Graded dimension of the positive Serre-presented algebra at t = 1: words
/// of content nu modulo all content-compatible multiples of the classical
/// Serre elements, by exact rank computation over Q.
int u_plus_graded_dim(const Quiver& q, const DimVector& nu,
                      std::uint64_t word_budget = 200000);

/// Compares dim H_nu (iso-class count) with the Serre-presented dimension;
/// for finite-type quivers the two agree.
DimCheckReport finite_type_dim_check(HallAlgebra& hall, const DimVector& nu);

}  // namespace qh
