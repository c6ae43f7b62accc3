#include <doctest.h>

#include <algorithm>
#include <set>

#include "quiverhall/hall.hpp"
#include "test_helpers.hpp"

using namespace qh;
using namespace qh::testing;

namespace {

LaurentPoly v_pow(int e, std::int64_t c = 1) {
  return LaurentPoly::monomial(e, Rational(static_cast<long>(c)));
}

// Finds the class of the (1,1) representation with nonzero map / zero map.
IsoClassId indec_class_11(HallAlgebra& hall) {
  const IsoClassTable& t = hall.classes(DimVector({1, 1}));
  for (int c = 0; c < t.class_count(); ++c)
    if (!t.representative(c).maps[0].is_zero()) return {DimVector({1, 1}), c};
  FAIL("no nonzero class");
  return {};
}

IsoClassId split_class_11(HallAlgebra& hall) {
  const IsoClassTable& t = hall.classes(DimVector({1, 1}));
  for (int c = 0; c < t.class_count(); ++c)
    if (t.representative(c).maps[0].is_zero()) return {DimVector({1, 1}), c};
  FAIL("no zero class");
  return {};
}

bool coeff_equal_at(const HallCoeff& a, const HallCoeff& b, std::int64_t p) {
  return reduce_at_prime(a, p) == reduce_at_prime(b, p);
}

// Independent count of the stable graded subspaces of a representation with
// the given sub-dimension, by scanning every subspace directly.
std::uint64_t stable_subspace_oracle(const Rep<PrimeField>& v,
                                     const DimVector& sub) {
  const PrimeField& f = v.field;
  const Quiver& q = *v.quiver;
  std::vector<std::vector<MatF>> choices(q.vertex_count());
  for (int i = 0; i < q.vertex_count(); ++i)
    for_each_subspace(f, static_cast<int>(v.dims[i]), static_cast<int>(sub[i]),
                      [&](const MatF& b) { choices[i].push_back(b); });
  std::uint64_t count = 0;
  std::vector<int> pick(q.vertex_count(), 0);
  while (true) {
    bool stable = true;
    for (int a = 0; a < q.arrow_count() && stable; ++a) {
      const Arrow& ar = q.arrow(a);
      const MatF& bt = choices[ar.tail][pick[ar.tail]];
      const MatF& bh = choices[ar.head][pick[ar.head]];
      for (int r = 0; r < bt.rows() && stable; ++r) {
        std::vector<std::int64_t> img(v.maps[a].rows(), 0);
        for (int i = 0; i < v.maps[a].rows(); ++i) {
          std::int64_t s = 0;
          for (int j = 0; j < v.maps[a].cols(); ++j)
            s = f.add(s, f.mul(v.maps[a].at(i, j), bt.at(r, j)));
          img[i] = s;
        }
        if (!bh.solve_row(img)) stable = false;
      }
    }
    if (stable) ++count;
    int i = 0;
    while (i < q.vertex_count() &&
           ++pick[i] == static_cast<int>(choices[i].size()))
      pick[i++] = 0;
    if (i == q.vertex_count()) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("hall") {

TEST_CASE("coefficient reduction at a prime") {
  // q v^-1 - v reduces to zero at q = p.
  HallCoeff c = v_pow(-1, 5) - v_pow(1);
  CHECK(reduce_at_prime(c, 5).is_zero());
  CHECK(!reduce_at_prime(c, 3).is_zero());
  // v^2 reduces to q.
  CHECK(reduce_at_prime(v_pow(2), 7) == ReducedCoeff{Rational(7), Rational(0)});
  CHECK(reduce_at_prime(v_pow(-1), 5) ==
        ReducedCoeff{Rational(0), Rational(1, 5)});
}

TEST_CASE("canonical coefficient form") {
  CanonicalCoeff c = canonical_coeff(ReducedCoeff{Rational(0), Rational(3, 4)}, 2);
  CHECK(c.v_parity == 1);
  CHECK(c.q_denom_pow == 2);
  CHECK(c.q_poly == LaurentPoly(Rational(3)));
  CHECK_THROWS_AS(canonical_coeff(ReducedCoeff{Rational(1), Rational(1)}, 2),
                  InvariantError);
  CHECK_THROWS_AS(canonical_coeff(ReducedCoeff{Rational(1, 3), Rational(0)}, 2),
                  InvariantError);
}

TEST_CASE("structure constants on the two-vertex quiver") {
  HallAlgebra hall(a2(), 3);
  IsoClassId s1 = hall.simple_class(0);
  IsoClassId s2 = hall.simple_class(1);
  IsoClassId indec = indec_class_11(hall);
  IsoClassId split = split_class_11(hall);

  CHECK(hall.hall_constant(split, s1, s2) == 1);
  CHECK(hall.hall_constant(indec, s1, s2) == 1);
  CHECK(hall.hall_constant(indec, s2, s1) == 0);
  CHECK(hall.hall_constant(split, s2, s1) == 1);
  // Dimension mismatch convention.
  CHECK(hall.hall_constant(split, s1, s1) == 0);
}

TEST_CASE("products of the simple classes") {
  for (std::int64_t p : {2, 3, 5}) {
    HallAlgebra hall(a2(), p);
    IsoClassId s1 = hall.simple_class(0);
    IsoClassId s2 = hall.simple_class(1);
    IsoClassId indec = indec_class_11(hall);
    IsoClassId split = split_class_11(hall);

    HallElement prod = hall.multiply_classes(s1, s2);
    REQUIRE(prod.terms.size() == 2);
    CHECK(coeff_equal_at(prod.terms.at(split), v_pow(-1), p));
    CHECK(coeff_equal_at(prod.terms.at(indec), v_pow(-1), p));

    HallElement rev = hall.multiply_classes(s2, s1);
    REQUIRE(rev.terms.size() == 1);
    CHECK(coeff_equal_at(rev.terms.at(split), v_pow(0), p));
  }
}

TEST_CASE("the class of the trivial representation is a two-sided unit") {
  HallAlgebra hall(a2(), 3);
  HallElement unit;
  unit.add_term(hall.unit_class(), LaurentPoly(Rational(1)));
  HallElement x = hall.composition_monomial({0, 1});
  HallElement left = hall.multiply(unit, x);
  HallElement right = hall.multiply(x, unit);
  REQUIRE(left.terms.size() == x.terms.size());
  REQUIRE(right.terms.size() == x.terms.size());
  for (const auto& [cls, c] : x.terms) {
    CHECK(coeff_equal_at(left.terms.at(cls), c, 3));
    CHECK(coeff_equal_at(right.terms.at(cls), c, 3));
  }
}

TEST_CASE("composition monomials") {
  HallAlgebra hall(a2(), 3);
  // Single-letter word is the simple class.
  HallElement s = hall.composition_monomial({0});
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms.begin()->first == hall.simple_class(0));

  // Word (1,1): coefficient v * (number of lines in F_3^2) = 4v on the
  // square of the simple class; the line count is verified independently.
  HallElement sq = hall.composition_monomial({0, 0});
  REQUIRE(sq.terms.size() == 1);
  CHECK(sq.terms.begin()->first.dim == DimVector({2, 0}));
  std::uint64_t lines = stable_subspace_oracle(
      hall.representative(sq.terms.begin()->first), DimVector({1, 0}));
  CHECK(lines == 4);
  CHECK(coeff_equal_at(sq.terms.begin()->second,
                       v_pow(1, static_cast<std::int64_t>(lines)), 3));
}

TEST_CASE("grading: products of homogeneous elements are homogeneous") {
  HallAlgebra hall(a3(), 2);
  HallElement x = hall.composition_monomial({0, 1});
  HallElement y = hall.composition_monomial({2});
  HallElement prod = hall.multiply(x, y);
  for (const auto& [cls, c] : prod.terms)
    CHECK(cls.dim == DimVector({1, 1, 1}));
}

TEST_CASE("structure constants against a definition-level oracle") {
  // Independent route: graded subspaces are enumerated as raw subsets of
  // the vector space closed under addition and scaling (no echelon forms),
  // stability is checked by direct membership, and the sub/quotient types
  // are identified with is_isomorphic instead of the label tables.
  for (std::int64_t p : {2, 3}) {
    PrimeField f(p);
    QuiverPtr q = a2();
    HallAlgebra hall(q, p);

    // All subspaces of F_p^n for n <= 2, as sorted vector lists.
    auto subspaces_of = [&](int n) {
      std::vector<std::vector<std::vector<std::int64_t>>> result;
      std::vector<std::vector<std::int64_t>> points;
      int total = 1;
      for (int i = 0; i < n; ++i) total *= static_cast<int>(p);
      for (int code = 0; code < total; ++code) {
        std::vector<std::int64_t> v(n);
        int x = code;
        for (int i = 0; i < n; ++i) {
          v[i] = x % p;
          x /= static_cast<int>(p);
        }
        points.push_back(v);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<std::vector<std::int64_t>> subset;
        for (int i = 0; i < total; ++i)
          if (mask & (std::uint64_t{1} << i)) subset.push_back(points[i]);
        // Closed under addition and scaling, contains zero?
        auto contains = [&](const std::vector<std::int64_t>& v) {
          return std::find(subset.begin(), subset.end(), v) != subset.end();
        };
        bool closed = contains(std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < subset.size() && closed; ++i)
          for (std::size_t j = 0; j < subset.size() && closed; ++j) {
            std::vector<std::int64_t> sum(n);
            for (int k = 0; k < n; ++k) sum[k] = f.add(subset[i][k], subset[j][k]);
            if (!contains(sum)) closed = false;
          }
        for (std::size_t i = 0; i < subset.size() && closed; ++i)
          for (std::int64_t c = 0; c < p && closed; ++c) {
            std::vector<std::int64_t> scaled(n);
            for (int k = 0; k < n; ++k) scaled[k] = f.mul(c, subset[i][k]);
            if (!contains(scaled)) closed = false;
          }
        if (closed && !subset.empty()) result.push_back(subset);
      }
      return result;
    };

    auto span_dim = [&](const std::vector<std::vector<std::int64_t>>& vecs,
                        int n) {
      if (vecs.empty()) return 0;
      MatF m(static_cast<int>(vecs.size()), n, f);
      for (std::size_t i = 0; i < vecs.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
      return m.rank();
    };

    auto oracle = [&](const Rep<PrimeField>& big, const Rep<PrimeField>& quot_type,
                      const Rep<PrimeField>& sub_type) {
      int n1 = static_cast<int>(big.dims[0]);
      int n2 = static_cast<int>(big.dims[1]);
      std::uint64_t count = 0;
      for (const auto& s1 : subspaces_of(n1))
        for (const auto& s2 : subspaces_of(n2)) {
          if (span_dim(s1, n1) != sub_type.dims[0]) continue;
          if (span_dim(s2, n2) != sub_type.dims[1]) continue;
          // Stability: the image of every member of s1 lies in s2.
          bool stable = true;
          for (const auto& v : s1) {
            std::vector<std::int64_t> img(n2, 0);
            for (int i = 0; i < n2; ++i) {
              std::int64_t s = 0;
              for (int j = 0; j < n1; ++j)
                s = f.add(s, f.mul(big.maps[0].at(i, j), v[j]));
              img[i] = s;
            }
            if (std::find(s2.begin(), s2.end(), img) == s2.end()) stable = false;
          }
          if (!stable) continue;
          // Build sub and quotient via row bases and compare types.
          auto row_basis = [&](const std::vector<std::vector<std::int64_t>>& vecs,
                               int n) {
            MatF m(static_cast<int>(vecs.size()), n, f);
            for (std::size_t i = 0; i < vecs.size(); ++i)
              for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
            std::vector<int> pivots = m.rref_in_place();
            MatF basis(static_cast<int>(pivots.size()), n, f);
            for (int i = 0; i < basis.rows(); ++i)
              for (int j = 0; j < n; ++j) basis.at(i, j) = m.at(i, j);
            return basis;
          };
          std::vector<MatF> basis{row_basis(s1, n1), row_basis(s2, n2)};
          Rep<PrimeField> sub = sub_rep(big, basis);
          if (is_isomorphic(sub, sub_type).verdict != IsoVerdict::yes) continue;
          // On this quiver the quotient type is determined by its
          // dimension vector and the induced map's rank; the rank of the
          // map modulo S_2 is rank([S_2 basis; M columns]) - dim S_2.
          DimVector qd = big.dims - sub.dims;
          Rep<PrimeField> quot(big.quiver, f, qd);
          MatF joint(basis[1].rows() + n1, n2, f);
          for (int i = 0; i < basis[1].rows(); ++i)
            for (int j = 0; j < n2; ++j) joint.at(i, j) = basis[1].at(i, j);
          for (int c = 0; c < n1; ++c)
            for (int i = 0; i < n2; ++i)
              joint.at(basis[1].rows() + c, i) = big.maps[0].at(i, c);
          int induced_rank = joint.rank() - basis[1].rows();
          for (int i = 0; i < std::min<std::int64_t>(qd[0], qd[1]); ++i)
            if (i < induced_rank) quot.maps[0].at(i, i) = 1;
          // quot now has the right rank; compare against the target type.
          if (quot.dims != quot_type.dims) continue;
          if (quot.maps[0].rank() != quot_type.maps[0].rank()) continue;
          ++count;
        }
      return count;
    };

    // Check every (V, V1, V2) triple with dims (1,1) = (1,0) + (0,1) and
    // (2,1) = (1,0) + (1,1).
    const IsoClassTable& t11 = hall.classes(DimVector({1, 1}));
    IsoClassId s1 = hall.simple_class(0);
    IsoClassId s2 = hall.simple_class(1);
    for (int c = 0; c < t11.class_count(); ++c) {
      IsoClassId v{DimVector({1, 1}), c};
      CHECK(hall.hall_constant(v, s1, s2) ==
            oracle(t11.representative(c), hall.representative(s1),
                   hall.representative(s2)));
      CHECK(hall.hall_constant(v, s2, s1) ==
            oracle(t11.representative(c), hall.representative(s2),
                   hall.representative(s1)));
    }
    const IsoClassTable& t21 = hall.classes(DimVector({2, 1}));
    for (int c = 0; c < t21.class_count(); ++c) {
      IsoClassId v{DimVector({2, 1}), c};
      for (int k = 0; k < t11.class_count(); ++k) {
        IsoClassId w{DimVector({1, 1}), k};
        CHECK(hall.hall_constant(v, s1, w) ==
              oracle(t21.representative(c), hall.representative(s1),
                     hall.representative(w)));
      }
    }
  }
}

TEST_CASE("classical binomials do not satisfy the quantum relation") {
  // Negative control: with plain integer binomial coefficients in place of
  // the quantum ones the alternating sum must NOT vanish (the twist is
  // genuinely quantum for q > 1).
  HallAlgebra hall(a2(), 3);
  HallElement residual;
  for (int k = 0; k <= 2; ++k) {
    std::vector<int> word;
    for (int t = 0; t < k; ++t) word.push_back(0);
    word.push_back(1);
    for (int t = 0; t < 2 - k; ++t) word.push_back(0);
    std::int64_t c = (k == 1) ? -2 : 1;
    residual = residual +
               hall.composition_monomial(word).scaled(
                   LaurentPoly(Rational(static_cast<long>(c))));
  }
  CHECK(!residual.is_zero_at(3));
}

TEST_CASE("conservation: structure constants add up to the flag count") {
  for (std::int64_t p : {2, 3}) {
    HallAlgebra hall(a2(), p);
    const IsoClassTable& big = hall.classes(DimVector({1, 1}));
    const IsoClassTable& d10 = hall.classes(DimVector({1, 0}));
    const IsoClassTable& d01 = hall.classes(DimVector({0, 1}));
    for (int c = 0; c < big.class_count(); ++c) {
      IsoClassId v{DimVector({1, 1}), c};
      std::uint64_t total = 0;
      for (int c1 = 0; c1 < d10.class_count(); ++c1)
        for (int c2 = 0; c2 < d01.class_count(); ++c2)
          total += hall.hall_constant(v, IsoClassId{DimVector({1, 0}), c1},
                                      IsoClassId{DimVector({0, 1}), c2});
      CHECK(total ==
            stable_subspace_oracle(big.representative(c), DimVector({0, 1})));
    }
  }
}

TEST_CASE("associativity on all homogeneous triples within the bound") {
  for (const QuiverPtr& quiver : {a2(), kronecker()}) {
    for (std::int64_t p : {2, 3}) {
      HallAlgebra hall(quiver, p);
      DimVector bound({2, 2});
      std::vector<IsoClassId> classes;
      for (std::int64_t d1 = 0; d1 <= 2; ++d1)
        for (std::int64_t d2 = 0; d2 <= 2; ++d2) {
          const IsoClassTable& t = hall.classes(DimVector({d1, d2}));
          for (int c = 0; c < t.class_count(); ++c)
            classes.push_back({DimVector({d1, d2}), c});
        }
      for (const IsoClassId& a : classes)
        for (const IsoClassId& b : classes)
          for (const IsoClassId& c : classes) {
            if (!(a.dim + b.dim + c.dim).dominated_by(bound)) continue;
            HallElement ea, eb, ec;
            ea.add_term(a, LaurentPoly(Rational(1)));
            eb.add_term(b, LaurentPoly(Rational(1)));
            ec.add_term(c, LaurentPoly(Rational(1)));
            HallElement l = hall.multiply(hall.multiply(ea, eb), ec);
            HallElement r = hall.multiply(ea, hall.multiply(eb, ec));
            std::set<IsoClassId> keys;
            for (const auto& [k, cc] : l.terms) keys.insert(k);
            for (const auto& [k, cc] : r.terms) keys.insert(k);
            for (const IsoClassId& k : keys) {
              HallCoeff cl = l.terms.count(k) ? l.terms.at(k) : HallCoeff();
              HallCoeff cr = r.terms.count(k) ? r.terms.at(k) : HallCoeff();
              CHECK(coeff_equal_at(cl, cr, p));
            }
          }
    }
  }
}

TEST_CASE("quantum Serre relations hold") {
  for (std::int64_t p : {2, 3}) {
    HallAlgebra hall(a2(), p);
    CHECK(hall.serre_check(0, 1).holds);
    CHECK(hall.serre_check(1, 0).holds);
  }
  {
    HallAlgebra hall(a3(), 3);
    CHECK(hall.serre_check(0, 1).holds);
    CHECK(hall.serre_check(1, 0).holds);
    CHECK(hall.serre_check(1, 2).holds);
  }
  {
    HallAlgebra hall(kronecker(), 2);
    CHECK(hall.serre_check(0, 1).holds);
  }
}

TEST_CASE("serre_check validates input") {
  HallAlgebra hall(a2(), 2);
  CHECK_THROWS_AS(hall.serre_check(0, 0), InputError);
  CHECK_THROWS_AS(hall.serre_check(0, 7), InputError);
  CHECK_THROWS_AS(HallAlgebra(cycle3(), 2), InputError);  // cyclic
  CHECK_THROWS_AS(HallAlgebra(a2(), 4), InputError);      // non-prime
}

TEST_CASE("budget refusal reports the needed count") {
  HallOptions opts;
  opts.rep_point_budget = 10;
  HallAlgebra hall(a2(), 5, opts);
  CHECK_THROWS_AS(hall.composition_monomial({0, 1, 0, 1}), BudgetError);
}

TEST_CASE("graded dimensions of the Serre-presented algebra") {
  CHECK(u_plus_graded_dim(*a2(), DimVector({1, 1})) == 2);
  CHECK(u_plus_graded_dim(*a2(), DimVector({2, 1})) == 2);
  CHECK(u_plus_graded_dim(*a2(), DimVector({1, 0})) == 1);
  CHECK(u_plus_graded_dim(*a2(), DimVector({0, 1})) == 1);
  CHECK(u_plus_graded_dim(*a2(), DimVector({2, 2})) == 3);
  CHECK(u_plus_graded_dim(*a3(), DimVector({1, 1, 1})) == 4);
}

TEST_CASE("dimension comparison against the class count") {
  {
    HallAlgebra hall(a2(), 2);
    for (const DimVector& nu :
         {DimVector({1, 1}), DimVector({1, 0}), DimVector({2, 1}),
          DimVector({2, 2})}) {
      DimCheckReport r = finite_type_dim_check(hall, nu);
      CHECK(r.equal);
    }
  }
  {
    HallAlgebra hall(a3(), 2);
    DimCheckReport r = finite_type_dim_check(hall, DimVector({1, 1, 1}));
    CHECK(r.equal);
    CHECK(r.hall_dim == 4);
  }
  // A deeper grade: (1,2,1) counts the Kostant partitions of the highest
  // root plus the doubled middle, which is 5.
  for (std::int64_t p : {2, 3}) {
    HallAlgebra hall(a3(), p);
    DimCheckReport r = finite_type_dim_check(hall, DimVector({1, 2, 1}));
    CHECK(r.equal);
    CHECK(r.hall_dim == 5);
  }
  // Beyond finite type the comparison is refused: the composition algebra
  // is a proper subalgebra there.
  {
    HallAlgebra hall(kronecker(), 2);
    CHECK_THROWS_AS(finite_type_dim_check(hall, DimVector({1, 1})), InputError);
  }
}

}  // TEST_SUITE
