#include "quiverhall/hall.hpp"

#include <algorithm>
#include <limits>

#include "quiverhall/errors.hpp"

namespace qh {

ReducedCoeff reduce_at_prime(const HallCoeff& c, std::int64_t p) {
  ReducedCoeff r{Rational(0), Rational(0)};
  for (const auto& [e, coeff] : c.terms()) {
    int parity = ((e % 2) + 2) % 2;
    int k = (e - parity) / 2;
    Rational qk(1);
    Rational base = k >= 0 ? Rational(static_cast<long>(p))
                           : Rational(1, static_cast<long>(p));
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) qk *= base;
    if (parity == 0)
      r.even += coeff * qk;
    else
      r.odd += coeff * qk;
  }
  return r;
}

std::pair<LaurentPoly, LaurentPoly> reduce_parity(const LaurentPoly& c) {
  LaurentPoly even, odd;
  for (const auto& [e, coeff] : c.terms()) {
    int parity = ((e % 2) + 2) % 2;
    int k = (e - parity) / 2;
    if (parity == 0)
      even.add_term(k, coeff);
    else
      odd.add_term(k, coeff);
  }
  return {even, odd};
}

CanonicalCoeff canonical_coeff(const ReducedCoeff& c, std::int64_t p) {
  if (c.even != 0 && c.odd != 0)
    throw InvariantError("Hall coefficient has mixed v-parity");
  CanonicalCoeff out;
  if (c.is_zero()) return out;
  Rational value = c.even != 0 ? c.even : c.odd;
  out.v_parity = c.even != 0 ? 0 : 1;
  int k = denominator_power_of(value, p);
  if (k < 0)
    throw InvariantError(
        "Hall coefficient denominator is not a power of the prime");
  BigInt num = value.get_num();
  while (k > 0 && mpz_divisible_ui_p(num.get_mpz_t(),
                                     static_cast<unsigned long>(p))) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(),
                    static_cast<unsigned long>(p));
    --k;
  }
  out.q_poly = LaurentPoly(Rational(num));
  out.q_denom_pow = k;
  return out;
}

std::uint64_t gaussian_binomial_count(int n, int k, std::int64_t p) {
  if (k < 0 || k > n) return 0;
  // prod_{j=0}^{k-1} (p^{n-j} - 1) / (p^{j+1} - 1), computed exactly.
  BigInt num = 1, den = 1;
  BigInt bp = p;
  for (int j = 0; j < k; ++j) {
    BigInt t1, t2;
    mpz_pow_ui(t1.get_mpz_t(), bp.get_mpz_t(), static_cast<unsigned long>(n - j));
    mpz_pow_ui(t2.get_mpz_t(), bp.get_mpz_t(), static_cast<unsigned long>(j + 1));
    num *= t1 - 1;
    den *= t2 - 1;
  }
  BigInt res = num / den;
  if (!res.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return res.get_ui();
}

std::uint64_t subspace_scan_cost(const DimVector& ambient, const DimVector& sub,
                                 std::int64_t p) {
  std::uint64_t cost = 1;
  for (int i = 0; i < ambient.size(); ++i) {
    std::uint64_t g = gaussian_binomial_count(static_cast<int>(ambient[i]),
                                              static_cast<int>(sub[i]), p);
    if (g == 0) return 0;
    if (cost > std::numeric_limits<std::uint64_t>::max() / g)
      return std::numeric_limits<std::uint64_t>::max();
    cost *= g;
  }
  return cost;
}

void for_each_subspace(const PrimeField& f, int n, int k,
                       const std::function<void(const MatF&)>& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(MatF(0, n, f));
    return;
  }
  // Pivot column combinations in lexicographic order.
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  std::int64_t p = f.modulus();
  while (true) {
    // Free positions: (row r, col c) with c > pivots[r] and c not a pivot.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);

    std::vector<std::int64_t> vals(free_pos.size(), 0);
    while (true) {
      MatF basis(k, n, f);
      for (int r = 0; r < k; ++r) basis.at(r, pivots[r]) = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        basis.at(free_pos[i].first, free_pos[i].second) = vals[i];
      fn(basis);
      // Odometer.
      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == p) vals[pos++] = 0;
      if (pos == vals.size()) break;
      if (free_pos.empty()) break;
    }

    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

HallAlgebra::HallAlgebra(QuiverPtr q, std::int64_t p, HallOptions opts)
    : q_(std::move(q)), p_(p), opts_(opts), cartan_(cartan_matrix(*q_)) {
  if (!q_->is_acyclic())
    throw InputError("the Hall algebra here is defined for acyclic quivers");
  PrimeField check(p);  // validates primality
}

const IsoClassTable& HallAlgebra::classes(const DimVector& dim) {
  auto it = cache_.find(dim);
  if (it != cache_.end()) return *it->second;
  EnumOptions eo;
  eo.point_budget = opts_.rep_point_budget;
  auto table = std::make_unique<IsoClassTable>(
      RepSpace(q_, PrimeField(p_), dim), eo);
  return *cache_.emplace(dim, std::move(table)).first->second;
}

const Rep<PrimeField>& HallAlgebra::representative(const IsoClassId& id) {
  return classes(id.dim).representative(id.index);
}

IsoClassId HallAlgebra::class_of(const Rep<PrimeField>& rep) {
  return IsoClassId{rep.dims, classes(rep.dims).class_of(rep)};
}

IsoClassId HallAlgebra::simple_class(int vertex) {
  if (vertex < 0 || vertex >= q_->vertex_count())
    throw InputError("unknown vertex index " + std::to_string(vertex));
  DimVector d = DimVector::unit(q_->vertex_count(), vertex);
  return IsoClassId{d, classes(d).class_of(simple_rep(q_, PrimeField(p_), vertex))};
}

IsoClassId HallAlgebra::unit_class() {
  DimVector d = DimVector::zero(q_->vertex_count());
  return IsoClassId{d, 0};
}

namespace {

// RREF row basis with its pivot columns; supports reduction of a vector
// modulo the rowspace: the residue is supported on non-pivot columns, and
// the eliminated pivot coefficients are the coordinates in the basis.
struct EchelonBasis {
  MatF rows;
  std::vector<int> pivots;

  EchelonBasis(MatF m) : rows(std::move(m)) {
    for (int r = 0; r < rows.rows(); ++r)
      for (int c = 0; c < rows.cols(); ++c)
        if (rows.at(r, c) != 0) {
          pivots.push_back(c);
          break;
        }
  }

  // residue = v - sum coords_r * rows[r]; returns coords.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t>& v,
                                   const PrimeField& f) const {
    std::vector<std::int64_t> coords(pivots.size(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::int64_t c = v[pivots[r]];
      if (c == 0) continue;
      coords[r] = c;
      for (int j = 0; j < rows.cols(); ++j)
        v[j] = f.sub(v[j], f.mul(c, rows.at(static_cast<int>(r), j)));
    }
    return coords;
  }
};

bool vec_is_zero(const std::vector<std::int64_t>& v) {
  for (std::int64_t x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::uint64_t HallAlgebra::hall_constant(const IsoClassId& v,
                                         const IsoClassId& v1,
                                         const IsoClassId& v2) {
  if (!(v1.dim + v2.dim == v.dim)) return 0;
  const PrimeField f{p_};
  const Rep<PrimeField>& big = representative(v);
  const IsoClassTable& sub_table = classes(v2.dim);
  const IsoClassTable& quot_table = classes(v1.dim);

  std::uint64_t cost = subspace_scan_cost(v.dim, v2.dim, p_);
  if (cost > opts_.subspace_budget)
    throw BudgetError("Hall constant subspace scan", cost,
                      opts_.subspace_budget);

  int nv = q_->vertex_count();
  std::vector<EchelonBasis> chosen;
  chosen.reserve(nv);
  std::uint64_t count = 0;

  // Arrows whose endpoints are both assigned once vertex `next` is chosen.
  std::vector<std::vector<int>> check_after(nv);
  for (int a = 0; a < q_->arrow_count(); ++a) {
    const Arrow& ar = q_->arrow(a);
    check_after[std::max(ar.tail, ar.head)].push_back(a);
  }

  // Stability of one arrow against the chosen graded subspace.
  auto arrow_stable = [&](int a) {
    const Arrow& ar = q_->arrow(a);
    const EchelonBasis& bt = chosen[ar.tail];
    const EchelonBasis& bh = chosen[ar.head];
    const MatF& m = big.maps[a];
    for (int r = 0; r < bt.rows.rows(); ++r) {
      std::vector<std::int64_t> img(static_cast<std::size_t>(m.rows()), 0);
      for (int i = 0; i < m.rows(); ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < m.cols(); ++j)
          s = f.add(s, f.mul(m.at(i, j), bt.rows.at(r, j)));
        img[i] = s;
      }
      bh.reduce(img, f);
      if (!vec_is_zero(img)) return false;
    }
    return true;
  };

  std::function<void(int)> recurse = [&](int vertex) {
    if (vertex == nv) {
      // All vertices assigned and all arrows stable: classify sub and
      // quotient.
      Rep<PrimeField> sub(q_, f, v2.dim);
      Rep<PrimeField> quot(q_, f, v1.dim);
      for (int a = 0; a < q_->arrow_count(); ++a) {
        const Arrow& ar = q_->arrow(a);
        const EchelonBasis& bt = chosen[ar.tail];
        const EchelonBasis& bh = chosen[ar.head];
        const MatF& m = big.maps[a];
        // Submodule map: coordinates of the image of each basis row.
        for (int r = 0; r < bt.rows.rows(); ++r) {
          std::vector<std::int64_t> img(static_cast<std::size_t>(m.rows()), 0);
          for (int i = 0; i < m.rows(); ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < m.cols(); ++j)
              s = f.add(s, f.mul(m.at(i, j), bt.rows.at(r, j)));
            img[i] = s;
          }
          std::vector<std::int64_t> coords = bh.reduce(img, f);
          for (int i = 0; i < sub.maps[a].rows(); ++i)
            sub.maps[a].at(i, r) = coords[i];
        }
        // Quotient map in the non-pivot coordinate bases.
        std::vector<int> tail_free, head_free;
        {
          std::vector<bool> is_p(m.cols(), false);
          for (int c : bt.pivots) is_p[c] = true;
          for (int c = 0; c < m.cols(); ++c)
            if (!is_p[c]) tail_free.push_back(c);
        }
        {
          std::vector<bool> is_p(m.rows(), false);
          for (int c : bh.pivots) is_p[c] = true;
          for (int c = 0; c < m.rows(); ++c)
            if (!is_p[c]) head_free.push_back(c);
        }
        for (std::size_t col = 0; col < tail_free.size(); ++col) {
          std::vector<std::int64_t> u(static_cast<std::size_t>(m.rows()), 0);
          for (int i = 0; i < m.rows(); ++i) u[i] = m.at(i, tail_free[col]);
          bh.reduce(u, f);
          for (std::size_t row = 0; row < head_free.size(); ++row)
            quot.maps[a].at(static_cast<int>(row), static_cast<int>(col)) =
                u[head_free[row]];
        }
      }
      if (sub_table.class_of(sub) == v2.index &&
          quot_table.class_of(quot) == v1.index)
        ++count;
      return;
    }
    int n = static_cast<int>(v.dim[vertex]);
    int k = static_cast<int>(v2.dim[vertex]);
    for_each_subspace(f, n, k, [&](const MatF& basis) {
      chosen.emplace_back(basis);
      bool ok = true;
      for (int a : check_after[vertex])
        if (!arrow_stable(a)) {
          ok = false;
          break;
        }
      if (ok) recurse(vertex + 1);
      chosen.pop_back();
    });
  };
  recurse(0);
  return count;
}

HallElement HallAlgebra::multiply_classes(const IsoClassId& v1,
                                          const IsoClassId& v2) {
  DimVector target = v1.dim + v2.dim;
  std::int64_t twist = euler_form(*q_, v1.dim, v2.dim);
  const IsoClassTable& table = classes(target);
  HallElement out;
  for (int c = 0; c < table.class_count(); ++c) {
    IsoClassId v{target, c};
    std::uint64_t g = hall_constant(v, v1, v2);
    if (g == 0) continue;
    out.add_term(v, LaurentPoly::monomial(static_cast<int>(twist),
                                          Rational(static_cast<long>(g))));
  }
  return out;
}

HallElement HallAlgebra::multiply(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [cx, coefx] : x.terms)
    for (const auto& [cy, coefy] : y.terms) {
      HallElement prod = multiply_classes(cx, cy);
      LaurentPoly scale = coefx * coefy;
      for (const auto& [cls, c] : prod.terms) out.add_term(cls, c * scale);
    }
  return out;
}

HallElement HallAlgebra::composition_monomial(const std::vector<int>& word) {
  HallElement acc;
  acc.add_term(unit_class(), LaurentPoly(Rational(1)));
  for (int vertex : word) {
    HallElement simple;
    simple.add_term(simple_class(vertex), LaurentPoly(Rational(1)));
    acc = multiply(acc, simple);
  }
  return acc;
}

HallAlgebra::SerreResult HallAlgebra::serre_check(int i, int j) {
  if (i == j) throw InputError("Serre relation needs two distinct vertices");
  if (i < 0 || j < 0 || i >= q_->vertex_count() || j >= q_->vertex_count())
    throw InputError("vertex index out of range");
  std::int64_t cij = cartan_.at(i, j);
  int n = static_cast<int>(1 - cij);
  HallElement residual;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> word;
    for (int t = 0; t < k; ++t) word.push_back(i);
    word.push_back(j);
    for (int t = 0; t < n - k; ++t) word.push_back(i);
    HallElement mono = composition_monomial(word);
    LaurentPoly coeff = quantum_binomial(n, k);
    if (k % 2 == 1) coeff = -coeff;
    residual = residual + mono.scaled(coeff);
  }
  return SerreResult{residual.is_zero_at(p_), std::move(residual)};
}

}  // namespace qh
