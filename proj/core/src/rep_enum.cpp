#include "quiverhall/rep_enum.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

namespace qh {

RepSpace::RepSpace(QuiverPtr q, PrimeField f, DimVector dims)
    : q_(std::move(q)), f_(f), dims_(std::move(dims)) {
  if (dims_.size() != q_->vertex_count())
    throw InputError("dimension vector does not match quiver");
  int off = 0;
  for (const Arrow& a : q_->arrows()) {
    offsets_.push_back(off);
    off += static_cast<int>(dims_[a.head] * dims_[a.tail]);
  }
  total_entries_ = off;
}

std::uint64_t RepSpace::point_count(std::uint64_t budget_cap) const {
  std::uint64_t p = static_cast<std::uint64_t>(f_.modulus());
  std::uint64_t n = 1;
  for (int i = 0; i < total_entries_; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / p)
      throw BudgetError("representation space scan",
                        std::numeric_limits<std::uint64_t>::max(), budget_cap);
    n *= p;
  }
  if (n > budget_cap)
    throw BudgetError("representation space scan", n, budget_cap);
  return n;
}

std::vector<std::int64_t> RepSpace::decode(std::uint64_t index) const {
  std::vector<std::int64_t> digits(total_entries_, 0);
  std::uint64_t p = static_cast<std::uint64_t>(f_.modulus());
  for (int i = total_entries_ - 1; i >= 0; --i) {
    digits[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return digits;
}

std::uint64_t RepSpace::encode_digits(const std::vector<std::int64_t>& digits) const {
  std::uint64_t p = static_cast<std::uint64_t>(f_.modulus());
  std::uint64_t index = 0;
  for (int i = 0; i < total_entries_; ++i)
    index = index * p + static_cast<std::uint64_t>(digits[i]);
  return index;
}

Rep<PrimeField> RepSpace::rep_from_digits(
    const std::vector<std::int64_t>& digits) const {
  Rep<PrimeField> rep(q_, f_, dims_);
  for (int a = 0; a < q_->arrow_count(); ++a) {
    int off = offsets_[a];
    Matrix<PrimeField>& m = rep.maps[a];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = digits[off + r * m.cols() + c];
  }
  return rep;
}

std::vector<std::int64_t> RepSpace::digits_of(const Rep<PrimeField>& rep) const {
  if (rep.dims != dims_ || rep.quiver.get() != q_.get())
    throw InputError("representation does not belong to this space");
  std::vector<std::int64_t> digits(total_entries_, 0);
  for (int a = 0; a < q_->arrow_count(); ++a) {
    int off = offsets_[a];
    const Matrix<PrimeField>& m = rep.maps[a];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        digits[off + r * m.cols() + c] = m.at(r, c);
  }
  return digits;
}

namespace {

// One change-of-basis generator acting at a single vertex, with the raw data
// needed to transform a digit vector in place.
struct VertexGen {
  int vertex;
  std::vector<std::int64_t> g;     // n x n row-major
  std::vector<std::int64_t> ginv;  // n x n row-major
  int n;
};

// Generating set of GL(n, p): transvections I + e_ab and, for p > 2, one
// diagonal scaling by a primitive root.  Powers of these reach every group
// element, which is all orbit BFS needs.
std::vector<VertexGen> gl_generators(int vertex, int n, const PrimeField& f) {
  std::vector<VertexGen> gens;
  if (n == 0) return gens;
  auto ident = [&] {
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      VertexGen vg{vertex, ident(), ident(), n};
      vg.g[a * n + b] = 1;
      vg.ginv[a * n + b] = f.neg(1);
      gens.push_back(std::move(vg));
    }
  if (f.modulus() > 2) {
    VertexGen vg{vertex, ident(), ident(), n};
    std::int64_t r = f.primitive_root();
    vg.g[0] = r;
    vg.ginv[0] = f.inv(r);
    gens.push_back(std::move(vg));
  }
  return gens;
}

}  // namespace

IsoClassTable::IsoClassTable(RepSpace space, EnumOptions opts)
    : space_(std::move(space)) {
  const PrimeField& f = space_.field();
  const Quiver& q = *space_.quiver();
  const std::int64_t p = f.modulus();
  total_points_ = space_.point_count(opts.point_budget);
  labels_.assign(total_points_, -1);

  std::vector<VertexGen> gens;
  for (int v = 0; v < q.vertex_count(); ++v)
    for (VertexGen& g : gl_generators(v, static_cast<int>(space_.dims()[v]), f))
      gens.push_back(std::move(g));

  // Arrow blocks touched by each vertex.
  struct Block {
    int offset, rows, cols;
    bool at_head, at_tail;
  };
  std::vector<std::vector<Block>> touched(q.vertex_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Block b{space_.arrow_offset(a), static_cast<int>(space_.dims()[ar.head]),
            static_cast<int>(space_.dims()[ar.tail]), false, false};
    if (ar.head == ar.tail) {
      b.at_head = b.at_tail = true;
      touched[ar.head].push_back(b);
    } else {
      Block bh = b;
      bh.at_head = true;
      touched[ar.head].push_back(bh);
      Block bt = b;
      bt.at_tail = true;
      touched[ar.tail].push_back(bt);
    }
  }

  std::vector<std::int64_t> digits, moved, tmp;
  for (std::uint64_t start = 0; start < total_points_; ++start) {
    if (labels_[start] >= 0) continue;
    std::int32_t cls = static_cast<std::int32_t>(reps_.size());
    // Scanning in ascending index order makes each BFS root the
    // lexicographically minimal point of its orbit: everything smaller is
    // already labelled.
    reps_.push_back(space_.rep_from_digits(space_.decode(start)));
    std::uint64_t orbit = 0;
    std::deque<std::uint64_t> queue;
    labels_[start] = cls;
    queue.push_back(start);
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++orbit;
      digits = space_.decode(cur);
      for (const VertexGen& vg : gens) {
        moved = digits;
        for (const Block& b : touched[vg.vertex]) {
          // left-multiply by g where the vertex is the head, right-multiply
          // by g^-1 where it is the tail (both for loops).
          if (b.at_head) {
            tmp.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
            for (int i = 0; i < b.rows; ++i)
              for (int k = 0; k < b.rows; ++k) {
                std::int64_t gik = vg.g[i * vg.n + k];
                if (gik == 0) continue;
                for (int j = 0; j < b.cols; ++j)
                  tmp[i * b.cols + j] =
                      (tmp[i * b.cols + j] + gik * moved[b.offset + k * b.cols + j]) % p;
              }
            std::copy(tmp.begin(), tmp.end(), moved.begin() + b.offset);
          }
          if (b.at_tail) {
            tmp.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
            for (int i = 0; i < b.rows; ++i)
              for (int k = 0; k < b.cols; ++k) {
                std::int64_t mik = moved[b.offset + i * b.cols + k];
                if (mik == 0) continue;
                for (int j = 0; j < b.cols; ++j)
                  tmp[i * b.cols + j] =
                      (tmp[i * b.cols + j] + mik * vg.ginv[k * vg.n + j]) % p;
              }
            std::copy(tmp.begin(), tmp.end(), moved.begin() + b.offset);
          }
        }
        std::uint64_t idx = space_.encode_digits(moved);
        if (labels_[idx] < 0) {
          labels_[idx] = cls;
          queue.push_back(idx);
        }
      }
    }
    orbit_sizes_.push_back(orbit);
  }
}

int IsoClassTable::class_of(const Rep<PrimeField>& rep) const {
  return labels_.at(space_.encode_digits(space_.digits_of(rep)));
}

IsoClassTable enumerate_iso_classes(const QuiverPtr& q, const DimVector& dims,
                                    std::int64_t p, const EnumOptions& opts) {
  return IsoClassTable(RepSpace(q, PrimeField(p), dims), opts);
}

namespace {

template <Field F>
std::optional<RepMorphism<F>> combine_if_invertible(
    const std::vector<RepMorphism<F>>& basis,
    const std::vector<typename F::Elem>& coeffs, const F& f, const Rep<F>& v,
    const Rep<F>& w) {
  RepMorphism<F> m;
  for (int i = 0; i < v.quiver->vertex_count(); ++i) {
    Matrix<F> psi(static_cast<int>(w.dims[i]), static_cast<int>(v.dims[i]), f);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (f.is_zero(coeffs[b])) continue;
      psi = psi + basis[b].psi[i].scaled(coeffs[b]);
    }
    m.psi.push_back(std::move(psi));
  }
  if (morphism_is_invertible(m)) return m;
  return std::nullopt;
}

}  // namespace

IsoCheck<PrimeField> is_isomorphic(const Rep<PrimeField>& v,
                                   const Rep<PrimeField>& w,
                                   const IsoOptions& opts) {
  if (v.dims != w.dims) return {IsoVerdict::no, std::nullopt};
  if (v.dims.is_zero()) return {IsoVerdict::yes, RepMorphism<PrimeField>{}};
  // Arrow ranks are isomorphism invariants.
  for (int a = 0; a < v.quiver->arrow_count(); ++a)
    if (v.maps[a].rank() != w.maps[a].rank())
      return {IsoVerdict::no, std::nullopt};

  const PrimeField& f = v.field;
  std::vector<RepMorphism<PrimeField>> basis = hom_space(v, w);
  if (basis.empty()) return {IsoVerdict::no, std::nullopt};
  std::size_t h = basis.size();

  // Exhaustive when p^h fits the budget; this branch is exact in both
  // directions.
  std::uint64_t p = static_cast<std::uint64_t>(f.modulus());
  std::uint64_t count = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < h; ++i) {
    if (count > opts.hom_scan_budget / p) {
      exhaustive = false;
      break;
    }
    count *= p;
  }
  if (exhaustive) {
    std::vector<PrimeField::Elem> coeffs(h, 0);
    for (std::uint64_t k = 1; k < count; ++k) {
      std::uint64_t x = k;
      for (std::size_t i = 0; i < h; ++i) {
        coeffs[i] = static_cast<std::int64_t>(x % p);
        x /= p;
      }
      if (auto m = combine_if_invertible(basis, coeffs, f, v, w))
        return {IsoVerdict::yes, std::move(*m)};
    }
    return {IsoVerdict::no, std::nullopt};
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> dist(0, f.modulus() - 1);
  for (int t = 0; t < opts.random_trials; ++t) {
    std::vector<PrimeField::Elem> coeffs(h);
    for (auto& c : coeffs) c = dist(rng);
    if (auto m = combine_if_invertible(basis, coeffs, f, v, w))
      return {IsoVerdict::yes, std::move(*m)};
  }
  return {IsoVerdict::unknown, std::nullopt};
}

IsoCheck<RationalField> is_isomorphic(const Rep<RationalField>& v,
                                      const Rep<RationalField>& w,
                                      const IsoOptions& opts) {
  if (v.dims != w.dims) return {IsoVerdict::no, std::nullopt};
  if (v.dims.is_zero()) return {IsoVerdict::yes, RepMorphism<RationalField>{}};
  for (int a = 0; a < v.quiver->arrow_count(); ++a)
    if (v.maps[a].rank() != w.maps[a].rank())
      return {IsoVerdict::no, std::nullopt};

  RationalField f;
  std::vector<RepMorphism<RationalField>> basis = hom_space(v, w);
  if (basis.empty()) return {IsoVerdict::no, std::nullopt};

  // The all-ones combination is invertible generically; then seeded small
  // random combinations.
  std::vector<Rational> ones(basis.size(), Rational(1));
  if (auto m = combine_if_invertible(basis, ones, f, v, w))
    return {IsoVerdict::yes, std::move(*m)};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < opts.random_trials; ++t) {
    std::vector<Rational> coeffs(basis.size());
    for (auto& c : coeffs) c = Rational(dist(rng));
    if (auto m = combine_if_invertible(basis, coeffs, f, v, w))
      return {IsoVerdict::yes, std::move(*m)};
  }
  return {IsoVerdict::unknown, std::nullopt};
}

}  // namespace qh
