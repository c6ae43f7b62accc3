#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quiverhall/rep.hpp"

namespace qh {

struct EnumOptions {
  std::uint64_t point_budget = 1'000'000;  // max points of the matrix space
};

/// The space of all representations of fixed dimension vector over F_p,
/// indexed as a mixed-radix number over all matrix entries (arrows in
/// canonical order, row-major within each matrix, first entry most
/// significant).  Index order is exactly lexicographic order on the entry
/// tuple.
class RepSpace {
 public:
  RepSpace(QuiverPtr q, PrimeField f, DimVector dims);

  const QuiverPtr& quiver() const { return q_; }
  const PrimeField& field() const { return f_; }
  const DimVector& dims() const { return dims_; }
  int total_entries() const { return total_entries_; }
  /// p^total_entries; throws BudgetError against the given cap.
  std::uint64_t point_count(std::uint64_t budget_cap) const;

  std::vector<std::int64_t> decode(std::uint64_t index) const;
  std::uint64_t encode_digits(const std::vector<std::int64_t>& digits) const;
  Rep<PrimeField> rep_from_digits(const std::vector<std::int64_t>& digits) const;
  std::vector<std::int64_t> digits_of(const Rep<PrimeField>& rep) const;

  /// Entry offset of arrow a's matrix within the digit vector.
  int arrow_offset(int a) const { return offsets_.at(a); }

 private:
  QuiverPtr q_;
  PrimeField f_;
  DimVector dims_;
  std::vector<int> offsets_;
  int total_entries_;
};

/// Exhaustive isomorphism-class partition of a representation space over
/// F_p.  Points are labelled by orbit BFS under generators of the product of
/// general linear groups; the canonical representative of each class is the
/// lexicographically minimal point of the orbit, and classes are ordered by
/// that representative.
class IsoClassTable {
 public:
  IsoClassTable(RepSpace space, EnumOptions opts);

  const RepSpace& space() const { return space_; }
  int class_count() const { return static_cast<int>(reps_.size()); }
  const std::vector<Rep<PrimeField>>& representatives() const { return reps_; }
  const Rep<PrimeField>& representative(int cls) const { return reps_.at(cls); }
  std::uint64_t orbit_size(int cls) const { return orbit_sizes_.at(cls); }
  std::uint64_t total_points() const { return total_points_; }

  /// Class label of an arbitrary representation with this space's shape.
  int class_of(const Rep<PrimeField>& rep) const;
  int class_of_index(std::uint64_t point_index) const {
    return labels_.at(point_index);
  }

 private:
  RepSpace space_;
  std::vector<std::int32_t> labels_;
  std::vector<Rep<PrimeField>> reps_;
  std::vector<std::uint64_t> orbit_sizes_;
  std::uint64_t total_points_;
};

/// Convenience wrapper building the table for (Q, d, p).
IsoClassTable enumerate_iso_classes(const QuiverPtr& q, const DimVector& dims,
                                    std::int64_t p, const EnumOptions& opts = {});

enum class IsoVerdict { yes, no, unknown };

template <Field F>
struct IsoCheck {
  IsoVerdict verdict;
  std::optional<RepMorphism<F>> witness;  // set when verdict == yes
};

struct IsoOptions {
  std::uint64_t hom_scan_budget = 1 << 20;  // exhaustive search cap: p^dim Hom
  int random_trials = 512;
  std::uint64_t seed = 0x715c0de;
};

/// Isomorphism test via the Hom space: exhaustive search for an invertible
/// intertwiner when p^dim Hom fits the budget (then the answer is exact),
/// otherwise deterministic-seeded random combinations; "unknown" is reported
/// rather than an unsound "no".
IsoCheck<PrimeField> is_isomorphic(const Rep<PrimeField>& v,
                                   const Rep<PrimeField>& w,
                                   const IsoOptions& opts = {});

/// Same interface over Q (random search only; invertibility is generic).
IsoCheck<RationalField> is_isomorphic(const Rep<RationalField>& v,
                                      const Rep<RationalField>& w,
                                      const IsoOptions& opts = {});

/// Isomorphism-invariant fingerprint used to match classes across primes:
/// dimension vector, ranks of all arrow maps and of all path composites up
/// to length #Q_1, and dim End.
template <Field F>
std::vector<std::int64_t> rep_fingerprint(const Rep<F>& v) {
  std::vector<std::int64_t> fp = v.dims.d;
  const Quiver& q = *v.quiver;
  for (const Path& p : enumerate_paths(q, q.arrow_count())) {
    if (p.is_trivial()) continue;
    Matrix<F> comp = v.maps[p.arrows.front()];
    for (std::size_t i = 1; i < p.arrows.size(); ++i)
      comp = comp * v.maps[p.arrows[i]];
    fp.push_back(comp.rank());
  }
  fp.push_back(static_cast<std::int64_t>(hom_space(v, v).size()));
  return fp;
}

}  // namespace qh
