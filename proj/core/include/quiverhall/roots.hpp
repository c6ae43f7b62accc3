#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverhall/decompose.hpp"
#include "quiverhall/forms.hpp"
#include "quiverhall/quiver.hpp"
#include "quiverhall/rep_enum.hpp"

namespace qh {

enum class RootKind { real, imaginary };

struct Root {
  DimVector vector;
  RootKind kind;

  bool operator<(const Root& o) const { return vector < o.vector; }
  bool operator==(const Root& o) const {
    return vector == o.vector && kind == o.kind;
  }
};

/// Positive roots of the root system attached to the underlying graph.
///
/// Finite type: the complete list, by reflection closure of the simple
/// roots (height_bound is ignored once the closure stabilizes).  Otherwise:
/// all real roots of height <= height_bound found by the reflection orbit of
/// the simple roots, plus every imaginary-root candidate of height <= bound
/// (nonzero, connected support, Tits form <= 0).  Zero is never listed; the
/// trivial representation is handled separately by the callers.
std::vector<Root> positive_roots(const Quiver& q, std::int64_t height_bound = 8);

/// Simple reflection s_i acting on a dimension-style integer vector.
DimVector reflect(const IntMatrix& cartan, const DimVector& alpha, int i);

struct DimClassCount {
  DimVector dim;
  int iso_classes = 0;        // all classes of this dimension vector
  int indecomposables = 0;    // indecomposable classes among them
  bool is_root = false;
  RootKind root_kind = RootKind::real;
};

struct RootCheckReport {
  std::string verdict;  // "bijection holds", "consistent", or a failure note
  bool ok = false;
  std::vector<Root> roots;            // roots within the checked bound
  std::vector<DimClassCount> counts;  // one row per nonzero dim vector checked
};

struct RootCheckOptions {
  EnumOptions enumeration;
  DecomposeOptions decomposition;
};

/// Finite-type bijection check: enumerates all indecomposable classes over
/// F_p with dimension vectors bounded by dim_bound per vertex and verifies
/// that each positive root carries exactly one indecomposable class and that
/// no indecomposable exists off the root list.
RootCheckReport check_gabriel(const QuiverPtr& q, std::int64_t p,
                              const DimVector& dim_bound,
                              const RootCheckOptions& opts = {});

/// General root-criterion check: every indecomposable dimension vector is a
/// positive root; real roots within the bound carry exactly one class;
/// imaginary roots have their class counts recorded.
RootCheckReport check_kac(const QuiverPtr& q, std::int64_t p,
                          const DimVector& dim_bound,
                          const RootCheckOptions& opts = {});

}  // namespace qh
