#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiverhall/quiver.hpp"

namespace qh {

/// Small dense integer matrix for the bilinear forms of a quiver.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major n x n

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
  bool operator==(const IntMatrix& o) const = default;
};

/// Euler matrix E = (a_ij), a_ij = delta_ij - #{arrows i -> j}.
IntMatrix euler_matrix(const Quiver& q);

/// Cartan matrix C = E + E^T; symmetric, orientation-independent.
IntMatrix cartan_matrix(const Quiver& q);

/// Euler form <alpha, beta> = alpha^T E beta, exact.
std::int64_t euler_form(const Quiver& q, const DimVector& alpha,
                        const DimVector& beta);

/// Tits form q(alpha) = <alpha, alpha>; the identity 2 q(alpha) =
/// alpha^T C alpha is checked on every call.
std::int64_t tits_form(const Quiver& q, const DimVector& alpha);

enum class ReprType { finite, tame, wild };

std::string repr_type_str(ReprType t);

struct ComponentClass {
  std::vector<int> vertices;    // canonical order
  std::string graph_label;      // "A4", "D~4", "wild", ...
  ReprType shape_type;          // from graph-shape recognition
  ReprType definiteness_type;   // from the integer definiteness test
  bool has_loop = false;
};

struct Classification {
  ReprType verdict;
  std::string graph;  // component labels joined with " + "
  std::vector<ComponentClass> components;
};

/// Finite/tame/wild classification.  Two independent classifiers run per
/// connected component of the underlying graph: positive (semi)definiteness
/// of the Cartan form by exact principal minors, and explicit recognition of
/// the (extended) Dynkin shapes.  Disagreement raises InvariantError.
/// A loop vertex puts its component outside the ADE classification and is
/// reported as wild with has_loop set.
Classification classify_type(const Quiver& q);

}  // namespace qh
