#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverhall/errors.hpp"

namespace qh {

struct Arrow {
  std::string name;
  int tail;  // vertex index
  int head;  // vertex index
};

/// Finite directed graph with named vertices and arrows.  Vertex input order
/// is the canonical order and fixes all matrix row/column conventions
/// downstream.  Immutable after construction.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }
  const std::string& vertex_name(int i) const { return vertices_.at(i); }

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  bool has_loops() const;
  bool is_acyclic() const;  // topological sort

  /// Same vertices, every arrow reversed (names preserved).
  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_idx_;
  std::map<std::string, int> arrow_idx_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path rho_1 rho_2 ... rho_m with h(rho_{i+1}) = t(rho_i), stored as arrow
/// indices in that (left to right) order; the rightmost arrow acts first.
/// A trivial path e_i has no arrows and records its vertex.
struct Path {
  int vertex = -1;             // used only when arrows is empty
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  int head(const Quiver& q) const {
    return arrows.empty() ? vertex : q.arrow(arrows.front()).head;
  }
  int tail(const Quiver& q) const {
    return arrows.empty() ? vertex : q.arrow(arrows.back()).tail;
  }
};

bool path_is_valid(const Quiver& q, const Path& p);

/// Concatenation x.y, defined when h(y) = t(x); nullopt otherwise.
std::optional<Path> compose_paths(const Quiver& q, const Path& x, const Path& y);

/// "sigma rho" style display; trivial paths print as "e_<vertex>".
std::string path_str(const Quiver& q, const Path& p);

/// All paths of length <= max_len, trivial paths included, ordered by length
/// then lexicographically by the arrow-name sequence (trivial paths by vertex
/// order).  For acyclic quivers and max_len >= arrow count this is the
/// complete path basis of the path algebra.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

/// Deterministic path ordering used across the library.
struct PathLess {
  const Quiver* q = nullptr;
  bool operator()(const Path& a, const Path& b) const;
};

/// The doubled quiver: every base arrow together with its reversal, the
/// fixed-point-free involution bar pairing them, and the orientation subset
/// omega consisting of the original arrows.  Double quivers are not doubled
/// again.
struct DoubleQuiver {
  QuiverPtr base;
  QuiverPtr doubled;           // arrows: base arrows then their reversals
  std::vector<int> bar;        // involution on doubled arrow indices
  std::vector<bool> in_omega;  // true exactly on the base arrows

  int epsilon(int doubled_arrow) const {
    return in_omega.at(doubled_arrow) ? 1 : -1;
  }
};

/// Builds the double.  Loops are rejected: doubling is defined for the
/// loop-free edge sets of Dynkin-type graphs only.
DoubleQuiver double_quiver(const QuiverPtr& q);

/// Dimension vector: one non-negative integer per vertex, in canonical
/// vertex order.
struct DimVector {
  std::vector<std::int64_t> d;

  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> v) : d(std::move(v)) {}
  static DimVector zero(int n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  static DimVector unit(int n, int i) {
    DimVector v = zero(n);
    v.d.at(i) = 1;
    return v;
  }

  std::int64_t operator[](int i) const { return d.at(i); }
  std::int64_t& operator[](int i) { return d.at(i); }
  int size() const { return static_cast<int>(d.size()); }
  std::int64_t total() const;
  bool is_zero() const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  bool operator==(const DimVector& o) const { return d == o.d; }
  bool operator!=(const DimVector& o) const { return d != o.d; }
  bool operator<(const DimVector& o) const { return d < o.d; }  // lex
  bool dominated_by(const DimVector& o) const;  // componentwise <=

  std::string str() const;  // "1,2,0"
  static DimVector parse(const std::string& s, int expected_size);
};

/// GraphViz export of the quiver shape (graph only, no semantics).
std::string quiver_to_dot(const Quiver& q);

}  // namespace qh
