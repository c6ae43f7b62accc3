#pragma once

#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "quiverhall/quiver.hpp"
#include "quiverhall/rep.hpp"

namespace qh::testing {

using ArrowSpec = std::tuple<std::string, std::string, std::string>;

inline QuiverPtr make_quiver(std::vector<std::string> verts,
                             std::vector<ArrowSpec> arrows) {
  return std::make_shared<const Quiver>(std::move(verts), std::move(arrows));
}

// One arrow 1 -> 2.
inline QuiverPtr a2() {
  return make_quiver({"1", "2"}, {{"rho", "1", "2"}});
}

// One arrow 2 -> 1.
inline QuiverPtr a2_reversed() {
  return make_quiver({"1", "2"}, {{"rho", "2", "1"}});
}

// Chain 1 -> 2 -> 3.
inline QuiverPtr a3() {
  return make_quiver({"1", "2", "3"}, {{"rho1", "1", "2"}, {"rho2", "2", "3"}});
}

// Chain 1 -> 2 -> 3 -> 4.
inline QuiverPtr a4() {
  return make_quiver({"1", "2", "3", "4"},
                     {{"rho1", "1", "2"}, {"rho2", "2", "3"}, {"rho3", "3", "4"}});
}

// Four vertices, arrows rho: 1->2, sigma: 2->3, lambda: 4->3 (an A4 shape
// with one edge against the flow).
inline QuiverPtr sample4() {
  return make_quiver({"1", "2", "3", "4"},
                     {{"rho", "1", "2"}, {"sigma", "2", "3"}, {"lambda", "4", "3"}});
}

// Single vertex with a loop.
inline QuiverPtr jordan() {
  return make_quiver({"1"}, {{"rho", "1", "1"}});
}

// Two parallel arrows 1 -> 2.
inline QuiverPtr kronecker() {
  return make_quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
}

// Three parallel arrows 1 -> 2 (wild).
inline QuiverPtr kronecker3() {
  return make_quiver({"1", "2"},
                     {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}});
}

// Oriented 3-cycle 1 -> 2 -> 3 -> 1.
inline QuiverPtr cycle3() {
  return make_quiver({"1", "2", "3"},
                     {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
}

// D4: central vertex 2 with arrows to 1, 3, 4.
inline QuiverPtr d4() {
  return make_quiver({"1", "2", "3", "4"},
                     {{"a", "2", "1"}, {"b", "2", "3"}, {"c", "2", "4"}});
}

// The 4-leaf star (extended D4 shape).
inline QuiverPtr star4() {
  return make_quiver({"0", "1", "2", "3", "4"},
                     {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"},
                      {"d", "0", "4"}});
}

// The 4-leaf star with one arm stretched by an edge (wild).
inline QuiverPtr star4_long() {
  return make_quiver({"0", "1", "2", "3", "4", "5"},
                     {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"},
                      {"d", "0", "4"}, {"e", "4", "5"}});
}

// Tree with one branch vertex and three arms of the given edge lengths,
// arrows oriented away from the hub.
inline QuiverPtr tripod(int a, int b, int c) {
  std::vector<std::string> verts{"hub"};
  std::vector<ArrowSpec> arrows;
  int arm_id = 0;
  for (int len : {a, b, c}) {
    std::string prev = "hub";
    for (int i = 1; i <= len; ++i) {
      std::string name = "v" + std::to_string(arm_id) + "_" + std::to_string(i);
      verts.push_back(name);
      arrows.emplace_back("a" + std::to_string(arrows.size()), prev, name);
      prev = name;
    }
    ++arm_id;
  }
  return make_quiver(std::move(verts), std::move(arrows));
}

// Extended D5 shape (two branch vertices with two leaves each).
inline QuiverPtr dhat5() {
  return make_quiver({"1", "2", "c1", "c2", "3", "4"},
                     {{"a", "1", "c1"}, {"b", "2", "c1"}, {"m", "c1", "c2"},
                      {"c", "c2", "3"}, {"d", "c2", "4"}});
}

// A2 representation with an arbitrary d2 x d1 matrix over F_p.
inline Rep<PrimeField> a2_rep(const QuiverPtr& q, std::int64_t p,
                              std::vector<std::vector<std::int64_t>> matrix) {
  PrimeField f(p);
  DimVector d({static_cast<std::int64_t>(matrix.empty() ? 0 : matrix[0].size()),
               static_cast<std::int64_t>(matrix.size())});
  Rep<PrimeField> r(q, f, d);
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j)
      r.maps[0].at(static_cast<int>(i), static_cast<int>(j)) =
          f.from_int(matrix[i][j]);
  return r;
}

inline Rep<PrimeField> random_rep(const QuiverPtr& q, std::int64_t p,
                                  const DimVector& dims, std::mt19937_64& rng) {
  PrimeField f(p);
  Rep<PrimeField> r(q, f, dims);
  for (auto& m : r.maps)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  return r;
}

}  // namespace qh::testing
