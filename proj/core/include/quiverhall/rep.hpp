#pragma once

#include <optional>
#include <vector>

#include "quiverhall/matrix.hpp"
#include "quiverhall/quiver.hpp"

namespace qh {

/// Quiver representation: one vector space dimension per vertex and one
/// matrix per arrow, maps[a] of shape dims[head(a)] x dims[tail(a)].
template <Field F>
struct Rep {
  QuiverPtr quiver;
  F field;
  DimVector dims;
  std::vector<Matrix<F>> maps;

  Rep(QuiverPtr q, const F& f, DimVector d)
      : quiver(std::move(q)), field(f), dims(std::move(d)) {
    if (dims.size() != quiver->vertex_count())
      throw InputError("dimension vector does not match quiver");
    for (const Arrow& a : quiver->arrows())
      maps.emplace_back(static_cast<int>(dims[a.head]),
                        static_cast<int>(dims[a.tail]), field);
  }

  std::int64_t total_dim() const { return dims.total(); }

  void check_shapes() const {
    for (int a = 0; a < quiver->arrow_count(); ++a) {
      const Arrow& ar = quiver->arrow(a);
      if (maps[a].rows() != dims[ar.head] || maps[a].cols() != dims[ar.tail])
        throw InputError("arrow map '" + ar.name + "' has wrong shape");
    }
  }

  bool operator==(const Rep& o) const {
    return quiver.get() == o.quiver.get() && dims == o.dims && maps == o.maps;
  }
};

/// Morphism V -> W: one matrix per vertex, psi[i] of shape
/// dims_W[i] x dims_V[i], satisfying W_a psi_{t(a)} = psi_{h(a)} V_a.
template <Field F>
struct RepMorphism {
  std::vector<Matrix<F>> psi;
};

template <Field F>
Rep<F> zero_rep(const QuiverPtr& q, const F& f) {
  return Rep<F>(q, f, DimVector::zero(q->vertex_count()));
}

/// The simple representation S^i: one-dimensional at vertex i, zero
/// elsewhere, all arrow maps zero.
template <Field F>
Rep<F> simple_rep(const QuiverPtr& q, const F& f, int vertex) {
  if (vertex < 0 || vertex >= q->vertex_count())
    throw InputError("unknown vertex index " + std::to_string(vertex));
  return Rep<F>(q, f, DimVector::unit(q->vertex_count(), vertex));
}

template <Field F>
Rep<F> direct_sum(const Rep<F>& v, const Rep<F>& w) {
  if (v.quiver.get() != w.quiver.get())
    throw InputError("direct sum of representations on different quivers");
  if (!(v.field == w.field))
    throw InputError("direct sum of representations over different fields");
  Rep<F> r(v.quiver, v.field, v.dims + w.dims);
  for (int a = 0; a < v.quiver->arrow_count(); ++a)
    r.maps[a] = Matrix<F>::block_diag(v.maps[a], w.maps[a]);
  return r;
}

template <Field F>
bool is_morphism(const Rep<F>& v, const Rep<F>& w, const RepMorphism<F>& m) {
  for (int a = 0; a < v.quiver->arrow_count(); ++a) {
    const Arrow& ar = v.quiver->arrow(a);
    if (!(w.maps[a] * m.psi[ar.tail] == m.psi[ar.head] * v.maps[a]))
      return false;
  }
  return true;
}

/// Basis of Hom(V, W), solved exactly from the intertwining equations.
/// The unknowns are the entries of all psi_i; the kernel basis order is
/// deterministic.
template <Field F>
std::vector<RepMorphism<F>> hom_space(const Rep<F>& v, const Rep<F>& w) {
  if (v.quiver.get() != w.quiver.get())
    throw InputError("hom space between representations on different quivers");
  if (!(v.field == w.field))
    throw InputError("hom space between representations over different fields");
  const Quiver& q = *v.quiver;
  const F& f = v.field;

  // Unknown layout: entries of psi_i, vertex by vertex, row-major.
  std::vector<int> offset(q.vertex_count() + 1, 0);
  for (int i = 0; i < q.vertex_count(); ++i)
    offset[i + 1] =
        offset[i] + static_cast<int>(w.dims[i]) * static_cast<int>(v.dims[i]);
  int unknowns = offset[q.vertex_count()];

  int equations = 0;
  for (const Arrow& a : q.arrows())
    equations += static_cast<int>(w.dims[a.head]) * static_cast<int>(v.dims[a.tail]);

  Matrix<F> sys(equations, unknowns, f);
  int row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    int wt = static_cast<int>(w.dims[ar.tail]);
    int wh = static_cast<int>(w.dims[ar.head]);
    int vt = static_cast<int>(v.dims[ar.tail]);
    int vh = static_cast<int>(v.dims[ar.head]);
    // Equation (r, c): sum_k W_a[r,k] psi_t[k,c] - sum_k psi_h[r,k] V_a[k,c] = 0
    for (int r = 0; r < wh; ++r)
      for (int c = 0; c < vt; ++c) {
        for (int k = 0; k < wt; ++k)
          sys.at(row, offset[ar.tail] + k * vt + c) =
              f.add(sys.at(row, offset[ar.tail] + k * vt + c), w.maps[a].at(r, k));
        for (int k = 0; k < vh; ++k)
          sys.at(row, offset[ar.head] + r * vh + k) =
              f.sub(sys.at(row, offset[ar.head] + r * vh + k), v.maps[a].at(k, c));
        ++row;
      }
  }

  Matrix<F> kernel = sys.kernel_basis();
  std::vector<RepMorphism<F>> basis;
  for (int b = 0; b < kernel.rows(); ++b) {
    RepMorphism<F> m;
    for (int i = 0; i < q.vertex_count(); ++i) {
      Matrix<F> psi(static_cast<int>(w.dims[i]), static_cast<int>(v.dims[i]), f);
      for (int r = 0; r < psi.rows(); ++r)
        for (int c = 0; c < psi.cols(); ++c)
          psi.at(r, c) = kernel.at(b, offset[i] + r * psi.cols() + c);
      m.psi.push_back(std::move(psi));
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

template <Field F>
bool morphism_is_invertible(const RepMorphism<F>& m) {
  for (const Matrix<F>& psi : m.psi)
    if (!psi.is_invertible()) return false;
  return true;
}

/// Restriction of V to the subrepresentation spanned by the given graded
/// basis (basis[i]: rows spanning the subspace of V_i).  The basis must be
/// arrow-stable; throws InvariantError otherwise.
template <Field F>
Rep<F> sub_rep(const Rep<F>& v, const std::vector<Matrix<F>>& basis) {
  const Quiver& q = *v.quiver;
  DimVector d = DimVector::zero(q.vertex_count());
  for (int i = 0; i < q.vertex_count(); ++i) d[i] = basis[i].rows();
  Rep<F> r(v.quiver, v.field, d);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    // Image of each basis vector of the tail subspace, in head-subspace
    // coordinates.
    for (int b = 0; b < basis[ar.tail].rows(); ++b) {
      std::vector<typename F::Elem> img(
          static_cast<std::size_t>(v.dims[ar.head]), v.field.zero());
      for (int r2 = 0; r2 < v.maps[a].rows(); ++r2) {
        typename F::Elem s = v.field.zero();
        for (int c = 0; c < v.maps[a].cols(); ++c)
          s = v.field.add(s, v.field.mul(v.maps[a].at(r2, c),
                                         basis[ar.tail].at(b, c)));
        img[r2] = s;
      }
      auto coords = basis[ar.head].solve_row(img);
      if (!coords)
        throw InvariantError("sub_rep basis is not arrow-stable");
      for (int k = 0; k < r.maps[a].rows(); ++k)
        r.maps[a].at(k, b) = (*coords)[k];
    }
  }
  return r;
}

}  // namespace qh
