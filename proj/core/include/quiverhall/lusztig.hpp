#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "quiverhall/matrix.hpp"
#include "quiverhall/quiver.hpp"

namespace qh {

using DoubleQuiverPtr = std::shared_ptr<const DoubleQuiver>;

/// Point of the representation space E_V of a double quiver: one matrix per
/// doubled arrow, shapes dims[head] x dims[tail].
template <Field F>
struct DoubleRepPoint {
  DoubleQuiverPtr dq;
  F field;
  DimVector dims;
  std::vector<Matrix<F>> x;

  DoubleRepPoint(DoubleQuiverPtr d, const F& f, DimVector v)
      : dq(std::move(d)), field(f), dims(std::move(v)) {
    if (dims.size() != dq->doubled->vertex_count())
      throw InputError("dimension vector does not match quiver");
    for (const Arrow& a : dq->doubled->arrows())
      x.emplace_back(static_cast<int>(dims[a.head]),
                     static_cast<int>(dims[a.tail]), field);
  }
};

/// Point with framing maps t_i : V_i -> W_i (shapes w_i x v_i).
template <Field F>
struct FramedPoint {
  DoubleRepPoint<F> point;
  DimVector w;
  std::vector<Matrix<F>> t;

  FramedPoint(DoubleRepPoint<F> p, DimVector framing)
      : point(std::move(p)), w(std::move(framing)) {
    if (w.size() != point.dims.size())
      throw InputError("framing dimension vector does not match quiver");
    for (int i = 0; i < w.size(); ++i)
      t.emplace_back(static_cast<int>(w[i]), static_cast<int>(point.dims[i]),
                     point.field);
  }
};

/// The symplectic pairing <x, y> = sum_rho eps(rho) tr(x_rho y_{bar rho}).
template <Field F>
typename F::Elem symplectic_form(const DoubleRepPoint<F>& a,
                                 const DoubleRepPoint<F>& b) {
  if (a.dq.get() != b.dq.get() || a.dims != b.dims)
    throw InputError("symplectic form needs points of one space");
  const F& f = a.field;
  typename F::Elem s = f.zero();
  for (int r = 0; r < a.dq->doubled->arrow_count(); ++r) {
    typename F::Elem tr = (a.x[r] * b.x[a.dq->bar[r]]).trace();
    s = a.dq->epsilon(r) > 0 ? f.add(s, tr) : f.sub(s, tr);
  }
  return s;
}

/// Moment map components psi_i(x) = sum_{h(rho)=i} eps(rho) x_rho x_{bar rho}.
template <Field F>
std::vector<Matrix<F>> moment_map(const DoubleRepPoint<F>& a) {
  const F& f = a.field;
  const Quiver& q = *a.dq->doubled;
  std::vector<Matrix<F>> psi;
  for (int i = 0; i < q.vertex_count(); ++i)
    psi.emplace_back(static_cast<int>(a.dims[i]), static_cast<int>(a.dims[i]), f);
  for (int r = 0; r < q.arrow_count(); ++r) {
    int i = q.arrow(r).head;
    Matrix<F> prod = a.x[r] * a.x[a.dq->bar[r]];
    psi[i] = a.dq->epsilon(r) > 0 ? psi[i] + prod : psi[i] - prod;
  }
  return psi;
}

/// Nilpotency test: some length N makes every composable composite of the
/// x_rho vanish.  Decided by the descending chain of graded image subspaces
/// U_{m+1} = sum_rho x_rho((U_m)_{t(rho)}): the chain either reaches zero
/// (nilpotent) or stabilizes at a nonzero subspace (not nilpotent).  This is
/// exact even when distinct composites cancel inside sums, which rules out
/// testing a single total endomorphism.
template <Field F>
bool is_nilpotent(const DoubleRepPoint<F>& a) {
  const F& f = a.field;
  const Quiver& q = *a.dq->doubled;
  int nv = q.vertex_count();
  // U_m as a row basis per vertex; start with the full spaces.
  std::vector<Matrix<F>> u;
  for (int i = 0; i < nv; ++i)
    u.push_back(Matrix<F>::identity(static_cast<int>(a.dims[i]), f));
  std::int64_t dim = a.dims.total();
  for (std::int64_t step = 0; step <= dim + 1; ++step) {
    std::int64_t before = 0;
    for (const Matrix<F>& m : u) before += m.rows();
    if (before == 0) return true;
    // Next layer: spans of x_rho(U_{t(rho)}).
    std::vector<std::vector<std::vector<typename F::Elem>>> spans(nv);
    for (int r = 0; r < q.arrow_count(); ++r) {
      const Arrow& ar = q.arrow(r);
      const Matrix<F>& basis = u[ar.tail];
      for (int row = 0; row < basis.rows(); ++row) {
        std::vector<typename F::Elem> img(
            static_cast<std::size_t>(a.dims[ar.head]), f.zero());
        for (int i2 = 0; i2 < a.x[r].rows(); ++i2) {
          typename F::Elem s = f.zero();
          for (int j = 0; j < a.x[r].cols(); ++j)
            s = f.add(s, f.mul(a.x[r].at(i2, j), basis.at(row, j)));
          img[i2] = s;
        }
        spans[ar.head].push_back(std::move(img));
      }
    }
    std::vector<Matrix<F>> next;
    std::int64_t after = 0;
    for (int i = 0; i < nv; ++i) {
      Matrix<F> m(static_cast<int>(spans[i].size()),
                  static_cast<int>(a.dims[i]), f);
      for (std::size_t r2 = 0; r2 < spans[i].size(); ++r2)
        for (int c = 0; c < m.cols(); ++c)
          m.at(static_cast<int>(r2), c) = spans[i][r2][c];
      std::vector<int> pivots = m.rref_in_place();
      Matrix<F> reduced(static_cast<int>(pivots.size()), m.cols(), f);
      for (int r2 = 0; r2 < reduced.rows(); ++r2)
        for (int c = 0; c < m.cols(); ++c) reduced.at(r2, c) = m.at(r2, c);
      after += reduced.rows();
      next.push_back(std::move(reduced));
    }
    if (after == before) return false;  // stabilized above zero
    u = std::move(next);
  }
  return true;  // chain hit zero within the dimension bound
}

struct LambdaOptions {
  std::uint64_t point_budget = 1'000'000;
  int threads = 1;
};

struct LambdaSet {
  std::uint64_t space_size = 0;
  std::vector<std::uint64_t> point_indices;  // ascending
  std::uint64_t count() const { return point_indices.size(); }
};

/// Exhaustive scan of E_V(F_p) for the points with vanishing moment map that
/// are nilpotent, in deterministic (index) order.  The scan shards across
/// threads by contiguous index ranges and is order-independent of the thread
/// count.
LambdaSet lambda_points(const DoubleQuiverPtr& dq, const DimVector& dims,
                        std::int64_t p, const LambdaOptions& opts = {});

/// Decodes a lambda point index back into a point.
DoubleRepPoint<PrimeField> lambda_point_at(const DoubleQuiverPtr& dq,
                                           const DimVector& dims,
                                           std::int64_t p, std::uint64_t index);

struct StableOptions {
  std::uint64_t subspace_budget = 1'000'000;
};

/// Nakajima stability: no nonzero graded x-stable subspace S with
/// t_i(S_i) = 0 for all i.  Decided by enumerating the graded subspaces of
/// the kernel of t (only those can violate) and checking x-stability.
bool is_stable(const FramedPoint<PrimeField>& fp, const StableOptions& opts = {});

}  // namespace qh
