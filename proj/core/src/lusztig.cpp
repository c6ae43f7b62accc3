#include "quiverhall/lusztig.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "quiverhall/hall.hpp"

namespace qh {

namespace {

struct DoubleSpace {
  DoubleQuiverPtr dq;
  PrimeField f;
  DimVector dims;
  std::vector<int> offsets;
  int total_entries = 0;

  DoubleSpace(DoubleQuiverPtr d, std::int64_t p, DimVector v)
      : dq(std::move(d)), f(p), dims(std::move(v)) {
    int off = 0;
    for (const Arrow& a : dq->doubled->arrows()) {
      offsets.push_back(off);
      off += static_cast<int>(dims[a.head] * dims[a.tail]);
    }
    total_entries = off;
  }

  std::uint64_t size(std::uint64_t budget) const {
    std::uint64_t n = 1;
    std::uint64_t p = static_cast<std::uint64_t>(f.modulus());
    for (int i = 0; i < total_entries; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / p)
        throw BudgetError("double representation space scan",
                          std::numeric_limits<std::uint64_t>::max(), budget);
      n *= p;
    }
    if (n > budget)
      throw BudgetError("double representation space scan", n, budget);
    return n;
  }

  DoubleRepPoint<PrimeField> decode(std::uint64_t index) const {
    DoubleRepPoint<PrimeField> pt(dq, f, dims);
    std::uint64_t p = static_cast<std::uint64_t>(f.modulus());
    for (int i = total_entries - 1; i >= 0; --i) {
      std::int64_t digit = static_cast<std::int64_t>(index % p);
      index /= p;
      int a = 0;
      while (a + 1 < static_cast<int>(offsets.size()) && offsets[a + 1] <= i) ++a;
      int local = i - offsets[a];
      MatF& m = pt.x[a];
      m.at(local / m.cols(), local % m.cols()) = digit;
    }
    return pt;
  }
};

bool all_zero(const std::vector<MatF>& mats) {
  for (const MatF& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

}  // namespace

LambdaSet lambda_points(const DoubleQuiverPtr& dq, const DimVector& dims,
                        std::int64_t p, const LambdaOptions& opts) {
  DoubleSpace space(dq, p, dims);
  std::uint64_t n = space.size(opts.point_budget);
  LambdaSet out;
  out.space_size = n;

  auto scan_range = [&space](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t i = lo; i < hi; ++i) {
      DoubleRepPoint<PrimeField> pt = space.decode(i);
      if (!all_zero(moment_map(pt))) continue;
      if (!is_nilpotent(pt)) continue;
      hits.push_back(i);
    }
    return hits;
  };

  int threads = std::max(1, opts.threads);
  if (threads == 1 || n < 1024) {
    out.point_indices = scan_range(0, n);
    return out;
  }
  std::vector<std::future<std::vector<std::uint64_t>>> futures;
  std::uint64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = chunk * t;
    std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(
        std::async(std::launch::async, [=, &scan_range] { return scan_range(lo, hi); }));
  }
  for (auto& fut : futures) {
    std::vector<std::uint64_t> part = fut.get();
    out.point_indices.insert(out.point_indices.end(), part.begin(), part.end());
  }
  return out;
}

DoubleRepPoint<PrimeField> lambda_point_at(const DoubleQuiverPtr& dq,
                                           const DimVector& dims,
                                           std::int64_t p,
                                           std::uint64_t index) {
  DoubleSpace space(dq, p, dims);
  return space.decode(index);
}

bool is_stable(const FramedPoint<PrimeField>& fp, const StableOptions& opts) {
  const PrimeField& f = fp.point.field;
  const Quiver& q = *fp.point.dq->doubled;
  int nv = q.vertex_count();

  // Only graded subspaces of ker t can violate stability.
  std::vector<MatF> kernels;
  std::uint64_t scan = 1;
  for (int i = 0; i < nv; ++i) {
    kernels.push_back(fp.t[i].kernel_basis());
    int ki = kernels.back().rows();
    std::uint64_t subs = 0;
    for (int d = 0; d <= ki; ++d)
      subs += gaussian_binomial_count(ki, d, f.modulus());
    if (subs != 0 && scan > opts.subspace_budget / subs)
      throw BudgetError("stability subspace scan",
                        std::numeric_limits<std::uint64_t>::max(),
                        opts.subspace_budget);
    scan *= subs;
  }

  // Choose, per vertex, a subspace of ker t_i (in ambient coordinates) and
  // test x-stability; any nonzero stable choice defeats stability.
  std::vector<MatF> chosen;
  bool found_violation = false;

  std::function<void(int)> recurse = [&](int vertex) {
    if (found_violation) return;
    if (vertex == nv) {
      bool nonzero = false;
      for (const MatF& m : chosen)
        if (m.rows() > 0) nonzero = true;
      if (!nonzero) return;
      // x-stability: x_rho(S_t) inside S_h for every arrow.
      for (int r = 0; r < q.arrow_count(); ++r) {
        const Arrow& ar = q.arrow(r);
        const MatF& st = chosen[ar.tail];
        const MatF& sh = chosen[ar.head];
        for (int row = 0; row < st.rows(); ++row) {
          std::vector<std::int64_t> img(
              static_cast<std::size_t>(fp.point.dims[ar.head]), 0);
          for (int i2 = 0; i2 < fp.point.x[r].rows(); ++i2) {
            std::int64_t s = 0;
            for (int j = 0; j < fp.point.x[r].cols(); ++j)
              s = f.add(s, f.mul(fp.point.x[r].at(i2, j), st.at(row, j)));
            img[i2] = s;
          }
          if (!sh.solve_row(img)) return;  // not contained: this S fails
        }
      }
      found_violation = true;
      return;
    }
    const MatF& ker = kernels[vertex];
    int ki = ker.rows();
    int ambient = static_cast<int>(fp.point.dims[vertex]);
    for (int d = 0; d <= ki && !found_violation; ++d) {
      for_each_subspace(f, ki, d, [&](const MatF& local) {
        if (found_violation) return;
        // Lift to ambient coordinates: rows = local * ker.
        MatF lifted(d, ambient, f);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < ambient; ++c) {
            std::int64_t s = 0;
            for (int k = 0; k < ki; ++k)
              s = f.add(s, f.mul(local.at(r, k), ker.at(k, c)));
            lifted.at(r, c) = s;
          }
        chosen.push_back(std::move(lifted));
        recurse(vertex + 1);
        chosen.pop_back();
      });
    }
  };
  recurse(0);
  return !found_violation;
}

}  // namespace qh
