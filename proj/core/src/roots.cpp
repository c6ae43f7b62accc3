#include "quiverhall/roots.hpp"

#include <algorithm>
#include <set>

#include "quiverhall/errors.hpp"

namespace qh {

DimVector reflect(const IntMatrix& cartan, const DimVector& alpha, int i) {
  // s_i(a) = a - (a, e_i) e_i with the pairing given by the Cartan matrix.
  std::int64_t pairing = 0;
  for (int j = 0; j < cartan.n; ++j) pairing += cartan.at(i, j) * alpha[j];
  DimVector r = alpha;
  r[i] -= pairing;
  return r;
}

namespace {

bool all_nonnegative(const DimVector& v) {
  for (std::int64_t x : v.d)
    if (x < 0) return false;
  return true;
}

bool support_connected(const Quiver& q, const DimVector& v) {
  std::vector<int> support;
  for (int i = 0; i < q.vertex_count(); ++i)
    if (v[i] > 0) support.push_back(i);
  if (support.empty()) return false;
  std::set<int> seen{support[0]};
  std::vector<int> stack{support[0]};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Arrow& a : q.arrows()) {
      int other = -1;
      if (a.tail == x && v[a.head] > 0) other = a.head;
      if (a.head == x && v[a.tail] > 0) other = a.tail;
      if (other >= 0 && !seen.count(other)) {
        seen.insert(other);
        stack.push_back(other);
      }
    }
  }
  return seen.size() == support.size();
}

// Reflection orbit of the simple roots, truncated at the height bound;
// collects positive vectors only.  Simple roots at loop vertices are
// isotropic, so both the seeds and the reflections range over the loop-free
// vertices only.  For finite type the closure stabilizes and the bound only
// acts as a safety rail.
std::set<DimVector> real_root_orbit(const Quiver& q, std::int64_t height_bound,
                                    bool finite_type) {
  IntMatrix cartan = cartan_matrix(q);
  int n = q.vertex_count();
  std::vector<bool> loop_free(n, true);
  for (const Arrow& a : q.arrows())
    if (a.tail == a.head) loop_free[a.tail] = false;
  std::set<DimVector> found;
  std::vector<DimVector> frontier;
  for (int i = 0; i < n; ++i) {
    if (!loop_free[i]) continue;
    DimVector e = DimVector::unit(n, i);
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<DimVector> next;
    for (const DimVector& a : frontier) {
      for (int i = 0; i < n; ++i) {
        if (!loop_free[i]) continue;
        DimVector r = reflect(cartan, a, i);
        if (!all_nonnegative(r)) continue;
        if (!finite_type && r.total() > height_bound) continue;
        if (found.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
    if (finite_type && found.size() > 100000)
      throw InvariantError("reflection closure failed to stabilize");
  }
  return found;
}

void enumerate_bounded_vectors(const Quiver& q, std::int64_t height_bound,
                               DimVector& cur, int pos,
                               std::vector<DimVector>& out) {
  if (pos == q.vertex_count()) {
    if (!cur.is_zero()) out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v + cur.total() <= height_bound; ++v) {
    cur[pos] = v;
    enumerate_bounded_vectors(q, height_bound, cur, pos + 1, out);
    cur[pos] = 0;
  }
}

}  // namespace

std::vector<Root> positive_roots(const Quiver& q, std::int64_t height_bound) {
  if (height_bound < 0) throw InputError("negative height bound");
  bool finite = classify_type(q).verdict == ReprType::finite;
  std::set<DimVector> reals = real_root_orbit(q, height_bound, finite);

  std::vector<Root> roots;
  for (const DimVector& v : reals) {
    if (!finite && v.total() > height_bound) continue;
    roots.push_back(Root{v, RootKind::real});
  }
  if (!finite) {
    // Imaginary-root candidates: nonzero, connected support, q(alpha) <= 0.
    DimVector cur = DimVector::zero(q.vertex_count());
    std::vector<DimVector> vecs;
    enumerate_bounded_vectors(q, height_bound, cur, 0, vecs);
    for (const DimVector& v : vecs)
      if (tits_form(q, v) <= 0 && support_connected(q, v))
        roots.push_back(Root{v, RootKind::imaginary});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

void enumerate_dominated(const DimVector& bound, DimVector& cur, int pos,
                         std::vector<DimVector>& out) {
  if (pos == bound.size()) {
    if (!cur.is_zero()) out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= bound[pos]; ++v) {
    cur[pos] = v;
    enumerate_dominated(bound, cur, pos + 1, out);
    cur[pos] = 0;
  }
}

RootCheckReport root_check(const QuiverPtr& q, std::int64_t p,
                           const DimVector& dim_bound,
                           const RootCheckOptions& opts, bool finite_mode) {
  if (dim_bound.size() != q->vertex_count())
    throw InputError("dimension bound does not match quiver");
  if (finite_mode && classify_type(*q).verdict != ReprType::finite)
    throw InputError("finite-type bijection check on a non-finite-type quiver");

  RootCheckReport report;
  std::int64_t height_bound = dim_bound.total();
  std::vector<Root> roots = positive_roots(*q, height_bound);
  std::map<DimVector, RootKind> root_of;
  for (const Root& r : roots) {
    if (!r.vector.dominated_by(dim_bound)) continue;
    report.roots.push_back(r);
    root_of.emplace(r.vector, r.kind);
  }

  DimVector cur = DimVector::zero(q->vertex_count());
  std::vector<DimVector> dims;
  enumerate_dominated(dim_bound, cur, 0, dims);
  std::sort(dims.begin(), dims.end());

  bool ok = true;
  std::string note;
  for (const DimVector& d : dims) {
    IsoClassTable table = enumerate_iso_classes(q, d, p, opts.enumeration);
    DimClassCount row;
    row.dim = d;
    row.iso_classes = table.class_count();
    for (int c = 0; c < table.class_count(); ++c)
      if (is_indecomposable(table.representative(c), opts.decomposition))
        ++row.indecomposables;
    auto it = root_of.find(d);
    row.is_root = it != root_of.end();
    if (row.is_root) row.root_kind = it->second;

    if (row.is_root && it->second == RootKind::real && row.indecomposables != 1) {
      ok = false;
      note = "real root " + d.str() + " carries " +
             std::to_string(row.indecomposables) + " classes";
    }
    if (row.is_root && it->second == RootKind::imaginary &&
        row.indecomposables < 1) {
      ok = false;
      note = "imaginary root " + d.str() + " carries no indecomposable";
    }
    if (!row.is_root && row.indecomposables != 0) {
      ok = false;
      note = "indecomposable off the root list at " + d.str();
    }
    report.counts.push_back(std::move(row));
  }
  report.ok = ok;
  report.verdict = ok ? (finite_mode ? "bijection holds" : "consistent") : note;
  return report;
}

}  // namespace

RootCheckReport check_gabriel(const QuiverPtr& q, std::int64_t p,
                              const DimVector& dim_bound,
                              const RootCheckOptions& opts) {
  return root_check(q, p, dim_bound, opts, true);
}

RootCheckReport check_kac(const QuiverPtr& q, std::int64_t p,
                          const DimVector& dim_bound,
                          const RootCheckOptions& opts) {
  return root_check(q, p, dim_bound, opts, false);
}

}  // namespace qh
