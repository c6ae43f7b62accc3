#pragma once

#include <map>
#include <optional>

#include "quiverhall/matrix.hpp"
#include "quiverhall/quiver.hpp"

namespace qh {

/// Element of the path algebra kQ: a finitely supported linear combination
/// of paths of one fixed quiver, with coefficients in a prime field or Q.
/// No zero coefficients are stored.
template <Field F>
class PathAlgebraElement {
 public:
  using Elem = typename F::Elem;
  using TermMap = std::map<Path, Elem, PathLess>;

  PathAlgebraElement(QuiverPtr q, const F& f)
      : quiver_(std::move(q)), field_(f), terms_(PathLess{quiver_.get()}) {}

  const QuiverPtr& quiver() const { return quiver_; }
  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Path& p, const Elem& c) {
    if (!path_is_valid(*quiver_, p)) throw InputError("invalid path");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      if (!field_.is_zero(c)) terms_.emplace(p, c);
      return;
    }
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  Elem coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  PathAlgebraElement operator+(const PathAlgebraElement& o) const {
    check_compatible(o);
    PathAlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
  }

  PathAlgebraElement operator-() const {
    PathAlgebraElement r(quiver_, field_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, field_.neg(c));
    return r;
  }

  PathAlgebraElement operator-(const PathAlgebraElement& o) const {
    return *this + (-o);
  }

  bool operator==(const PathAlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    PathLess less{quiver_.get()};
    for (; it != terms_.end(); ++it, ++jt) {
      if (less(it->first, jt->first) || less(jt->first, it->first)) return false;
      if (!field_.eq(it->second, jt->second)) return false;
    }
    return true;
  }

  void check_compatible(const PathAlgebraElement& o) const {
    if (quiver_.get() != o.quiver_.get())
      throw InputError("path algebra elements live on different quivers");
    if (!(field_ == o.field_))
      throw InputError("path algebra elements over different fields");
  }

 private:
  QuiverPtr quiver_;
  F field_;
  TermMap terms_;
};

/// Bilinear extension of path concatenation: paths multiply to their
/// concatenation when h(y) = t(x) and to zero otherwise.
template <Field F>
PathAlgebraElement<F> pa_multiply(const PathAlgebraElement<F>& x,
                                  const PathAlgebraElement<F>& y) {
  x.check_compatible(y);
  const Quiver& q = *x.quiver();
  PathAlgebraElement<F> r(x.quiver(), x.field());
  for (const auto& [px, cx] : x.terms())
    for (const auto& [py, cy] : y.terms())
      if (auto prod = compose_paths(q, px, py))
        r.add_term(*prod, x.field().mul(cx, cy));
  return r;
}

/// The unit sum of all trivial paths e_i.
template <Field F>
PathAlgebraElement<F> unit_element(const QuiverPtr& q, const F& f) {
  PathAlgebraElement<F> u(q, f);
  for (int v = 0; v < q->vertex_count(); ++v) {
    Path e;
    e.vertex = v;
    u.add_term(e, f.one());
  }
  return u;
}

/// Path count for acyclic quivers; nullopt means infinite-dimensional.
std::optional<std::uint64_t> algebra_dimension(const Quiver& q);

/// Checks that q is the linearly oriented chain on n vertices: canonical
/// vertex order v_1..v_n, exactly one arrow v_i -> v_{i+1} for each i.
bool is_linear_chain(const Quiver& q);

/// The isomorphism from the path algebra of the linear chain onto lower
/// triangular n x n matrices: the unique path from i to j maps to the matrix
/// unit E_{ji}, extended linearly.
template <Field F>
Matrix<F> triangular_iso(int n, const PathAlgebraElement<F>& x) {
  const Quiver& q = *x.quiver();
  if (q.vertex_count() != n)
    throw InputError("triangular_iso: quiver has wrong vertex count");
  if (!is_linear_chain(q))
    throw InputError("triangular_iso: quiver is not the linear chain");
  Matrix<F> m(n, n, x.field());
  for (const auto& [p, c] : x.terms()) {
    int i = p.tail(q);
    int j = p.head(q);
    m.at(j, i) = x.field().add(m.at(j, i), c);
  }
  return m;
}

// --- implementation ---

inline std::optional<std::uint64_t> algebra_dimension(const Quiver& q) {
  if (!q.is_acyclic()) return std::nullopt;
  return enumerate_paths(q, q.arrow_count()).size();
}

inline bool is_linear_chain(const Quiver& q) {
  int n = q.vertex_count();
  if (q.arrow_count() != n - 1) return false;
  std::vector<bool> seen(std::max(n - 1, 0), false);
  for (const Arrow& a : q.arrows()) {
    if (a.head != a.tail + 1) return false;
    if (seen[a.tail]) return false;
    seen[a.tail] = true;
  }
  return true;
}

}  // namespace qh
