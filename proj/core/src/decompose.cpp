#include "quiverhall/decompose.hpp"

#include <algorithm>
#include <random>

#include "quiverhall/minpoly.hpp"

namespace qh {

namespace {

// Graded row basis of the kernel of a graded map, one matrix of basis rows
// per vertex.
template <Field F>
std::vector<Matrix<F>> graded_kernel(const std::vector<Matrix<F>>& psi) {
  std::vector<Matrix<F>> basis;
  for (const Matrix<F>& m : psi) basis.push_back(m.kernel_basis());
  return basis;
}

template <Field F>
std::int64_t graded_rows(const std::vector<Matrix<F>>& basis) {
  std::int64_t n = 0;
  for (const Matrix<F>& m : basis) n += m.rows();
  return n;
}

// Endomorphisms as per-vertex square matrices.
template <Field F>
using Endo = std::vector<Matrix<F>>;

template <Field F>
Endo<F> endo_add(const Endo<F>& a, const Endo<F>& b) {
  Endo<F> r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

template <Field F>
Endo<F> endo_mul(const Endo<F>& a, const Endo<F>& b) {
  Endo<F> r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] * b[i]);
  return r;
}

// Attempts the primary-decomposition split of V along one endomorphism.
// The minimal polynomial f of phi is factored as a coprime product g*h; then
// V = ker g(phi) (+) ker h(phi), both phi-stable hence subrepresentations.
template <Field F>
std::optional<std::pair<Rep<F>, Rep<F>>> try_split_along(
    const Rep<F>& v, const Endo<F>& phi, const DecomposeOptions& opts,
    bool* saw_nonlinear_q) {
  const F& f = v.field;
  Poly<F> mp = min_poly_graded(f, phi);
  if (mp.size() <= 2) return std::nullopt;  // scalar: no information

  Poly<F> g, h;
  if constexpr (std::is_same_v<F, PrimeField>) {
    std::vector<std::int64_t> fp(mp.begin(), mp.end());
    auto split = coprime_split_fp(f, fp, opts.factor_budget);
    if (!split) return std::nullopt;
    g.assign(split->first.begin(), split->first.end());
    h.assign(split->second.begin(), split->second.end());
  } else {
    RationalSplit split = coprime_split_q(mp);
    if (!split.split) {
      if (split.has_nonlinear_part && saw_nonlinear_q) *saw_nonlinear_q = true;
      return std::nullopt;
    }
    g = split.split->first;
    h = split.split->second;
  }

  std::vector<Matrix<F>> g_eval = eval_poly_graded(f, g, phi);
  std::vector<Matrix<F>> h_eval = eval_poly_graded(f, h, phi);
  std::vector<Matrix<F>> basis_g = graded_kernel<F>(g_eval);
  std::vector<Matrix<F>> basis_h = graded_kernel<F>(h_eval);
  std::int64_t ng = graded_rows<F>(basis_g);
  std::int64_t nh = graded_rows<F>(basis_h);
  if (ng == 0 || nh == 0) return std::nullopt;
  if (ng + nh != v.total_dim())
    throw InvariantError("primary decomposition dimensions do not add up");
  return std::make_pair(sub_rep(v, basis_g), sub_rep(v, basis_h));
}

// Row basis of the image (column space) of a matrix.
template <Field F>
Matrix<F> image_row_basis(const Matrix<F>& m) {
  Matrix<F> t = m.transpose();
  std::vector<int> pivots = t.rref_in_place();
  Matrix<F> basis(static_cast<int>(pivots.size()), m.rows(), m.field);
  for (int r = 0; r < basis.rows(); ++r)
    for (int c = 0; c < basis.cols(); ++c) basis.at(r, c) = t.at(r, c);
  return basis;
}

// Exhaustive scan of End(V) for a nontrivial idempotent.  Complete, so a
// negative result certifies indecomposability.  Only feasible when
// p^(dim End) fits the budget.
std::optional<std::pair<Rep<PrimeField>, Rep<PrimeField>>> idempotent_scan(
    const Rep<PrimeField>& v, const std::vector<RepMorphism<PrimeField>>& end_basis,
    std::uint64_t count, std::uint64_t p) {
  const PrimeField& f = v.field;
  int nv = v.quiver->vertex_count();
  std::vector<std::int64_t> coeffs(end_basis.size(), 0);
  for (std::uint64_t k = 1; k < count; ++k) {
    std::uint64_t x = k;
    for (std::size_t i = 0; i < end_basis.size(); ++i) {
      coeffs[i] = static_cast<std::int64_t>(x % p);
      x /= p;
    }
    Endo<PrimeField> phi;
    for (int i = 0; i < nv; ++i) {
      Matrix<PrimeField> m(static_cast<int>(v.dims[i]),
                           static_cast<int>(v.dims[i]), f);
      for (std::size_t b = 0; b < end_basis.size(); ++b)
        if (coeffs[b] != 0) m = m + end_basis[b].psi[i].scaled(coeffs[b]);
      phi.push_back(std::move(m));
    }
    bool idempotent = true, is_zero = true, is_id = true;
    for (int i = 0; i < nv && idempotent; ++i) {
      if (!(phi[i] * phi[i] == phi[i])) idempotent = false;
      if (!phi[i].is_zero()) is_zero = false;
      if (!(phi[i] == Matrix<PrimeField>::identity(phi[i].rows(), f)))
        is_id = false;
    }
    if (!idempotent || is_zero || is_id) continue;
    std::vector<Matrix<PrimeField>> im, ker;
    for (int i = 0; i < nv; ++i) {
      im.push_back(image_row_basis(phi[i]));
      ker.push_back(phi[i].kernel_basis());
    }
    if (graded_rows<PrimeField>(im) == 0 || graded_rows<PrimeField>(ker) == 0)
      continue;
    return std::make_pair(sub_rep(v, im), sub_rep(v, ker));
  }
  return std::nullopt;
}

}  // namespace

template <Field F>
std::optional<std::pair<Rep<F>, Rep<F>>> find_split(const Rep<F>& v,
                                                    const DecomposeOptions& opts) {
  if (v.total_dim() == 0)
    throw InputError("the zero representation is neither decomposable nor "
                     "indecomposable here");
  const F& f = v.field;
  std::vector<RepMorphism<F>> end_basis = hom_space(v, v);
  bool saw_nonlinear_q = false;

  std::vector<Endo<F>> candidates;
  for (const auto& m : end_basis) candidates.push_back(m.psi);
  std::size_t nb = end_basis.size();
  if (nb <= 24) {
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = i + 1; j < nb; ++j)
        candidates.push_back(endo_add<F>(end_basis[i].psi, end_basis[j].psi));
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (i != j)
          candidates.push_back(endo_mul<F>(end_basis[i].psi, end_basis[j].psi));
  }

  for (const Endo<F>& phi : candidates)
    if (auto split = try_split_along(v, phi, opts, &saw_nonlinear_q))
      return split;

  // Seeded random combinations of the End basis.
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.random_trials && nb > 0; ++t) {
    Endo<F> phi;
    for (int i = 0; i < v.quiver->vertex_count(); ++i) {
      Matrix<F> m(static_cast<int>(v.dims[i]), static_cast<int>(v.dims[i]), f);
      phi.push_back(std::move(m));
    }
    for (std::size_t b = 0; b < nb; ++b) {
      typename F::Elem c;
      if constexpr (std::is_same_v<F, PrimeField>) {
        c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.modulus()));
      } else {
        c = Rational(static_cast<long>(rng() % 7) - 3);
      }
      if (f.is_zero(c)) continue;
      for (int i = 0; i < v.quiver->vertex_count(); ++i)
        phi[i] = phi[i] + end_basis[b].psi[i].scaled(c);
    }
    if (auto split = try_split_along(v, phi, opts, &saw_nonlinear_q))
      return split;
  }

  if constexpr (std::is_same_v<F, PrimeField>) {
    // Certification: enumerate all of End(V) looking for a nontrivial
    // idempotent, when that fits the budget.
    std::uint64_t p = static_cast<std::uint64_t>(f.modulus());
    std::uint64_t count = 1;
    bool feasible = true;
    for (std::size_t i = 0; i < nb; ++i) {
      if (count > opts.end_scan_budget / p) {
        feasible = false;
        break;
      }
      count *= p;
    }
    if (feasible)
      return idempotent_scan(v, end_basis, count, p);
    return std::nullopt;  // bounded search exhausted
  } else {
    if (saw_nonlinear_q)
      throw FieldNotSplittingError(
          "decomposition needs an eigenvalue outside Q (characteristic "
          "polynomial does not split over the base field)");
    return std::nullopt;
  }
}

template <Field F>
bool is_indecomposable(const Rep<F>& v, const DecomposeOptions& opts) {
  return !find_split(v, opts).has_value();
}

namespace {

template <Field F>
void decompose_into(const Rep<F>& v, const DecomposeOptions& opts,
                    std::vector<Rep<F>>& out) {
  auto split = find_split(v, opts);
  if (!split) {
    out.push_back(v);
    return;
  }
  decompose_into(split->first, opts, out);
  decompose_into(split->second, opts, out);
}

template <Field F>
std::string rep_sort_key(const Rep<F>& r) {
  std::string key = r.dims.str() + "|";
  for (const Matrix<F>& m : r.maps) key += m.str();
  return key;
}

}  // namespace

template <Field F>
std::vector<Rep<F>> krull_schmidt(const Rep<F>& v, const DecomposeOptions& opts) {
  std::vector<Rep<F>> out;
  decompose_into(v, opts, out);
  std::sort(out.begin(), out.end(), [](const Rep<F>& a, const Rep<F>& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims != b.dims) return a.dims < b.dims;
    return rep_sort_key(a) < rep_sort_key(b);
  });
  return out;
}

template std::optional<std::pair<Rep<PrimeField>, Rep<PrimeField>>> find_split(
    const Rep<PrimeField>&, const DecomposeOptions&);
template std::optional<std::pair<Rep<RationalField>, Rep<RationalField>>>
find_split(const Rep<RationalField>&, const DecomposeOptions&);
template bool is_indecomposable(const Rep<PrimeField>&, const DecomposeOptions&);
template bool is_indecomposable(const Rep<RationalField>&,
                                const DecomposeOptions&);
template std::vector<Rep<PrimeField>> krull_schmidt(const Rep<PrimeField>&,
                                                    const DecomposeOptions&);
template std::vector<Rep<RationalField>> krull_schmidt(
    const Rep<RationalField>&, const DecomposeOptions&);

}  // namespace qh
