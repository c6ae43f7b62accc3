#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "quiverhall/errors.hpp"
#include "quiverhall/prime_field.hpp"

namespace qh {

/// Dense matrix over an exact field.  Dimensions may be zero in either
/// direction; all the usual identities hold for empty shapes.
template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(int rows, int cols, const F& f)
      : field(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, f.zero()) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  }

  static Matrix identity(int n, const F& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!field.eq(a_[k], o.a_[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const Elem& x : a_)
      if (!field.is_zero(x)) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(rows_, cols_, field);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] = field.add(a_[k], o.a_[k]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(rows_, cols_, field);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] = field.sub(a_[k], o.a_[k]);
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_, field);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field.neg(a_[k]);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw InputError("matrix product shape mismatch: " + shape_str() +
                       " * " + o.shape_str());
    Matrix r(rows_, o.cols_, field);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& aik = at(i, k);
        if (field.is_zero(aik)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = field.add(r.at(i, j), field.mul(aik, o.at(k, j)));
      }
    return r;
  }

  Matrix scaled(const Elem& s) const {
    Matrix r(rows_, cols_, field);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field.mul(a_[k], s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, field);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Elem trace() const {
    if (rows_ != cols_) throw InputError("trace of non-square matrix");
    Elem t = field.zero();
    for (int i = 0; i < rows_; ++i) t = field.add(t, at(i, i));
    return t;
  }

  Matrix pow(std::uint64_t e) const {
    if (rows_ != cols_) throw InputError("power of non-square matrix");
    Matrix r = identity(rows_, field);
    Matrix base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Block-diagonal sum: [[A, 0], [0, B]].
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j)
        r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

  /// Reduced row echelon form in place.  Returns the pivot column list; the
  /// rank is its length.  Elimination is deterministic (first nonzero pivot
  /// in column order).
  std::vector<int> rref_in_place() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int pivot_row = -1;
      for (int i = row; i < rows_; ++i)
        if (!field.is_zero(at(i, col))) {
          pivot_row = i;
          break;
        }
      if (pivot_row < 0) continue;
      swap_rows(row, pivot_row);
      Elem inv = field.inv(at(row, col));
      for (int j = col; j < cols_; ++j) at(row, j) = field.mul(at(row, j), inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == row || field.is_zero(at(i, col))) continue;
        Elem factor = at(i, col);
        for (int j = col; j < cols_; ++j)
          at(i, j) = field.sub(at(i, j), field.mul(factor, at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix copy = *this;
    return static_cast<int>(copy.rref_in_place().size());
  }

  /// Basis of the right kernel, one row per basis vector, in the
  /// deterministic order of the free columns.
  Matrix kernel_basis() const {
    Matrix reduced = *this;
    std::vector<int> pivots = reduced.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    int nullity = cols_ - static_cast<int>(pivots.size());
    Matrix basis(nullity, cols_, field);
    int out = 0;
    for (int free_col = 0; free_col < cols_; ++free_col) {
      if (is_pivot[free_col]) continue;
      basis.at(out, free_col) = field.one();
      for (std::size_t r = 0; r < pivots.size(); ++r)
        basis.at(out, pivots[r]) = field.neg(reduced.at(static_cast<int>(r), free_col));
      ++out;
    }
    return basis;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw InputError("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_, field);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = field.one();
    }
    std::vector<int> pivots = aug.rref_in_place();
    // Invertible iff the pivots are exactly the left block's columns;
    // pivots falling into the augmented half mean a singular left block.
    if (static_cast<int>(pivots.size()) != rows_ ||
        (rows_ > 0 && pivots.back() >= cols_))
      return std::nullopt;
    Matrix inv(rows_, cols_, field);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  bool is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
  }

  /// Solves x * this = rhs for a single row vector rhs (i.e. expresses rhs in
  /// the row space); nullopt when rhs is outside the row span.
  std::optional<std::vector<Elem>> solve_row(const std::vector<Elem>& rhs) const {
    if (static_cast<int>(rhs.size()) != cols_)
      throw InputError("solve_row shape mismatch");
    // Row-reduce [this^T | rhs^T].
    Matrix aug(cols_, rows_ + 1, field);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) aug.at(j, i) = at(i, j);
    for (int j = 0; j < cols_; ++j) aug.at(j, rows_) = rhs[j];
    std::vector<int> pivots = aug.rref_in_place();
    std::vector<Elem> x(static_cast<std::size_t>(rows_), field.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == rows_) return std::nullopt;  // rhs not in span
      x[pivots[r]] = aug.at(static_cast<int>(r), rows_);
    }
    return x;
  }

  std::string str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
      out << (i ? "; " : "");
      for (int j = 0; j < cols_; ++j)
        out << (j ? " " : "") << field.str(at(i, j));
    }
    out << "]";
    return out.str();
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  F field;

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError("matrix shape mismatch: " + shape_str() + " vs " +
                       o.shape_str());
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  int rows_, cols_;
  std::vector<Elem> a_;
};

using MatF = Matrix<PrimeField>;
using MatQ = Matrix<RationalField>;

}  // namespace qh
