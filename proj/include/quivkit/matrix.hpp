#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivkit/field.hpp"

namespace quivkit {

template <Field F>
class Matrix;

template <Field F>
struct RrefResult {
  Matrix<F> R;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Matrix<F> kernel;  // cols x nullity, columns span the null space
};

// Dense row-major matrix over an exact field. Value semantics: operations
// return fresh matrices, and set()/set_block() are meant for building.
template <Field F>
class Matrix {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}
  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(a_.size() == rows_ * cols_, ErrorKind::shape, "entry count does not match shape");
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
  }
  static Matrix from_ints(const F& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, ErrorKind::shape, "ragged integer matrix");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.from_int(rows[i][j]));
    }
    return m;
  }
  static Matrix from_ints(const F& field, std::size_t r, std::size_t c, const std::vector<long long>& flat) {
    require(flat.size() == r * c, ErrorKind::shape, "entry count does not match shape");
    Matrix m(field, r, c);
    for (std::size_t k = 0; k < flat.size(); ++k) m.a_[k] = field.from_int(flat[k]);
    return m;
  }
  static Matrix scalar(const F& field, std::size_t n, const value_type& s) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, s);
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const value_type& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, value_type v) { a_[i * cols_ + j] = std::move(v); }
  const std::vector<value_type>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!field_.equal(a_[k], o.a_[k])) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    same_field(o);
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::shape, "matrix sum of " + shape() + " and " + o.shape());
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    same_field(o);
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::shape, "matrix difference of " + shape() + " and " + o.shape());
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
    return r;
  }
  Matrix operator-() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.neg(a_[k]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    same_field(o);
    require(cols_ == o.rows_, ErrorKind::shape, "matrix product of " + shape() + " and " + o.shape());
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& x = at(i, k);
        if (field_.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          auto& slot = r.a_[i * o.cols_ + j];
          slot = field_.add(slot, field_.mul(x, o.at(k, j)));
        }
      }
    return r;
  }
  Matrix scale(const value_type& s) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::shape, "block out of range in " + shape());
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    same_field(b);
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::shape, "block " + b.shape() + " does not fit in " + shape());
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b.at(i, j));
  }
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    return r;
  }

  value_type trace() const {
    require(is_square(), ErrorKind::shape, "trace of non-square " + shape());
    value_type t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
    return t;
  }

  RrefResult<F> rref() const {
    Matrix R = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero(R.at(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(R.a_[p * cols_ + j], R.a_[r * cols_ + j]);
      value_type inv = field_.inv(R.at(r, c));
      for (std::size_t j = c; j < cols_; ++j) R.set(r, j, field_.mul(R.at(r, j), inv));
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero(R.at(i, c))) continue;
        value_type f = R.at(i, c);
        for (std::size_t j = c; j < cols_; ++j) R.set(i, j, field_.sub(R.at(i, j), field_.mul(f, R.at(r, j))));
      }
      piv.push_back(c);
      ++r;
    }
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_piv[c]) free.push_back(c);
    Matrix K(field_, cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      K.set(free[k], k, field_.one());
      for (std::size_t i = 0; i < piv.size(); ++i) K.set(piv[i], k, field_.neg(R.at(i, free[k])));
    }
    return RrefResult<F>{std::move(R), std::move(piv), r, std::move(K)};
  }

  std::size_t rank() const { return rref().rank; }
  Matrix kernel() const { return rref().kernel; }

  value_type det() const {
    require(is_square(), ErrorKind::shape, "determinant of non-square " + shape());
    Matrix R = *this;
    value_type d = field_.one();
    std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && field_.is_zero(R.at(p, c))) ++p;
      if (p == n) return field_.zero();
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(R.a_[p * n + j], R.a_[c * n + j]);
        d = field_.neg(d);
      }
      d = field_.mul(d, R.at(c, c));
      value_type inv = field_.inv(R.at(c, c));
      for (std::size_t i = c + 1; i < n; ++i) {
        if (field_.is_zero(R.at(i, c))) continue;
        value_type f = field_.mul(R.at(i, c), inv);
        for (std::size_t j = c; j < n; ++j) R.set(i, j, field_.sub(R.at(i, j), field_.mul(f, R.at(c, j))));
      }
    }
    return d;
  }

  bool is_invertible() const { return is_square() && rank() == rows_; }

  std::optional<Matrix> inverse() const {
    require(is_square(), ErrorKind::shape, "inverse of non-square " + shape());
    auto res = hstack_(*this, identity(field_, rows_)).rref();
    if (res.rank < rows_ || (rows_ > 0 && res.pivots[rows_ - 1] >= rows_)) return std::nullopt;
    return res.R.block(0, rows_, rows_, rows_);
  }

  // Some X with (*this) X = B, free variables set to zero.
  std::optional<Matrix> solve(const Matrix& B) const {
    same_field(B);
    require(B.rows_ == rows_, ErrorKind::shape, "solve: right-hand side " + B.shape() + " against " + shape());
    auto res = hstack_(*this, B).rref();
    Matrix X(field_, cols_, B.cols_);
    for (std::size_t i = 0; i < res.pivots.size(); ++i) {
      std::size_t pc = res.pivots[i];
      if (pc >= cols_) return std::nullopt;
      for (std::size_t j = 0; j < B.cols_; ++j) X.set(pc, j, res.R.at(i, cols_ + j));
    }
    return X;
  }

  template <Field G>
  Matrix<G> map(const G& target, const std::function<typename G::value_type(const value_type&)>& f) const {
    std::vector<typename G::value_type> out;
    out.reserve(a_.size());
    for (const auto& v : a_) out.push_back(f(v));
    return Matrix<G>(target, rows_, cols_, std::move(out));
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) s += ", ";
        s += field_.to_string(at(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

  void same_field(const Matrix& o) const {
    if (!(field_ == o.field_)) fail(ErrorKind::field_mismatch, "fields " + field_.tag() + " and " + o.field_.tag() + " differ");
  }

 private:
  static Matrix hstack_(const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> a_;
};

template <Field F>
Matrix<F> hstack(const std::vector<Matrix<F>>& parts, const F& field, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    require(p.rows() == rows, ErrorKind::shape, "hstack row mismatch");
    c += p.cols();
  }
  Matrix<F> r(field, rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.set_block(0, off, p);
    off += p.cols();
  }
  return r;
}

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  return hstack<F>({a, b}, a.field(), a.rows());
}

template <Field F>
Matrix<F> vstack(const std::vector<Matrix<F>>& parts, const F& field, std::size_t cols) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    require(p.cols() == cols, ErrorKind::shape, "vstack column mismatch");
    r += p.rows();
  }
  Matrix<F> m(field, r, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  return vstack<F>({a, b}, a.field(), a.cols());
}

template <Field F>
Matrix<F> block_diag(const std::vector<Matrix<F>>& parts, const F& field) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix<F> m(field, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    m.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

template <Field F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <Field F>
Matrix<F> inverse_or_throw(const Matrix<F>& m, ErrorKind kind, const std::string& what) {
  if (!m.is_square()) fail(kind, what + " is not square (" + m.shape() + ")");
  auto inv = m.inverse();
  if (!inv) fail(kind, what + " is singular");
  return *inv;
}

// Subspaces are represented by matrices whose columns form a basis.

template <Field F>
Matrix<F> column_basis(const Matrix<F>& m) {
  auto res = m.rref();
  return m.select_cols(res.pivots);
}

// Canonical basis: transpose of the nonzero rows of rref(m^T).
template <Field F>
Matrix<F> canonical_basis(const Matrix<F>& m) {
  auto res = m.transpose().rref();
  return res.R.block(0, 0, res.rank, m.rows()).transpose();
}

template <Field F>
bool in_span(const Matrix<F>& basis, const Matrix<F>& v) {
  return basis.solve(v).has_value();
}

template <Field F>
Matrix<F> intersect(const Matrix<F>& U, const Matrix<F>& V) {
  require(U.rows() == V.rows(), ErrorKind::shape, "subspaces live in different ambient spaces");
  auto K = hstack(U, -V).kernel();
  return column_basis(U * K.block(0, 0, U.cols(), K.cols()));
}

template <Field F>
Matrix<F> left_kernel(const Matrix<F>& m) {
  return m.transpose().kernel().transpose();
}

// Largest X-invariant subspace contained in span(U).
template <Field F>
Matrix<F> largest_invariant_subspace(const Matrix<F>& X, Matrix<F> U) {
  U = column_basis(U);
  while (U.cols() > 0) {
    auto K = hstack(X * U, -U).kernel();
    Matrix<F> next = column_basis(U * K.block(0, 0, U.cols(), K.cols()));
    if (next.cols() == U.cols()) return U;
    U = std::move(next);
  }
  return U;
}

// Smallest subspace containing span(S) and stable under every map in gens.
template <Field F>
Matrix<F> invariant_closure(const std::vector<Matrix<F>>& gens, const Matrix<F>& S) {
  Matrix<F> U = column_basis(S);
  while (true) {
    std::vector<Matrix<F>> parts{U};
    for (const auto& g : gens) parts.push_back(g * U);
    Matrix<F> next = column_basis(hstack(parts, U.field(), U.rows()));
    if (next.cols() == U.cols()) return U;
    U = std::move(next);
  }
}

}  // namespace quivkit
