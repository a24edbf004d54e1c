#pragma once

// Exact scalars (Q and real quadratic fields Q(sqrt d)), dense matrices over
// them, and field-generic Gaussian elimination.

#include <arithlat/error.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithlat {

using Integer = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every arithmetic op.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Serialized as "p/q", always with an explicit denominator.
std::string to_string(const Rational& r);
// Accepts "p/q" or "p".
Rational parse_rational(const std::string& s);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_rational_square(const Rational& r);

// r = root^2 * squarefree with squarefree a squarefree integer (sign kept).
struct SquareClass {
  Integer squarefree;
  Rational root;
};
SquareClass square_class(const Rational& r);

bool is_squarefree(const Integer& n);
bool is_prime(const Integer& n);

// The field Q(sqrt d); d is validated once here.
class QuadField {
public:
  explicit QuadField(std::int64_t d);
  std::int64_t d() const noexcept { return d_; }
  friend bool operator==(const QuadField&, const QuadField&) = default;

private:
  std::int64_t d_;
};

// x + y*sqrt(d). A value built from a bare Rational carries d = 0 until it
// meets a value of a concrete field; such values always have y = 0.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(const Rational& x) : x_(x) {}  // NOLINT(implicit)
  QuadExt(long x) : x_(x) {}             // NOLINT(implicit)
  QuadExt(const Rational& x, const Rational& y, const QuadField& field)
      : x_(x), y_(y), d_(field.d()) {}

  static QuadExt sqrt_d(const QuadField& field) { return {0, 1, field}; }

  const Rational& rational_part() const noexcept { return x_; }
  const Rational& irrational_part() const noexcept { return y_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }

  // sqrt d -> -sqrt d
  QuadExt conjugate() const;
  // x^2 - d y^2, the field norm
  Rational norm() const;
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

private:
  std::int64_t joint_field(const QuadExt& o) const;

  Rational x_;
  Rational y_;
  std::int64_t d_ = 0;
};

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }
inline QuadExt galois_conjugate(const QuadExt& s) { return s.conjugate(); }

// "p/q+r/s*sqrt(d)"; d is printed from the value or, for field-free values,
// from the supplied field.
std::string to_string(const QuadExt& q, std::int64_t field_d);
QuadExt parse_quad(const std::string& s);

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) fail(ErrorCode::DimensionMismatch, "entry count");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& v) { return Matrix(v.size(), 1, v); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& entries() const noexcept { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.data_) e = s * e;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "shape");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadExt>;
using IntMatrix = Matrix<Integer>;
using RatVector = std::vector<Rational>;
using QuadVector = std::vector<QuadExt>;

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

// Kronecker product; row index of (a kron b) is i * b.rows() + k.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hstack");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <class T>
Matrix<T> from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
  Matrix<T> out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

QuadMatrix to_quad(const RatMatrix& m);
QuadVector to_quad(const RatVector& v);
// nullopt unless every entry has zero irrational part.
std::optional<RatMatrix> to_rational(const QuadMatrix& m);
std::optional<RatVector> to_rational(const QuadVector& v);
bool is_rational(const QuadMatrix& m);
QuadMatrix galois_conjugate(const QuadMatrix& m);
QuadVector galois_conjugate(const QuadVector& v);
IntMatrix to_integer(const RatMatrix& m);  // throws InvalidInput on a non-integer entry
RatMatrix to_rational(const IntMatrix& m);

// ---------------------------------------------------------------- linalg

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

template <class T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Columns form a basis of {x : m x = 0}, one per free column, in column order.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return from_columns(m.cols(), basis);
}

// X with a X = b, or nullopt if inconsistent. Free variables are set to 0.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve");
  const auto e = rref(hstack(a, b));
  for (auto c : e.pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::NonSquare, "inverse of non-square matrix");
  const auto e = rref(hstack(m, Matrix<T>::identity(m.rows())));
  if (e.pivots.size() < m.rows() || e.pivots[m.rows() - 1] >= m.cols())
    fail(ErrorCode::NotInvertible, "singular matrix");
  return e.reduced.columns(m.cols(), m.cols());
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) fail(ErrorCode::NonSquare, "determinant of non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::NonSquare, "trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// True iff the column spans of a and b coincide.
template <class T>
bool same_column_span(const Matrix<T>& a, const Matrix<T>& b) {
  const auto ra = rank(a);
  return ra == rank(b) && ra == rank(hstack(a, b));
}

// True iff every column of b lies in the column span of a.
template <class T>
bool spans_contain(const Matrix<T>& a, const Matrix<T>& b) {
  return rank(a) == rank(hstack(a, b));
}

}  // namespace arithlat
