#ifndef COCAL_MATRIX_HPP
#define COCAL_MATRIX_HPP

#include <cocal/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocal {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Jordan block of size n with eigenvalue lambda (ones on the superdiagonal).
  static Matrix jordan_block(std::size_t n, const Scalar& lambda) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = lambda;
      if (i + 1 < n) m(i, i + 1) = 1;
    }
    return m;
  }
  static Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
      off += b.rows();
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_),
                  data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  static Matrix from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  bool is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const { return *this * Scalar(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    Matrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Scalar trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += (*this)(i, j).str();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

inline RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Exact basis of the null space; one vector per non-pivot column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Scalar determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Solves m x = b; returns one particular solution if consistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a rational symmetric matrix by exact congruence
/// diagonalization (symmetric Gaussian elimination with the usual
/// e_i + e_j trick when the remaining diagonal vanishes).
inline Signature signature(Matrix s) {
  if (!s.is_symmetric()) throw std::invalid_argument("signature of non-symmetric matrix");
  if (!s.is_real()) throw std::invalid_argument("signature of non-real matrix");
  const std::size_t n = s.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // pick a nonzero diagonal entry among the remaining indices
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !s(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonal entries vanish; look for an off-diagonal one
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && !s(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // e_a <- e_a + e_b: row/col a += row/col b
      for (std::size_t k = 0; k < n; ++k) s(a, k) += s(b, k);
      for (std::size_t k = 0; k < n; ++k) s(k, a) += s(k, b);
      p = a;
    }
    const Scalar piv = s(p, p);
    (piv.real_sign() > 0 ? sig.positive : sig.negative)++;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || s(i, p).is_zero()) continue;
      Scalar f = s(i, p) / piv;
      for (std::size_t k = 0; k < n; ++k) s(i, k) -= f * s(p, k);
      for (std::size_t k = 0; k < n; ++k) s(k, i) -= f * s(k, p);
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

}  // namespace cocal

#endif  // COCAL_MATRIX_HPP
