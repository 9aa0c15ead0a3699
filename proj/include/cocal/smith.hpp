#ifndef COCAL_SMITH_HPP
#define COCAL_SMITH_HPP

// Similarity testing through the Smith normal form of the characteristic
// matrix xI - m over the polynomial ring Q(i)[x].

#include <cocal/matrix.hpp>
#include <cocal/polynomial.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cocal {

namespace detail {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline void swap_rows(PolyMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
inline void swap_cols(PolyMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

/// Diagonalizes a square polynomial matrix in place by unimodular row and
/// column operations; returns the diagonal, each entry made monic, with the
/// divisibility chain d_1 | d_2 | ... enforced.
inline std::vector<Polynomial> smith_diagonal(PolyMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: nonzero entry of least degree in the trailing block
      std::size_t pi = n, pj = n;
      int best = -1;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
      if (pi == n) break;  // trailing block is zero
      swap_rows(a, t, pi);
      swap_cols(a, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        Polynomial q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        Polynomial q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // divisibility: if the pivot fails to divide some trailing entry, add
      // that row to row t and repeat
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(a[i][j] % a[t][t]).is_zero()) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Polynomial> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(a[k][k].monic());
  return d;
}

}  // namespace detail

/// Nontrivial monic invariant factors d_1 | d_2 | ... of a square matrix.
/// Their product equals the characteristic polynomial.
inline std::vector<Polynomial> invariant_factors(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invariant factors of non-square matrix");
  const std::size_t n = m.rows();
  detail::PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Polynomial::constant(-m(i, j));
      if (i == j) a[i][j] += Polynomial::x();
    }
  std::vector<Polynomial> diag = detail::smith_diagonal(std::move(a));
  std::vector<Polynomial> out;
  for (auto& p : diag)
    if (p.degree() > 0) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(),
            [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
  return out;
}

inline bool similar(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("similarity test needs square matrices of equal size");
  if (a.trace() != b.trace()) return false;
  if (char_poly(a) != char_poly(b)) return false;
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace cocal

#endif  // COCAL_SMITH_HPP
