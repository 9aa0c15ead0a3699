#ifndef COCAL_NUMERIC_HPP
#define COCAL_NUMERIC_HPP

// Floating-point fallback used only when a spectrum does not split over Q(i).

#include <cocal/matrix.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <complex>

namespace cocal {

using ComplexMatrix = Eigen::MatrixXcd;

inline ComplexMatrix to_complex(const Matrix& m) {
  ComplexMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return out;
}

/// Number of singular values above tol * max(1, largest singular value).
inline std::size_t numeric_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++r;
  return r;
}

/// Ranks of (m - lambda I)^k for k = 0..n+1.
inline std::vector<std::size_t> numeric_rank_sequence(const ComplexMatrix& m, std::complex<double> lambda,
                                                      double tol) {
  const Eigen::Index n = m.rows();
  ComplexMatrix shifted = m - lambda * ComplexMatrix::Identity(n, n);
  ComplexMatrix p = ComplexMatrix::Identity(n, n);
  std::vector<std::size_t> r;
  for (Eigen::Index k = 0; k <= n + 1; ++k) {
    r.push_back(numeric_rank(p, tol));
    p = p * shifted;
  }
  return r;
}

}  // namespace cocal

#endif  // COCAL_NUMERIC_HPP
