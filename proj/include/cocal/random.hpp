#ifndef COCAL_RANDOM_HPP
#define COCAL_RANDOM_HPP

// Seeded generators for exact test data.

#include <cocal/exterior.hpp>
#include <cocal/matrix.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace cocal {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Scalar rational(long num_bound = 5, long den_bound = 3) {
    long num = integer(-num_bound, num_bound);
    long den = integer(1, den_bound);
    return Scalar::frac(num, den);
  }
  Scalar gaussian(long num_bound = 3, long den_bound = 2) {
    Scalar re = rational(num_bound, den_bound);
    Scalar im = rational(num_bound, den_bound);
    return Scalar(re.re(), im.re());
  }
  Scalar nonzero_rational(long num_bound = 5, long den_bound = 3) {
    for (;;) {
      Scalar s = rational(num_bound, den_bound);
      if (!s.is_zero()) return s;
    }
  }

  Matrix int_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(lo, hi);
    return m;
  }
  Matrix rational_matrix(std::size_t n, long num_bound = 4, long den_bound = 3) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(num_bound, den_bound);
    return m;
  }
  /// Integer matrix with entries in [lo, hi], rejected until invertible.
  Matrix invertible(std::size_t n, long lo = -3, long hi = 3) {
    for (;;) {
      Matrix m = int_matrix(n, n, lo, hi);
      if (!determinant(m).is_zero()) return m;
    }
  }

  Vector rational_vector(std::size_t n, long num_bound = 5, long den_bound = 3) {
    Vector v(n);
    for (auto& x : v) x = rational(num_bound, den_bound);
    return v;
  }

  /// Random sparse multivector with small rational coefficients.
  Multivector multivector(int dim, int grade, Variance v, double density = 0.5) {
    Multivector x(dim, grade, v);
    std::bernoulli_distribution keep(density);
    for (Mask m : masks_of_grade(dim, grade))
      if (keep(gen_)) x.add(m, rational(4, 3));
    return x;
  }

  /// Rational point on the unit sphere S^m via inverse stereographic projection.
  Vector sphere_point(std::size_t m) {
    Vector t = rational_vector(m, 4, 3);
    Scalar norm2;
    for (const auto& x : t) norm2 += x * x;
    const Scalar inv = (norm2 + Scalar(1)).inverse();
    Vector out;
    for (const auto& x : t) out.push_back(Scalar(2) * x * inv);
    out.push_back((norm2 - Scalar(1)) * inv);
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cocal

#endif  // COCAL_RANDOM_HPP
