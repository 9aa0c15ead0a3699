#ifndef COCAL_CORPUS_HPP
#define COCAL_CORPUS_HPP

// The eleven nilpotent models g = R^6 x|_F R and random block models with
// exactly known spectra.

#include <cocal/matrix.hpp>
#include <cocal/random.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace cocal {

using Partition = std::vector<int>;

/// Partitions of 6 in reverse lexicographic order.
inline std::vector<Partition> partitions_of_six() {
  return {{6},       {5, 1},       {4, 2},          {4, 1, 1},          {3, 3},            {3, 2, 1},
          {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
}

inline std::string partition_name(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

inline Matrix nilpotent_model(const Partition& p) {
  std::vector<Matrix> blocks;
  for (int s : p) blocks.push_back(Matrix::jordan_block(static_cast<std::size_t>(s), 0));
  return Matrix::block_diagonal(blocks);
}

struct ManifestRow {
  Partition partition;
  bool g2 = true;
  bool g2star = true;
};

/// Nilpotent F admits a cocalibrated G2-structure unless its partition is
/// (5,1), (3,2,1) or (3,1,1,1); G2* always.
inline std::vector<ManifestRow> nilpotent_manifest() {
  const std::vector<Partition> excluded = {{5, 1}, {3, 2, 1}, {3, 1, 1, 1}};
  std::vector<ManifestRow> rows;
  for (const auto& p : partitions_of_six())
    rows.push_back({p, std::find(excluded.begin(), excluded.end(), p) == excluded.end(), true});
  return rows;
}

/// [[a, -b], [b, a]], eigenvalues a +- b i.
inline Matrix rotation_block(const Scalar& a, const Scalar& b) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = -b;
  m(1, 0) = b;
  m(1, 1) = a;
  return m;
}

/// Real Jordan block of size 4 for a +- b i.
inline Matrix rotation_jordan_block(const Scalar& a, const Scalar& b) {
  Matrix r = rotation_block(a, b);
  Matrix m = Matrix::block_diagonal({r, r});
  m(0, 2) = 1;
  m(1, 3) = 1;
  return m;
}

namespace detail {

inline Matrix jordan_sum_of_values(Rng& rng, std::vector<Scalar> values) {
  std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) { return lex_less(a, b); });
  std::vector<Matrix> blocks;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i] && rng.coin()) ++j;
    blocks.push_back(Matrix::jordan_block(j - i, values[i]));
    i = j;
  }
  return Matrix::block_diagonal(blocks);
}

}  // namespace detail

/// A 6x6 block-diagonal matrix with rational or Gaussian spectrum, mixing
/// symplectic pairings, three-pair sum patterns and unstructured blocks.
inline Matrix random_block_matrix(Rng& rng) {
  std::vector<Matrix> blocks;
  std::size_t used = 0;
  const long style = rng.integer(0, 3);
  if (style == 1) {
    // I1 = {a, b}, I2 = {c, a+b-c}, I3 = {x, -(a+b)-x}, occasionally off by one
    Scalar a(rng.integer(-2, 2)), b(rng.integer(-2, 2)), c(rng.integer(-2, 2)), x(rng.integer(-2, 2));
    std::vector<Scalar> v = {a, b, c, a + b - c, x, -(a + b) - x};
    if (rng.integer(0, 4) == 0) v[rng.index(6)] += 1;
    return detail::jordan_sum_of_values(rng, v);
  }
  while (used < 6) {
    const std::size_t room = 6 - used;
    const long pick = rng.integer(0, 4);
    if (style == 0 && pick <= 1 && room >= 2) {
      auto s = static_cast<std::size_t>(rng.integer(1, static_cast<long>(room / 2)));
      Scalar l(rng.integer(0, 2));
      blocks.push_back(Matrix::jordan_block(s, l));
      blocks.push_back(Matrix::jordan_block(s, -l));
      used += 2 * s;
    } else if (style == 0 && pick == 2 && room >= 2) {
      auto s = 2 * static_cast<std::size_t>(rng.integer(1, static_cast<long>(room / 2)));
      blocks.push_back(Matrix::jordan_block(s, 0));
      used += s;
    } else if ((style == 0 || style == 3) && pick == 3 && room >= 4) {
      Scalar a(style == 0 ? 0 : rng.integer(-1, 1)), b(rng.integer(1, 2));
      blocks.push_back(rotation_jordan_block(a, b));
      used += 4;
    } else if ((style == 0 || style == 3) && pick >= 3 && room >= 2) {
      Scalar a(style == 0 ? 0 : rng.integer(-2, 2)), b(rng.integer(1, 3));
      blocks.push_back(rotation_block(a, b));
      used += 2;
    } else {
      auto s = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min<std::size_t>(room, 3))));
      blocks.push_back(Matrix::jordan_block(s, Scalar(rng.integer(-2, 2))));
      used += s;
    }
  }
  return Matrix::block_diagonal(blocks);
}

/// P M P^-1 for a random block model M and integer P with entries in [-3, 3].
inline Matrix random_conjugated_model(Rng& rng) {
  Matrix m = random_block_matrix(rng);
  Matrix p = rng.invertible(6, -3, 3);
  return p * m * *inverse(p);
}

}  // namespace cocal

#endif  // COCAL_CORPUS_HPP
