#ifndef COCAL_JORDAN_HPP
#define COCAL_JORDAN_HPP

// Jordan structure of 6x6 matrices and the existence decisions built on it.

#include <cocal/matrix.hpp>
#include <cocal/numeric.hpp>
#include <cocal/polynomial.hpp>
#include <cocal/roots.hpp>
#include <cocal/smith.hpp>

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocal {

struct Tolerances {
  double numeric = kDefaultRankTol;
  double cluster = kDefaultClusterTol;
};

struct SegreEntry {
  std::optional<Scalar> exact;
  std::complex<double> approx;
  std::vector<int> blocks;  // descending
};

struct SegreData {
  std::vector<SegreEntry> entries;
  bool exact = true;

  std::size_t total_size() const {
    std::size_t s = 0;
    for (const auto& e : entries)
      for (int b : e.blocks) s += static_cast<std::size_t>(b);
    return s;
  }
};

/// Block counts from a rank sequence r_0..r_{n+1}: size k occurs
/// r_{k-1} - 2 r_k + r_{k+1} times.
inline std::vector<int> blocks_from_ranks(const std::vector<std::size_t>& r) {
  std::vector<int> blocks;
  for (std::size_t k = r.size() - 2; k >= 1; --k) {
    long cnt = static_cast<long>(r[k - 1]) - 2 * static_cast<long>(r[k]) + static_cast<long>(r[k + 1]);
    for (long c = 0; c < cnt; ++c) blocks.push_back(static_cast<int>(k));
  }
  return blocks;
}

inline std::vector<std::size_t> rank_sequence(const Matrix& f, const Scalar& lambda) {
  const std::size_t n = f.rows();
  Matrix shifted = f - Matrix::identity(n) * lambda;
  Matrix p = Matrix::identity(n);
  std::vector<std::size_t> r;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    if (k >= 2 && r[k - 1] == r[k - 2]) {
      r.push_back(r.back());
      continue;
    }
    r.push_back(rank(p));
    if (k <= n) p = p * shifted;
  }
  return r;
}

inline SegreData segre_data(const Matrix& f, const Tolerances& tol = {}) {
  if (!f.is_square()) throw std::invalid_argument("segre_data: square matrix required");
  SegreData s;
  RootSet rs = roots(char_poly(f), tol.cluster);
  s.exact = rs.exact;
  ComplexMatrix fc;
  if (!rs.exact) fc = to_complex(f);
  for (const auto& r : rs.roots) {
    SegreEntry e;
    e.exact = r.exact;
    e.approx = r.approx;
    if (r.exact) {
      e.blocks = blocks_from_ranks(rank_sequence(f, *r.exact));
    } else {
      e.blocks = blocks_from_ranks(numeric_rank_sequence(fc, r.approx, tol.numeric));
      int sum = 0;
      for (int b : e.blocks) sum += b;
      // numeric ranks that disagree with the multiplicity fall back to one block per root
      if (sum != static_cast<int>(r.multiplicity)) e.blocks.assign(r.multiplicity, 1);
    }
    s.entries.push_back(std::move(e));
  }
  return s;
}

inline std::vector<int> zero_blocks(const Matrix& f) {
  return blocks_from_ranks(rank_sequence(f, Scalar(0)));
}

namespace detail {

/// Eigenvalue-free test: F ~ -F and, for every odd size, an even number of
/// nilpotent blocks of that size.
inline bool sp_route_a(const Matrix& f) {
  if (!similar(f, -f)) return false;
  std::map<int, int> count;
  for (int b : zero_blocks(f)) ++count[b];
  for (const auto& [size, c] : count)
    if (size % 2 == 1 && c % 2 == 1) return false;
  return true;
}

/// Literal block pairing on exact Segre data.
inline bool sp_route_b(const SegreData& s) {
  for (const auto& e : s.entries) {
    if (!e.exact) throw std::logic_error("route B needs an exact spectrum");
    if (e.exact->is_zero()) {
      std::map<int, int> count;
      for (int b : e.blocks) ++count[b];
      for (const auto& [size, c] : count)
        if (size % 2 == 1 && c % 2 == 1) return false;
      continue;
    }
    auto partner = std::find_if(s.entries.begin(), s.entries.end(),
                                [&](const SegreEntry& o) { return *o.exact == -*e.exact; });
    if (partner == s.entries.end() || partner->blocks != e.blocks) return false;
  }
  return true;
}

}  // namespace detail

struct SpResult {
  bool value = false;
  bool route_b_checked = false;
};

/// Is F similar to an element of sp(6)? Route A is authoritative; route B
/// runs whenever the spectrum is exact and must agree.
inline SpResult sp_similar(const Matrix& f, const Tolerances& tol = {}) {
  if (f.rows() % 2 != 0) return {};
  SpResult r;
  r.value = detail::sp_route_a(f);
  SegreData s = segre_data(f, tol);
  if (s.exact) {
    r.route_b_checked = true;
    if (detail::sp_route_b(s) != r.value) throw std::logic_error("sp_similar: routes A and B disagree");
  }
  return r;
}

inline bool decide_g2(const Matrix& f, const Tolerances& tol = {}) { return sp_similar(f, tol).value; }
inline bool decide_g2c_nondeg(const Matrix& f, const Tolerances& tol = {}) { return sp_similar(f, tol).value; }

struct JNFLayout {
  std::vector<std::optional<Scalar>> exact;  // per position, all set iff the layout is exact
  std::vector<std::complex<double>> approx;
  std::vector<int> jb;  // block number per position, from 1
  bool is_exact = true;

  std::size_t size() const { return jb.size(); }
};

inline JNFLayout jnf_layout(const SegreData& s) {
  JNFLayout l;
  l.is_exact = s.exact;
  int block = 0;
  for (const auto& e : s.entries)
    for (int b : e.blocks) {
      ++block;
      for (int k = 0; k < b; ++k) {
        l.exact.push_back(e.exact);
        l.approx.push_back(e.approx);
        l.jb.push_back(block);
      }
    }
  return l;
}

/// Exact layout from eigenvalues listed position by position and block sizes.
inline JNFLayout make_layout(const std::vector<Scalar>& lambdas, const std::vector<int>& sizes) {
  JNFLayout l;
  int block = 0;
  for (int s : sizes) {
    ++block;
    for (int k = 0; k < s; ++k) l.jb.push_back(block);
  }
  if (l.jb.size() != lambdas.size()) throw std::invalid_argument("make_layout: sizes do not cover the eigenvalues");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (i > 0 && l.jb[i] == l.jb[i - 1] && lambdas[i] != lambdas[i - 1])
      throw std::invalid_argument("make_layout: one block, two eigenvalues");
    l.exact.push_back(lambdas[i]);
    l.approx.push_back(lambdas[i].to_complex());
  }
  return l;
}

struct PairPartition {
  std::array<std::array<int, 2>, 3> sets{};  // I1, I2, I3 with 1-based indices

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  std::string str() const {
    std::string out;
    for (int k = 0; k < 3; ++k) {
      out += "I" + std::to_string(k + 1) + "={" + std::to_string(sets[static_cast<std::size_t>(k)][0]) + "," +
             std::to_string(sets[static_cast<std::size_t>(k)][1]) + "}";
      if (k < 2) out += " ";
    }
    return out;
  }
};

/// All 45 ordered partitions (I1, I2, I3) with min I1 < min I2, in
/// lexicographic order.
inline std::vector<PairPartition> all_pair_partitions() {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) pairs.push_back({a, b});
  std::vector<PairPartition> out;
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs)
      for (const auto& p3 : pairs) {
        if (!(p1 < p2)) continue;
        int mask = (1 << p1[0]) | (1 << p1[1]) | (1 << p2[0]) | (1 << p2[1]) | (1 << p3[0]) | (1 << p3[1]);
        if (mask != 0x7e) continue;
        out.push_back({{p1, p2, p3}});
      }
  return out;
}

namespace detail {

class LayoutArith {
 public:
  LayoutArith(const JNFLayout& l, double tol) : l_(l), tol_(tol) {}

  bool exact() const { return l_.is_exact; }

  /// sum of lambdas at positions with given signs equals zero
  bool zero(const std::vector<std::pair<int, Scalar>>& combo) const {
    if (exact()) {
      Scalar s;
      for (const auto& [pos, c] : combo) s += c * *l_.exact[static_cast<std::size_t>(pos - 1)];
      return s.is_zero();
    }
    std::complex<double> s;
    for (const auto& [pos, c] : combo) s += c.to_complex() * l_.approx[static_cast<std::size_t>(pos - 1)];
    return std::abs(s) < tol_;
  }
  int jb(int pos) const { return l_.jb[static_cast<std::size_t>(pos - 1)]; }

 private:
  const JNFLayout& l_;
  double tol_;
};

inline bool partition_conditions(const LayoutArith& a, const PairPartition& p) {
  const auto& i1 = p.sets[0];
  const auto& i2 = p.sets[1];
  const auto& i3 = p.sets[2];
  // (i) sum I1 = sum I2 = -sum I3
  if (!a.zero({{i1[0], 1}, {i1[1], 1}, {i2[0], -1}, {i2[1], -1}})) return false;
  if (!a.zero({{i1[0], 1}, {i1[1], 1}, {i3[0], 1}, {i3[1], 1}})) return false;
  // lambda_j = -sum I3 / 2, i.e. 2 lambda_j + sum I3 = 0
  auto at_half = [&](int j) { return a.zero({{j, 2}, {i3[0], 1}, {i3[1], 1}}); };
  // (ii)
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int a1 = i1[static_cast<std::size_t>(x)], a2 = i2[static_cast<std::size_t>(y)];
      if (a.jb(a1) != a.jb(a2)) continue;
      int b1 = i1[static_cast<std::size_t>(1 - x)], b2 = i2[static_cast<std::size_t>(1 - y)];
      if (!((at_half(a1) && at_half(a2)) || a.jb(b1) == a.jb(b2))) return false;
    }
  // (iii)
  bool trigger = false;
  for (int y = 0; y < 2; ++y) {
    int b = a.jb(i2[static_cast<std::size_t>(y)]);
    if (a.jb(i1[0]) == b && a.jb(i1[1]) == b) trigger = true;
  }
  for (int x = 0; x < 2; ++x) {
    int b = a.jb(i1[static_cast<std::size_t>(x)]);
    if (a.jb(i2[0]) == b && a.jb(i2[1]) == b) trigger = true;
  }
  if (trigger) {
    const std::array<int, 4> all = {i1[0], i1[1], i2[0], i2[1]};
    for (int j : all) {
      if (!at_half(j)) return false;
      if (a.jb(j) != a.jb(all[0])) return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::optional<PairPartition> partition_search(const JNFLayout& layout, double tol = kDefaultClusterTol) {
  if (layout.size() != 6) throw std::invalid_argument("partition_search: layout of size 6 required");
  detail::LayoutArith arith(layout, tol);
  for (const auto& p : all_pair_partitions())
    if (detail::partition_conditions(arith, p)) return p;
  return std::nullopt;
}

struct G2StarDecision {
  bool value = false;
  bool exact = true;
  std::optional<PairPartition> partition;
};

inline G2StarDecision decide_g2star(const Matrix& f, const Tolerances& tol = {}) {
  SegreData s = segre_data(f, tol);
  G2StarDecision d;
  d.exact = s.exact;
  d.partition = partition_search(jnf_layout(s), tol.cluster);
  d.value = d.partition.has_value();
  return d;
}

/// The complex criterion is literally the same partition condition.
inline G2StarDecision decide_g2c(const Matrix& f, const Tolerances& tol = {}) { return decide_g2star(f, tol); }

}  // namespace cocal

#endif  // COCAL_JORDAN_HPP
