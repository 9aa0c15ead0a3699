#ifndef COCAL_EXTERIOR_HPP
#define COCAL_EXTERIOR_HPP

// Sparse graded exterior algebra over Q(i).
//
// A Multivector is a k-vector or a k-form on an n-dimensional space (n <= 31),
// stored as a map from index sets to coefficients. Index sets are bitmasks
// (bit i-1 for index i), which makes every key canonically sorted.

#include <cocal/matrix.hpp>
#include <cocal/scalar.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocal {

enum class Variance { vector, form };

inline Variance opposite(Variance v) {
  return v == Variance::vector ? Variance::form : Variance::vector;
}
inline std::string to_string(Variance v) { return v == Variance::vector ? "vector" : "form"; }

using Mask = std::uint32_t;

inline Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > 31) throw std::out_of_range("index out of range");
    Mask bit = Mask{1} << (i - 1);
    if (m & bit) throw std::invalid_argument("repeated index");
    m |= bit;
  }
  return m;
}

/// 1-based ascending indices of a mask.
inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Sign of e_a ^ e_b relative to e_{a|b}; zero when the sets overlap.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    Mask low = rest & (~rest + 1);
    // count bits of a above this bit of b
    swaps += std::popcount(a & ~(low | (low - 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

/// All masks with `grade` bits among the first `dim` indices, in increasing
/// lexicographic order of their index tuples.
inline std::vector<Mask> masks_of_grade(int dim, int grade) {
  std::vector<Mask> out;
  std::vector<int> idx(static_cast<std::size_t>(grade));
  if (grade > dim || grade < 0) return out;
  for (int i = 0; i < grade; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(mask_of(idx));
    int k = grade - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == dim - grade + k + 1) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < grade; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

class Multivector {
 public:
  Multivector() = default;
  Multivector(int dim, int grade, Variance variance)
      : dim_(dim), grade_(grade), variance_(variance) {
    if (dim < 0 || dim > 31 || grade < 0 || grade > dim)
      throw std::invalid_argument("bad multivector dimensions");
  }

  /// c * e_{i1...ik} (or e^{i1...ik} for forms), 1-based indices in any order.
  static Multivector basis(int dim, const std::vector<int>& indices, Variance v,
                           const Scalar& c = 1) {
    Multivector x(dim, static_cast<int>(indices.size()), v);
    // sort with sign
    std::vector<int> idx = indices;
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (int i : idx)
      if (i > dim) throw std::out_of_range("index exceeds dimension");
    x.add(mask_of(idx), sign == 1 ? c : -c);
    return x;
  }
  static Multivector scalar(int dim, Variance v, const Scalar& c) {
    Multivector x(dim, 0, v);
    x.add(0, c);
    return x;
  }
  /// Grade-1 element with the given coordinates.
  static Multivector from_coords(const Vector& coords, Variance v) {
    Multivector x(static_cast<int>(coords.size()), 1, v);
    for (std::size_t i = 0; i < coords.size(); ++i) x.add(Mask{1} << i, coords[i]);
    return x;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  Variance variance() const { return variance_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar coeff(const std::vector<int>& indices) const {
    return basis(dim_, indices, variance_).terms_.begin()->second.is_one()
               ? coeff(mask_of(sorted(indices)))
               : -coeff(mask_of(sorted(indices)));
  }

  /// Coordinates of a grade-1 element.
  Vector coords() const {
    if (grade_ != 1) throw std::invalid_argument("coords of a non grade-1 multivector");
    Vector v(static_cast<std::size_t>(dim_));
    for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
    return v;
  }

  void add(Mask m, const Scalar& c) {
    if (popcount(m) != grade_) throw std::invalid_argument("term grade mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    check_compatible(o);
    if (o.grade_ != grade_) throw std::invalid_argument("grade mismatch in sum");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_compatible(o);
    if (o.grade_ != grade_) throw std::invalid_argument("grade mismatch in difference");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  Multivector& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Scalar& s) { return a *= s; }
  friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }
  Multivector operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.variance_ == b.variance_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  /// Coefficient vector in the lexicographic basis of the grade.
  Vector to_coords() const {
    auto ms = masks_of_grade(dim_, grade_);
    Vector v(ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) v[k] = coeff(ms[k]);
    return v;
  }
  static Multivector from_grade_coords(int dim, int grade, Variance var, const Vector& v) {
    Multivector x(dim, grade, var);
    auto ms = masks_of_grade(dim, grade);
    if (ms.size() != v.size()) throw std::invalid_argument("coordinate length mismatch");
    for (std::size_t k = 0; k < ms.size(); ++k) x.add(ms[k], v[k]);
    return x;
  }

  /// Human-readable, e.g. "e^{127} - 2*e^{146}".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* sep = variance_ == Variance::form ? "e^{" : "e_{";
    for (const auto& [m, c] : sorted_terms()) {
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += "(" + c.str() + ")*";
      out += sep;
      for (int i : indices_of(m)) out += std::to_string(i) + (dim_ > 9 ? "," : "");
      out += "}";
    }
    return out;
  }

  /// Terms ordered lexicographically by index tuple.
  std::vector<std::pair<Mask, Scalar>> sorted_terms() const {
    std::vector<std::pair<Mask, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return indices_of(a.first) < indices_of(b.first); });
    return out;
  }

 private:
  static std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
  void check_compatible(const Multivector& o) const {
    if (o.dim_ != dim_ || o.variance_ != variance_)
      throw std::invalid_argument("incompatible multivectors");
  }

  int dim_ = 0;
  int grade_ = 0;
  Variance variance_ = Variance::vector;
  std::map<Mask, Scalar> terms_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.variance() != b.variance()) throw std::invalid_argument("wedge: variance mismatch");
  if (a.grade() + b.grade() > a.dim()) return Multivector(a.dim(), a.dim(), a.variance());
  Multivector out(a.dim(), a.grade() + b.grade(), a.variance());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add(ma | mb, s > 0 ? c : -c);
    }
  return out;
}

/// X^k (wedge power), X^0 = 1.
inline Multivector wedge_power(const Multivector& x, int k) {
  Multivector r = Multivector::scalar(x.dim(), x.variance(), 1);
  for (int i = 0; i < k; ++i) r = wedge(r, x);
  return r;
}

/// Interior product of a grade-1 element of the opposite variance into the
/// first slot: (alpha _| X)(...) = X(alpha, ...).
inline Multivector contract(const Multivector& alpha, const Multivector& x) {
  if (alpha.grade() != 1) throw std::invalid_argument("contract: needs a grade-1 element");
  if (alpha.dim() != x.dim()) throw std::invalid_argument("contract: dimension mismatch");
  if (alpha.variance() == x.variance()) throw std::invalid_argument("contract: same variance");
  if (x.grade() == 0) return Multivector(x.dim(), 0, x.variance());
  Multivector out(x.dim(), x.grade() - 1, x.variance());
  for (const auto& [ma, ca] : alpha.terms())
    for (const auto& [mx, cx] : x.terms()) {
      if (!(mx & ma)) continue;
      // position of the contracted index among the indices of mx
      int pos = std::popcount(mx & (ma - 1));
      Scalar c = ca * cx;
      out.add(mx & ~ma, (pos & 1) ? -c : c);
    }
  return out;
}

/// Natural extension of the linear map f (columns are images of basis
/// elements) to each factor of decomposables.
inline Multivector pushforward(const Matrix& f, const Multivector& x) {
  if (!f.is_square() || static_cast<int>(f.rows()) != x.dim())
    throw std::invalid_argument("pushforward: matrix size mismatch");
  const int n = x.dim();
  std::vector<Multivector> images;
  for (int j = 0; j < n; ++j) images.push_back(Multivector::from_coords(f.col(static_cast<std::size_t>(j)), x.variance()));
  Multivector out(n, x.grade(), x.variance());
  for (const auto& [m, c] : x.terms()) {
    Multivector t = Multivector::scalar(n, x.variance(), c);
    for (int i : indices_of(m)) t = wedge(t, images[static_cast<std::size_t>(i - 1)]);
    out += t;
  }
  return out;
}

/// Form in a new basis: if the columns of p are new basis vectors (in old
/// coordinates), returns the coefficients of the form in the dual basis.
inline Multivector pullback(const Matrix& p, const Multivector& form) {
  return pushforward(p.transpose(), form);
}

/// Dual isomorphism delta(X) = X _| vol, fixed by delta(X)(Y) = vol(X ^ Y)
/// for all complementary Y. `vol` is top grade with the opposite variance.
inline Multivector dual_iso(const Multivector& x, const Multivector& vol) {
  if (vol.dim() != x.dim() || vol.grade() != vol.dim() || vol.variance() == x.variance())
    throw std::invalid_argument("dual_iso: bad volume element");
  if (vol.is_zero()) throw std::invalid_argument("dual_iso: zero volume");
  const int n = x.dim();
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  const Scalar c = vol.coeff(full);
  Multivector out(n, n - x.grade(), vol.variance());
  for (const auto& [m, cx] : x.terms()) {
    Mask comp = full & ~m;
    Scalar v = c * cx;
    out.add(comp, wedge_sign(m, comp) > 0 ? v : -v);
  }
  return out;
}

/// The dual volume nu with nu(vol) = 1.
inline Multivector dual_volume(const Multivector& vol) {
  const int n = vol.dim();
  const Mask full = (Mask{1} << n) - 1;
  Multivector nu(n, n, opposite(vol.variance()));
  nu.add(full, vol.coeff(full).inverse());
  return nu;
}

/// Exact inverse of dual_iso for the given volume element.
inline Multivector dual_iso_inverse(const Multivector& psi, const Multivector& vol) {
  Multivector back = dual_iso(psi, dual_volume(vol));
  const int k = vol.dim() - psi.grade();
  if ((k * (vol.dim() - k)) % 2 == 1) back *= Scalar(-1);
  return back;
}

/// Standard volume element e_{1..n} or e^{1..n}.
inline Multivector standard_volume(int dim, Variance v, const Scalar& c = 1) {
  Multivector vol(dim, dim, v);
  vol.add((Mask{1} << dim) - 1, c);
  return vol;
}

/// Infinitesimal natural action of gl on forms, (f.rho)(v_1..v_k) =
/// -sum_i rho(v_1,..,f v_i,..,v_k); on vectors f acts as a derivation by f.
inline Multivector derivation_action(const Matrix& f, const Multivector& x) {
  if (!f.is_square() || static_cast<int>(f.rows()) != x.dim())
    throw std::invalid_argument("derivation_action: matrix size mismatch");
  const int n = x.dim();
  // image of each basis element of degree one
  std::vector<Multivector> act;
  for (int i = 0; i < n; ++i) {
    Vector v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (x.variance() == Variance::form)
        v[static_cast<std::size_t>(j)] = -f(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      else
        v[static_cast<std::size_t>(j)] = f(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
    }
    act.push_back(Multivector::from_coords(v, x.variance()));
  }
  Multivector out(n, x.grade(), x.variance());
  for (const auto& [m, c] : x.terms()) {
    auto idx = indices_of(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      Multivector t = Multivector::scalar(n, x.variance(), c);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q == p)
          t = wedge(t, act[static_cast<std::size_t>(idx[q] - 1)]);
        else
          t = wedge(t, Multivector::basis(n, {idx[q]}, x.variance()));
      }
      out += t;
    }
  }
  return out;
}

/// Matrix of alpha |-> alpha _| X on the standard dual basis; column i holds
/// the coordinates of e^i _| X.
inline Matrix contraction_matrix(const Multivector& x) {
  const int n = x.dim();
  auto rows = masks_of_grade(n, x.grade() - 1);
  Matrix m(rows.size(), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Multivector c = contract(Multivector::basis(n, {i + 1}, opposite(x.variance())), x);
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, static_cast<std::size_t>(i)) = c.coeff(rows[r]);
  }
  return m;
}

struct RankSupport {
  std::size_t rank = 0;
  std::vector<Vector> support_basis;  // coordinates in the ambient basis
};

/// Rank and support [X], the smallest subspace W with X in Lambda^k W.
inline RankSupport rank_support(const Multivector& x) {
  RankSupport out;
  if (x.is_zero() || x.grade() == 0) return out;
  Matrix m = contraction_matrix(x);
  out.rank = cocal::rank(m);
  // support = annihilator of {alpha : alpha _| X = 0}
  auto ker = kernel_basis(m);
  const auto n = static_cast<std::size_t>(x.dim());
  if (ker.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      out.support_basis.push_back(std::move(e));
    }
  } else {
    out.support_basis = kernel_basis(Matrix::from_rows(ker));
  }
  return out;
}

/// Length of a 2-vector: the unique l with X^l != 0 and X^{l+1} = 0.
inline int length_grade2(const Multivector& x) {
  if (x.grade() != 2) throw std::invalid_argument("length_grade2: grade must be 2");
  int l = 0;
  Multivector p = Multivector::scalar(x.dim(), x.variance(), 1);
  for (;;) {
    p = wedge(p, x);
    if (p.is_zero()) return l;
    ++l;
  }
}

/// Length of an (n-2)-vector through the dual isomorphism.
inline int length_cograde2(const Multivector& y, const Multivector& vol) {
  if (y.grade() != y.dim() - 2) throw std::invalid_argument("length_cograde2: grade must be n-2");
  return length_grade2(dual_iso(y, vol));
}

inline int length_cograde2(const Multivector& y) {
  return length_cograde2(y, standard_volume(y.dim(), opposite(y.variance())));
}

struct SymplecticBasis {
  int length = 0;
  /// v_1..v_2l followed by a completion to a full basis.
  std::vector<Vector> vectors;
};

/// Writes a 2-vector as sum_i v_{2i-1} ^ v_{2i} with exact independent v's.
inline SymplecticBasis symplectic_basis(const Multivector& x) {
  if (x.grade() != 2) throw std::invalid_argument("symplectic_basis: grade must be 2");
  const int n = x.dim();
  const Variance dv = opposite(x.variance());
  SymplecticBasis out;
  Multivector rest = x;
  while (!rest.is_zero()) {
    Mask m = rest.terms().begin()->first;
    auto idx = indices_of(m);
    Multivector a = Multivector::basis(n, {idx[0]}, dv);
    Multivector b = Multivector::basis(n, {idx[1]}, dv);
    Multivector u = contract(a, rest);
    Multivector w = contract(b, rest);
    Scalar c = contract(b, u).coeff(0);  // rest(a, b)
    // v1 ^ v2 with v1 = -(b _| rest)/c, v2 = a _| rest removes one hyperbolic pair
    Multivector v1 = w * (-c.inverse());
    rest -= wedge(v1, u);
    out.vectors.push_back(v1.coords());
    out.vectors.push_back(u.coords());
    ++out.length;
  }
  // completion by standard basis vectors
  for (int i = 0; i < n && static_cast<int>(out.vectors.size()) < n; ++i) {
    Vector e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = 1;
    auto trial = out.vectors;
    trial.push_back(e);
    if (rank(Matrix::from_rows(trial)) == trial.size()) out.vectors = std::move(trial);
  }
  return out;
}

/// Restriction to a coordinate subspace: keeps terms supported on `keep`
/// (1-based, ascending) and re-indexes them 1..|keep|.
inline Multivector restrict_to(const Multivector& x, const std::vector<int>& keep) {
  Mask allowed = mask_of(keep);
  Multivector out(static_cast<int>(keep.size()), x.grade(), x.variance());
  for (const auto& [m, c] : x.terms()) {
    if (m & ~allowed) continue;
    Mask nm = 0;
    for (std::size_t k = 0; k < keep.size(); ++k)
      if (m & (Mask{1} << (keep[k] - 1))) nm |= Mask{1} << k;
    out.add(nm, c);
  }
  return out;
}

/// Inverse of restrict_to: embeds into dimension `dim` at positions `at`.
inline Multivector embed(const Multivector& x, int dim, const std::vector<int>& at) {
  Multivector out(dim, x.grade(), x.variance());
  for (const auto& [m, c] : x.terms()) {
    Mask nm = 0;
    for (int i : indices_of(m)) nm |= Mask{1} << (at[static_cast<std::size_t>(i - 1)] - 1);
    out.add(nm, c);
  }
  return out;
}

/// Splitting of a form along a nonzero covector alpha: psi = omega + rho ^ alpha,
/// where omega and rho live on the complement W spanned by the standard
/// covectors other than e^p (p = last index with alpha_p != 0). Both parts
/// are returned restricted to W, indexed 1..n-1.
struct Splitting {
  int dropped_index = 0;
  Multivector omega;
  Multivector rho;
};

inline Splitting split_along(const Multivector& psi, const Vector& alpha) {
  const int n = psi.dim();
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (!alpha[static_cast<std::size_t>(i)].is_zero()) {
      p = i;
      break;
    }
  if (p < 0) throw std::invalid_argument("split_along: zero covector");
  // coordinates in the basis f^j = e^j (j != p), f^p = alpha:
  // e^p = (f^p - sum_{j != p} alpha_j f^j) / alpha_p
  Matrix t = Matrix::identity(static_cast<std::size_t>(n));
  const Scalar inv = alpha[static_cast<std::size_t>(p)].inverse();
  for (int j = 0; j < n; ++j)
    t(static_cast<std::size_t>(j), static_cast<std::size_t>(p)) =
        j == p ? inv : -alpha[static_cast<std::size_t>(j)] * inv;
  Multivector in_f = pushforward(t, psi);
  std::vector<int> keep;
  for (int j = 1; j <= n; ++j)
    if (j != p + 1) keep.push_back(j);
  Splitting out;
  out.dropped_index = p + 1;
  out.omega = restrict_to(in_f, keep);
  // rho ^ f^p: collect terms containing p, move f^p to the end
  Multivector rho_full(n, psi.grade() - 1, psi.variance());
  const Mask pb = Mask{1} << p;
  for (const auto& [m, c] : in_f.terms()) {
    if (!(m & pb)) continue;
    Mask r = m & ~pb;
    rho_full.add(r, wedge_sign(r, pb) > 0 ? c : -c);
  }
  out.rho = restrict_to(rho_full, keep);
  return out;
}

}  // namespace cocal

#endif  // COCAL_EXTERIOR_HPP
