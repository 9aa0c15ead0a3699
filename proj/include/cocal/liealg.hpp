#ifndef COCAL_LIEALG_HPP
#define COCAL_LIEALG_HPP

// Lie algebras by structure constants, the Chevalley-Eilenberg differential,
// codimension-one Abelian ideals and the isomorphism test for semidirect
// products F^6 x| F.

#include <cocal/exterior.hpp>
#include <cocal/matrix.hpp>
#include <cocal/polynomial.hpp>
#include <cocal/roots.hpp>
#include <cocal/smith.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocal {

class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim, Field field = Field::rational)
      : dim_(dim), field_(field), c_(static_cast<std::size_t>(dim * dim), Vector(static_cast<std::size_t>(dim))) {
    if (dim < 1 || dim > 31) throw std::invalid_argument("Lie algebra dimension out of range");
  }

  int dim() const { return dim_; }
  Field field() const { return field_; }
  void set_field(Field f) { field_ = f; }

  /// Sets [e_i, e_j] = v (0-based, i != j); [e_j, e_i] = -v is synthesized.
  void set_bracket(int i, int j, const Vector& v) {
    if (i == j) throw std::invalid_argument("bracket of a basis vector with itself");
    if (v.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("bracket vector has wrong length");
    at(i, j) = v;
    Vector neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    at(j, i) = std::move(neg);
  }
  const Vector& bracket_basis(int i, int j) const {
    return c_[static_cast<std::size_t>(i * dim_ + j)];
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (i == j || y[static_cast<std::size_t>(j)].is_zero()) continue;
        Scalar f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        const Vector& b = bracket_basis(i, j);
        for (int k = 0; k < dim_; ++k)
          if (!b[static_cast<std::size_t>(k)].is_zero()) out[static_cast<std::size_t>(k)] += f * b[static_cast<std::size_t>(k)];
      }
    }
    return out;
  }

  /// Matrix of ad(x).
  Matrix ad(const Vector& x) const {
    std::vector<Vector> cols;
    for (int j = 0; j < dim_; ++j) cols.push_back(bracket(x, unit(j)));
    return Matrix::from_columns(cols);
  }

  bool is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Vector& v) {
      return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    });
  }

  Vector unit(int i) const {
    Vector v(static_cast<std::size_t>(dim_));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  Vector& at(int i, int j) { return c_[static_cast<std::size_t>(i * dim_ + j)]; }

  int dim_ = 0;
  Field field_ = Field::rational;
  std::vector<Vector> c_;  // c_[i*dim + j] = [e_i, e_j]
};

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;
  std::vector<int> triple;  // 1-based indices of the first Jacobi violation
};

inline ValidationResult validate(const LieAlgebra& g) {
  ValidationResult r;
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector& a = g.bracket_basis(i, j);
      const Vector& b = g.bracket_basis(j, i);
      for (int k = 0; k < n; ++k)
        if (a[static_cast<std::size_t>(k)] != -b[static_cast<std::size_t>(k)] || (i == j && !a[static_cast<std::size_t>(k)].is_zero())) {
          r.ok = false;
          r.triple = {i + 1, j + 1};
          r.diagnostic = "antisymmetry fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          return r;
        }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector ei = g.unit(i), ej = g.unit(j), ek = g.unit(k);
        Vector s = g.bracket(g.bracket(ei, ej), ek);
        Vector t = g.bracket(g.bracket(ej, ek), ei);
        Vector u = g.bracket(g.bracket(ek, ei), ej);
        for (std::size_t m = 0; m < s.size(); ++m)
          if (!(s[m] + t[m] + u[m]).is_zero()) {
            r.ok = false;
            r.triple = {i + 1, j + 1, k + 1};
            r.diagnostic = "Jacobi identity fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "," + std::to_string(k + 1) + ")";
            return r;
          }
      }
  return r;
}

/// Chevalley-Eilenberg differential, (d alpha)(X, Y) = -alpha([X, Y]) on
/// one-forms, extended as an antiderivation.
inline Multivector ce_differential(const LieAlgebra& g, const Multivector& rho) {
  const int n = g.dim();
  if (rho.dim() != n || rho.variance() != Variance::form) throw std::invalid_argument("ce_differential: need a form on g");
  if (rho.grade() == n) return Multivector(n, n, Variance::form);
  // d e^m = -sum_{i<j} c_ij^m e^{ij}
  std::vector<Multivector> de;
  for (int m = 0; m < n; ++m) {
    Multivector d(n, 2, Variance::form);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Scalar& c = g.bracket_basis(i, j)[static_cast<std::size_t>(m)];
        if (!c.is_zero()) d.add((Mask{1} << i) | (Mask{1} << j), -c);
      }
    de.push_back(std::move(d));
  }
  Multivector out(n, rho.grade() + 1, Variance::form);
  for (const auto& [mask, c] : rho.terms()) {
    auto idx = indices_of(mask);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      Multivector t = Multivector::scalar(n, Variance::form, (p % 2) ? -c : c);
      for (std::size_t q = 0; q < idx.size(); ++q)
        t = wedge(t, q == p ? de[static_cast<std::size_t>(idx[q] - 1)] : Multivector::basis(n, {idx[q]}, Variance::form));
      out += t;
    }
  }
  return out;
}

/// Semidirect product F^6 x|_F F e_7: [e_7, v] = F v, [u, u] = 0.
inline LieAlgebra from_matrix(const Matrix& f, Field field = Field::rational) {
  if (!f.is_square()) throw std::invalid_argument("from_matrix: square matrix required");
  const int m = static_cast<int>(f.rows());
  LieAlgebra g(m + 1, field);
  for (int j = 0; j < m; ++j) {
    Vector v(static_cast<std::size_t>(m + 1));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    g.set_bracket(m, j, v);
  }
  return g;
}

/// Structure constants in a new basis (columns of p).
inline LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change_basis: singular basis");
  const int n = g.dim();
  LieAlgebra h(n, g.field());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      h.set_bracket(a, b, *pinv * g.bracket(p.col(static_cast<std::size_t>(a)), p.col(static_cast<std::size_t>(b))));
  return h;
}

struct CodimOneData {
  std::vector<Vector> ideal_basis;  // spans u
  Vector e7;                        // outside u
  Matrix f;                         // ad(e7)|_u in the ideal basis
  Vector xi;                        // covector with kernel u

  /// Basis (u_1..u_6, e7) as columns.
  Matrix adapted_basis() const {
    auto cols = ideal_basis;
    cols.push_back(e7);
    return Matrix::from_columns(cols);
  }
};

namespace detail {

inline bool kernel_is_abelian(const LieAlgebra& g, const std::vector<Vector>& k) {
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b) {
      Vector br = g.bracket(k[a], k[b]);
      if (!std::all_of(br.begin(), br.end(), [](const Scalar& s) { return s.is_zero(); })) return false;
    }
  return true;
}

inline CodimOneData make_codim_one(const LieAlgebra& g, const Vector& xi) {
  const int n = g.dim();
  CodimOneData d;
  d.xi = xi;
  d.ideal_basis = kernel_basis(Matrix::from_rows({xi}));
  int k = -1;
  for (int i = n - 1; i >= 0; --i)
    if (!xi[static_cast<std::size_t>(i)].is_zero()) {
      k = i;
      break;
    }
  d.e7 = g.unit(k);
  // for xi = c e^k the kernel basis is the remaining unit vectors
  Matrix u = Matrix::from_columns(d.ideal_basis);
  std::vector<Vector> cols;
  for (const auto& b : d.ideal_basis) {
    auto x = solve(u, g.bracket(d.e7, b));
    if (!x) throw std::logic_error("hyperplane is not an ideal");
    cols.push_back(*x);
  }
  d.f = Matrix::from_columns(cols);
  return d;
}

}  // namespace detail

/// Searches for a hyperplane u with [g,g] in u and [u,u] = 0.
/// Candidates: unit covectors (last index first), then the covectors of a
/// basis of Ann([g,g]), then a projective grid with coordinates in {-2..2}
/// over that basis. Every candidate is verified exactly.
inline std::optional<CodimOneData> find_codim1_abelian_ideal(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Vector> derived;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) derived.push_back(g.bracket_basis(i, j));
  std::vector<Vector> ann;
  Matrix dm = Matrix::from_rows(derived.empty() ? std::vector<Vector>{Vector(static_cast<std::size_t>(n))} : derived);
  if (rank(dm) >= static_cast<std::size_t>(n)) return std::nullopt;
  ann = kernel_basis(dm);

  auto try_xi = [&](const Vector& xi) -> std::optional<CodimOneData> {
    auto k = kernel_basis(Matrix::from_rows({xi}));
    if (!detail::kernel_is_abelian(g, k)) return std::nullopt;
    return detail::make_codim_one(g, xi);
  };
  auto annihilates = [&](const Vector& xi) {
    for (const auto& d : derived) {
      Scalar s;
      for (std::size_t i = 0; i < xi.size(); ++i) s += xi[i] * d[i];
      if (!s.is_zero()) return false;
    }
    return true;
  };

  for (int k = n - 1; k >= 0; --k) {
    Vector e = g.unit(k);
    if (annihilates(e))
      if (auto r = try_xi(e)) return r;
  }
  for (const auto& a : ann)
    if (auto r = try_xi(a)) return r;
  if (ann.size() <= 1) return std::nullopt;

  // projective grid: first nonzero coefficient positive
  const std::size_t d = ann.size();
  std::vector<int> c(d, -2);
  for (;;) {
    std::size_t first = 0;
    while (first < d && c[first] == 0) ++first;
    if (first < d && c[first] > 0) {
      Vector xi(static_cast<std::size_t>(n));
      for (std::size_t a = 0; a < d; ++a)
        for (int i = 0; i < n; ++i) xi[static_cast<std::size_t>(i)] += Scalar(c[a]) * ann[a][static_cast<std::size_t>(i)];
      if (auto r = try_xi(xi)) return r;
    }
    std::size_t p = 0;
    while (p < d && c[p] == 2) c[p++] = -2;
    if (p == d) break;
    ++c[p];
  }
  return std::nullopt;
}

/// Jordan block sizes (descending) of a nilpotent matrix; nullopt otherwise.
inline std::optional<std::vector<int>> nilpotent_partition(const Matrix& f) {
  const std::size_t n = f.rows();
  if (!f.pow(static_cast<unsigned>(n)).is_zero()) return std::nullopt;
  std::vector<std::size_t> r;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    r.push_back(rank(p));
    p = p * f;
  }
  std::vector<int> parts;
  for (std::size_t k = n; k >= 1; --k) {
    long cnt = static_cast<long>(r[k - 1]) - 2 * static_cast<long>(r[k]) + static_cast<long>(r[k + 1]);
    for (long c = 0; c < cnt; ++c) parts.push_back(static_cast<int>(k));
  }
  return parts;
}

struct IsoResult {
  bool isomorphic = false;
  bool exact = true;
  std::optional<Scalar> gamma;  // witness with F ~ gamma F'
};

/// Is there gamma != 0 with F similar to gamma F'?
inline IsoResult iso_test_matrices(const Matrix& f, const Matrix& f2, Field field = Field::rational,
                                   double cluster_tol = kDefaultClusterTol) {
  if (!f.is_square() || !f2.is_square() || f.rows() != f2.rows())
    throw std::invalid_argument("iso_test: matrices of equal square size required");
  IsoResult r;
  if (f.is_zero() || f2.is_zero()) {
    r.isomorphic = f.is_zero() && f2.is_zero();
    if (r.isomorphic) r.gamma = Scalar(1);
    return r;
  }
  auto p1 = nilpotent_partition(f), p2 = nilpotent_partition(f2);
  if (p1 || p2) {
    r.isomorphic = p1 && p2 && *p1 == *p2;
    if (r.isomorphic) r.gamma = Scalar(1);
    return r;
  }
  auto acceptable = [&](const Scalar& g) {
    return !g.is_zero() && (field == Field::gaussian_rational || g.is_real());
  };
  RootSet s1 = roots(char_poly(f), cluster_tol), s2 = roots(char_poly(f2), cluster_tol);
  const Root* mu = nullptr;
  for (const auto& x : s1.roots)
    if (std::abs(x.approx) > cluster_tol && (!mu || (x.exact && !mu->exact))) mu = &x;
  for (const auto& nu : s2.roots) {
    if (std::abs(nu.approx) <= cluster_tol) continue;
    std::optional<Scalar> gamma;
    if (mu->exact && nu.exact) {
      gamma = *mu->exact / *nu.exact;
    } else {
      std::complex<double> q = mu->approx / nu.approx;
      Scalar cand(rational_approx(q.real(), 1000000), rational_approx(q.imag(), 1000000));
      gamma = cand;
    }
    if (acceptable(*gamma) && similar(f, f2 * *gamma)) {
      r.isomorphic = true;
      r.gamma = gamma;
      return r;
    }
  }
  // a negative answer from numeric spectra is advisory only
  r.exact = s1.exact && s2.exact;
  return r;
}

inline IsoResult iso_test(const LieAlgebra& g, const LieAlgebra& h) {
  auto a = find_codim1_abelian_ideal(g);
  auto b = find_codim1_abelian_ideal(h);
  if (!a || !b) throw std::invalid_argument("iso_test: missing codimension-one Abelian ideal");
  Field field = (g.field() == Field::gaussian_rational || h.field() == Field::gaussian_rational)
                    ? Field::gaussian_rational
                    : Field::rational;
  return iso_test_matrices(a->f, b->f, field);
}

}  // namespace cocal

#endif  // COCAL_LIEALG_HPP
