#ifndef COCAL_ORACLE_HPP
#define COCAL_ORACLE_HPP

// Brute-force decisions from closed four-forms on the Abelian ideal.
//
// For g = F^6 x|_F F e_7 a four-form Omega on u is closed iff F.Omega = 0,
// and g carries a cocalibrated G2 (G2*) structure iff such an Omega of
// length 3 (length >= 2) exists. Lengths are read off the dual 2-vectors.

#include <cocal/exterior.hpp>
#include <cocal/matrix.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cocal {

/// Kernel of rho |-> f.rho on k-forms.
inline std::vector<Multivector> invariant_forms(const Matrix& f, int grade) {
  const int n = static_cast<int>(f.rows());
  auto ms = masks_of_grade(n, grade);
  Matrix a(ms.size(), ms.size());
  for (std::size_t c = 0; c < ms.size(); ++c) {
    Multivector b(n, grade, Variance::form);
    b.add(ms[c], 1);
    Vector col = derivation_action(f, b).to_coords();
    for (std::size_t r = 0; r < ms.size(); ++r) a(r, c) = col[r];
  }
  std::vector<Multivector> out;
  for (const auto& v : kernel_basis(a)) out.push_back(Multivector::from_grade_coords(n, grade, Variance::form, v));
  return out;
}

struct ClosedFourFormSpace {
  std::vector<Multivector> basis;  // four-forms on u
  std::vector<Multivector> duals;  // 2-vectors, dual to basis under e_{1..6}
};

inline Multivector ideal_dual_volume() { return standard_volume(6, Variance::vector); }

inline ClosedFourFormSpace closed_fourform_space(const Matrix& f) {
  if (f.rows() != 6 || !f.is_square()) throw std::invalid_argument("closed_fourform_space: 6x6 matrix required");
  ClosedFourFormSpace s;
  s.basis = invariant_forms(f, 4);
  for (const auto& b : s.basis) s.duals.push_back(dual_iso(b, ideal_dual_volume()));
  return s;
}

struct LengthSearch {
  int maxlen = 0;
  std::vector<Scalar> coefficients;  // witness = sum coefficients[i] * span[i]
};

/// Largest length of an element in the span of the given 2-vectors (or
/// 2-forms), with a witness from a small deterministic grid.
///
/// The cubic c |-> (sum c_i X_i)^3 is nonzero iff one of its polarized
/// coefficients X_i ^ X_j ^ X_k is; likewise for the square. A nonzero
/// polynomial of degree <= 3 in at most three variables does not vanish on
/// all of {0,1,2,3}^3.
inline LengthSearch max_length_in_span(const std::vector<Multivector>& span) {
  LengthSearch out;
  const std::size_t m = span.size();
  if (m == 0) return out;
  const int dim = span[0].dim();
  const int top = dim / 2;

  std::vector<std::size_t> used;
  int found = 1;
  used = {0};
  for (std::size_t i = 0; i < m && span[i].is_zero(); ++i) used = {i + 1};
  if (used[0] >= m) return out;

  // pairs
  for (std::size_t i = 0; i < m && found < 2; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (!wedge(span[i], span[j]).is_zero()) {
        found = 2;
        used = i == j ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, j};
        break;
      }
  if (found == 2 && top >= 3) {
    bool done = false;
    for (std::size_t i = 0; i < m && !done; ++i)
      for (std::size_t j = i; j < m && !done; ++j) {
        Multivector ij = wedge(span[i], span[j]);
        if (ij.is_zero()) continue;
        for (std::size_t k = j; k < m; ++k)
          if (!wedge(ij, span[k]).is_zero()) {
            found = 3;
            used.clear();
            for (std::size_t x : {i, j, k})
              if (std::find(used.begin(), used.end(), x) == used.end()) used.push_back(x);
            done = true;
            break;
          }
      }
  }

  // grid scan over the spanning elements
  const std::size_t u = used.size();
  std::vector<int> c(u, 0);
  for (;;) {
    std::size_t p = 0;
    while (p < u && c[p] == 3) c[p++] = 0;
    if (p == u) break;
    ++c[p];
    Multivector x(dim, 2, span[0].variance());
    for (std::size_t a = 0; a < u; ++a) x += span[used[a]] * Scalar(c[a]);
    if (wedge_power(x, found).is_zero()) continue;
    out.maxlen = found;
    out.coefficients.assign(m, Scalar(0));
    for (std::size_t a = 0; a < u; ++a) out.coefficients[used[a]] = c[a];
    return out;
  }
  throw std::logic_error("max_length_in_span: grid scan failed");
}

struct FourFormSearch {
  int maxlen = 0;
  std::optional<Multivector> witness;  // four-form on u
};

inline FourFormSearch max_length_in_space(const ClosedFourFormSpace& s) {
  FourFormSearch out;
  LengthSearch l = max_length_in_span(s.duals);
  out.maxlen = l.maxlen;
  if (l.maxlen > 0) {
    Multivector w(6, 4, Variance::form);
    for (std::size_t i = 0; i < s.basis.size(); ++i) w += s.basis[i] * l.coefficients[i];
    out.witness = w;
  }
  return out;
}

struct OracleDecision {
  bool g2 = false;
  bool g2star = false;
  int maxlen = 0;
  std::size_t space_dim = 0;
};

inline OracleDecision oracle_decide(const Matrix& f) {
  ClosedFourFormSpace s = closed_fourform_space(f);
  FourFormSearch m = max_length_in_space(s);
  return {m.maxlen == 3, m.maxlen >= 2, m.maxlen, s.basis.size()};
}

/// A nondegenerate 2-form omega with omega(Fx, y) + omega(x, Fy) = 0, if any.
inline std::optional<Multivector> invariant_symplectic_form(const Matrix& f) {
  const int n = static_cast<int>(f.rows());
  if (n % 2 != 0) return std::nullopt;
  auto span = invariant_forms(f, 2);
  if (span.empty()) return std::nullopt;
  LengthSearch l = max_length_in_span(span);
  if (l.maxlen != n / 2) return std::nullopt;
  Multivector w(n, 2, Variance::form);
  for (std::size_t i = 0; i < span.size(); ++i) w += span[i] * l.coefficients[i];
  return w;
}

}  // namespace cocal

#endif  // COCAL_ORACLE_HPP
