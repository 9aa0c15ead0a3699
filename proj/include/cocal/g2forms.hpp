#ifndef COCAL_G2FORMS_HPP
#define COCAL_G2FORMS_HPP

// Standard G2, split G2 and complex G2 forms, the bilinear form a three-form
// induces, recognition by signature, and Hodge stars.

#include <cocal/exterior.hpp>
#include <cocal/matrix.hpp>
#include <cocal/numeric.hpp>
#include <cocal/scalar.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocal {

enum class Kind { G2, G2STAR, G2C };
enum class FormClass { G2, G2STAR, G2C, NONE };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::G2: return "G2";
    case Kind::G2STAR: return "G2STAR";
    case Kind::G2C: return "G2C";
  }
  return "?";
}
inline std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::G2: return "G2";
    case FormClass::G2STAR: return "G2STAR";
    case FormClass::G2C: return "G2C";
    case FormClass::NONE: return "NONE";
  }
  return "?";
}
inline Kind parse_kind(std::string_view s) {
  if (s == "G2" || s == "g2") return Kind::G2;
  if (s == "G2STAR" || s == "g2star" || s == "G2*") return Kind::G2STAR;
  if (s == "G2C" || s == "g2c") return Kind::G2C;
  throw std::invalid_argument("unknown kind '" + std::string(s) + "'");
}

/// Sign in the Hodge dual pattern: +1 for G2 and G2C, -1 for G2STAR.
inline int epsilon_of(Kind k) { return k == Kind::G2STAR ? -1 : 1; }

namespace detail {

inline Multivector form_from_terms(int dim, int grade,
                                   std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  Multivector out(dim, grade, Variance::form);
  for (const auto& [idx, c] : terms) out += Multivector::basis(dim, idx, Variance::form, c);
  return out;
}

}  // namespace detail

inline Multivector standard_three_form(Kind kind) {
  const int s = kind == Kind::G2STAR ? -1 : 1;
  return detail::form_from_terms(7, 3,
                                 {{{1, 2, 7}, s},
                                  {{3, 4, 7}, s},
                                  {{5, 6, 7}, 1},
                                  {{1, 3, 5}, 1},
                                  {{1, 4, 6}, -1},
                                  {{2, 3, 6}, -1},
                                  {{2, 4, 5}, -1}});
}

/// The Hodge dual pattern with a given epsilon.
inline Multivector hodge_dual_pattern(int epsilon) {
  return detail::form_from_terms(7, 4,
                                 {{{1, 2, 5, 6}, epsilon},
                                  {{3, 4, 5, 6}, epsilon},
                                  {{1, 2, 3, 4}, 1},
                                  {{2, 4, 6, 7}, -1},
                                  {{2, 3, 5, 7}, 1},
                                  {{1, 4, 5, 7}, 1},
                                  {{1, 3, 6, 7}, 1}});
}

inline Multivector standard_hodge_dual(Kind kind) { return hodge_dual_pattern(epsilon_of(kind)); }

/// The cross-term three-form on the first six coordinates whose wedge with
/// e^7 completes the pattern: -e^{246} + e^{235} + e^{145} + e^{136}.
inline Multivector hodge_dual_cross_term(int dim = 6) {
  return detail::form_from_terms(dim, 3, {{{2, 4, 6}, -1}, {{2, 3, 5}, 1}, {{1, 4, 5}, 1}, {{1, 3, 6}, 1}});
}

inline Multivector standard_volume7() { return standard_volume(7, Variance::form); }

/// Gram matrix of g with g(v,w) ref_vol = 1/6 (v _| phi) ^ (w _| phi) ^ phi.
inline Matrix induced_bilinear(const Multivector& phi, const Multivector& ref_vol) {
  if (phi.dim() != 7 || phi.grade() != 3 || phi.variance() != Variance::form)
    throw std::invalid_argument("induced_bilinear: need a three-form in dimension 7");
  if (ref_vol.grade() != 7 || ref_vol.is_zero()) throw std::invalid_argument("induced_bilinear: bad volume");
  const Mask full = (Mask{1} << 7) - 1;
  const Scalar denom = Scalar(6) * ref_vol.coeff(full);
  std::vector<Multivector> c;
  for (int i = 1; i <= 7; ++i) c.push_back(contract(Multivector::basis(7, {i}, Variance::vector), phi));
  Matrix g(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) {
      Scalar v = wedge(wedge(c[i], c[j]), phi).coeff(full) / denom;
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

inline Matrix induced_bilinear(const Multivector& phi) { return induced_bilinear(phi, standard_volume7()); }

struct Recognition {
  FormClass kind = FormClass::NONE;
  std::optional<Signature> signature;  // real mode only
  Matrix gram;
};

/// Classifies a three-form on a 7-space by the gram of its induced bilinear
/// form. In real mode the signature decides (up to overall sign); in complex
/// mode nondegeneracy decides.
inline Recognition classify_three_form(const Multivector& phi, Field field = Field::rational) {
  if (phi.dim() != 7 || phi.grade() != 3) throw std::invalid_argument("classify_three_form: need a 3-form on a 7-space");
  Recognition r;
  r.gram = induced_bilinear(phi);
  if (field == Field::gaussian_rational || !r.gram.is_real()) {
    r.kind = determinant(r.gram).is_zero() ? FormClass::NONE : FormClass::G2C;
    return r;
  }
  Signature s = signature(r.gram);
  r.signature = s;
  if (s.zero == 0 && (s.positive == 7 || s.negative == 7))
    r.kind = FormClass::G2;
  else if (s.zero == 0 && ((s.positive == 3 && s.negative == 4) || (s.positive == 4 && s.negative == 3)))
    r.kind = FormClass::G2STAR;
  return r;
}

/// Inner product on k-forms induced by the metric with gram g on vectors:
/// <e^I, e^J> = det(g^{-1}[I, J]).
inline Matrix form_inner_products(const Matrix& g, int grade) {
  auto inv = inverse(g);
  if (!inv) throw std::domain_error("degenerate metric");
  const int n = static_cast<int>(g.rows());
  auto ms = masks_of_grade(n, grade);
  Matrix out(ms.size(), ms.size());
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b) {
      auto ia = indices_of(ms[a]), ib = indices_of(ms[b]);
      Matrix sub(ia.size(), ib.size());
      for (std::size_t r = 0; r < ia.size(); ++r)
        for (std::size_t c = 0; c < ib.size(); ++c)
          sub(r, c) = (*inv)(static_cast<std::size_t>(ia[r] - 1), static_cast<std::size_t>(ib[c] - 1));
      out(a, b) = grade == 0 ? Scalar(1) : determinant(sub);
    }
  return out;
}

/// Hodge star for a metric g (gram on vectors) and metric volume vol:
/// the unique form with psi ^ phi = g(*psi, phi) vol for all phi.
inline Multivector hodge_star(const Multivector& psi, const Matrix& g, const Multivector& vol) {
  const int n = psi.dim();
  if (static_cast<int>(g.rows()) != n || !g.is_square()) throw std::invalid_argument("hodge_star: metric size mismatch");
  if (determinant(g).is_zero()) throw std::domain_error("hodge_star: degenerate metric");
  const int k = n - psi.grade();
  const Mask full = (Mask{1} << n) - 1;
  auto ms = masks_of_grade(n, k);
  Vector rhs(ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    Multivector phi(n, k, Variance::form);
    phi.add(ms[j], 1);
    rhs[j] = wedge(psi, phi).coeff(full) / vol.coeff(full);
  }
  auto x = solve(form_inner_products(g, k), rhs);
  if (!x) throw std::domain_error("hodge_star: singular system");
  return Multivector::from_grade_coords(n, k, Variance::form, *x);
}

/// Exact induced metric and volume of a real three-form, available when
/// |det B| is a ninth power in Q. The metric is lambda * B with
/// |lambda| = |det B|^(-1/9) and vol = ref_vol / lambda.
struct InducedMetric {
  Matrix gram;
  Multivector vol;
};

inline std::optional<mpq_class> rational_root(const mpq_class& q, unsigned k) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), k) == 0) return std::nullopt;
  return mpq_class(num, den);
}

inline std::optional<InducedMetric> induced_metric(const Multivector& phi) {
  Matrix b = induced_bilinear(phi);
  if (!b.is_real()) return std::nullopt;
  Scalar det = determinant(b);
  if (det.is_zero()) return std::nullopt;
  auto root = rational_root(abs(det.re()), 9);
  if (!root) return std::nullopt;
  mpq_class lambda = 1 / *root;
  Signature s = signature(b);
  // G2 metrics are positive definite; split metrics have three positive directions
  bool flip = s.negative == 7 || (s.positive == 4 && s.negative == 3);
  if (flip) lambda = -lambda;
  InducedMetric m{b * Scalar(lambda), standard_volume7() * Scalar(mpq_class(1) / lambda)};
  return m;
}

/// Hodge star of psi for the metric induced by phi; exact when the metric
/// normalization is rational, otherwise nullopt (see hodge_star_numeric).
inline std::optional<Multivector> hodge_star(const Multivector& psi, const Multivector& phi) {
  auto m = induced_metric(phi);
  if (!m) return std::nullopt;
  return hodge_star(psi, m->gram, m->vol);
}

/// Floating-point Hodge star for the metric induced by a real three-form.
inline std::map<Mask, double> hodge_star_numeric(const Multivector& psi, const Multivector& phi) {
  Matrix b = induced_bilinear(phi);
  const double det = determinant(b).re().get_d();
  if (det == 0) throw std::domain_error("hodge_star_numeric: degenerate three-form");
  Signature s = signature(b);
  double lambda = std::pow(std::abs(det), -1.0 / 9.0);
  if (s.negative == 7 || (s.positive == 4 && s.negative == 3)) lambda = -lambda;
  const int n = 7, k = n - psi.grade();
  auto ms = masks_of_grade(n, k);
  Eigen::MatrixXd ginv = (lambda * to_complex(b).real()).inverse();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(ms.size()), static_cast<Eigen::Index>(ms.size()));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(ms.size()));
  const Mask full = (Mask{1} << n) - 1;
  for (std::size_t a = 0; a < ms.size(); ++a) {
    auto ia = indices_of(ms[a]);
    for (std::size_t c = 0; c < ms.size(); ++c) {
      auto ic = indices_of(ms[c]);
      Eigen::MatrixXd sub(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      for (int r = 0; r < k; ++r)
        for (int q = 0; q < k; ++q) sub(r, q) = ginv(ia[static_cast<std::size_t>(r)] - 1, ic[static_cast<std::size_t>(q)] - 1);
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) = k == 0 ? 1.0 : sub.determinant();
    }
    Multivector test(n, k, Variance::form);
    test.add(ms[a], 1);
    rhs(static_cast<Eigen::Index>(a)) = wedge(psi, test).coeff(full).re().get_d() * lambda;
  }
  Eigen::VectorXd x = m.fullPivLu().solve(rhs);
  std::map<Mask, double> out;
  for (std::size_t a = 0; a < ms.size(); ++a)
    if (std::abs(x(static_cast<Eigen::Index>(a))) > 1e-12) out[ms[a]] = x(static_cast<Eigen::Index>(a));
  return out;
}

}  // namespace cocal

#endif  // COCAL_G2FORMS_HPP
