#ifndef COCAL_CERTIFICATE_HPP
#define COCAL_CERTIFICATE_HPP

// Explicit closed four-forms of G2 type on g = u x|_F R e_7, with an adapted
// basis in which they take the standard Hodge-dual shape, and a verifier that
// rechecks everything from scratch.

#include <cocal/exterior.hpp>
#include <cocal/g2forms.hpp>
#include <cocal/liealg.hpp>
#include <cocal/null_transport_data.hpp>
#include <cocal/oracle.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cocal {

struct DecisionFalse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients of a form in the covector basis given by the rows of `rows`.
inline Multivector coefficients_in_basis(const Multivector& form, const Matrix& rows) {
  auto inv = inverse(rows);
  if (!inv) throw std::invalid_argument("coefficients_in_basis: singular basis");
  return pushforward(inv->transpose(), form);
}

/// Inverse of coefficients_in_basis.
inline Multivector expand_in_basis(const Multivector& coeffs, const Matrix& rows) {
  return pushforward(rows.transpose(), coeffs);
}

inline Multivector form6(std::vector<int> idx, Scalar c = 1) { return Multivector::basis(6, idx, Variance::form, c); }

inline Multivector omega_pattern(int eps) {
  return form6({1, 2, 3, 4}) + form6({1, 2, 5, 6}, eps) + form6({3, 4, 5, 6}, eps);
}

namespace detail {

inline Matrix dual_rows_of_symplectic_basis(const Multivector& omega, int expected_length) {
  Multivector x = dual_iso(omega, ideal_dual_volume());
  SymplecticBasis sb = symplectic_basis(x);
  if (sb.length != expected_length) throw std::invalid_argument("normal form: unexpected length");
  return *inverse(Matrix::from_columns(sb.vectors));
}

inline void negate_row(Matrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace detail

struct NormalForm {
  Matrix rows;  // covectors f^1..f^6 in the original coordinates
  Scalar kappa = 1;
};

/// A length-3 four-form on a 6-space as kappa (f^1234 + eps f^1256 + eps f^3456).
inline NormalForm normal_form_length3(const Multivector& omega, int eps) {
  Matrix rows = detail::dual_rows_of_symplectic_basis(omega, 3);
  const Mask m1234 = mask_of({1, 2, 3, 4}), m1256 = mask_of({1, 2, 5, 6}), m3456 = mask_of({3, 4, 5, 6});
  Multivector c = coefficients_in_basis(omega, rows);
  const Scalar want(eps);
  // f^3 -> -f^3 toggles b/a, f^1 -> -f^1 toggles d/a
  if (c.coeff(m1256) / c.coeff(m1234) != want) detail::negate_row(rows, 2);
  if (c.coeff(m3456) / c.coeff(m1234) != want) detail::negate_row(rows, 0);
  c = coefficients_in_basis(omega, rows);
  NormalForm nf{rows, c.coeff(m1234)};
  if (c != omega_pattern(eps) * nf.kappa) throw std::logic_error("normal_form_length3: unexpected coefficients");
  return nf;
}

/// A length-2 four-form on a 6-space as h^1234 + h^1256.
inline Matrix normal_form_length2(const Multivector& omega) {
  Matrix f = detail::dual_rows_of_symplectic_basis(omega, 2);
  Multivector c = coefficients_in_basis(omega, f);
  const Scalar a = c.coeff(mask_of({3, 4, 5, 6})), b = c.coeff(mask_of({1, 2, 5, 6}));
  Matrix h = Matrix::from_rows({f.row(4), f.row(5), f.row(0), f.row(1), f.row(2), f.row(3)});
  for (std::size_t k = 0; k < 6; ++k) {
    h(2, k) *= b;
    h(4, k) *= a;
  }
  if (coefficients_in_basis(omega, h) != form6({1, 2, 3, 4}) + form6({1, 2, 5, 6}))
    throw std::logic_error("normal_form_length2: unexpected coefficients");
  return h;
}

/// Decomposition of the standard split Hodge dual along a null covector:
/// in the covector basis h (rows, standard coordinates) it reads
/// h^1234 + h^1256 + rho ^ h^7 with h^7 = alpha null.
struct NullTransport {
  Vector alpha;
  Matrix h;
  Multivector rho;  // three-form on 6 coordinates

  friend bool operator==(const NullTransport&, const NullTransport&) = default;
};

inline NullTransport compute_null_transport() {
  const Multivector psi = standard_hodge_dual(Kind::G2STAR);
  NullTransport nt;
  nt.alpha = Vector{1, 0, 0, 0, 1, 0, 0};
  Splitting sp = split_along(psi, nt.alpha);
  std::vector<int> keep;
  for (int j = 1; j <= 7; ++j)
    if (j != sp.dropped_index) keep.push_back(j);
  Matrix k = normal_form_length2(sp.omega);
  // the splitting basis is f^j = s^j off the dropped index, f^p = alpha
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < 6; ++r) {
    Vector v(7);
    for (std::size_t c = 0; c < 6; ++c) v[static_cast<std::size_t>(keep[c] - 1)] = k(r, c);
    rows.push_back(v);
  }
  rows.push_back(nt.alpha);
  nt.h = Matrix::from_rows(rows);

  Multivector in_h = coefficients_in_basis(psi, nt.h);
  nt.rho = Multivector(6, 3, Variance::form);
  Multivector rest(6, 4, Variance::form);
  const Mask last = Mask{1} << 6;
  for (const auto& [m, c] : in_h.terms()) {
    if (m & last)
      nt.rho.add(m & ~last, c);
    else
      rest.add(m, c);
  }
  if (rest != form6({1, 2, 3, 4}) + form6({1, 2, 5, 6})) throw std::logic_error("null transport: bad decomposition");
  return nt;
}

inline NullTransport null_transport() {
  NullTransport nt;
  for (const char* s : frozen::kNullAlpha) nt.alpha.push_back(parse_scalar(s));
  std::vector<Vector> rows;
  for (const auto& r : frozen::kNullBasis) {
    Vector v;
    for (const char* s : r) v.push_back(parse_scalar(s));
    rows.push_back(v);
  }
  nt.h = Matrix::from_rows(rows);
  nt.rho = Multivector(6, 3, Variance::form);
  for (const auto& t : frozen::kNullRho) nt.rho.add(mask_of({t.i, t.j, t.k}), parse_scalar(t.coeff));
  return nt;
}

struct Certificate {
  Kind kind = Kind::G2;
  int epsilon = 1;
  std::string path;            // "length3" or "length2"
  Multivector psi;             // four-form on g
  Multivector omega_part;      // four-form on u
  Multivector cross;           // three-form on u, psi = omega_part + cross ^ e^7
  Matrix exhibited_basis;      // rows: adapted covectors in e-coordinates
  std::string scalar_system = "rational";
  Scalar scale = 1;            // always 1: the witness is rescaled instead
  Scalar witness_scale = 1;    // leading coefficient of the raw witness
  std::vector<std::string> checks;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Multivector on_g(const Multivector& x) { return embed(x, 7, {1, 2, 3, 4, 5, 6}); }
inline Multivector e7_form() { return Multivector::basis(7, {7}, Variance::form); }

inline Matrix pad_rows(const Matrix& rows6) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < 6; ++r) {
    Vector v = rows6.row(r);
    v.push_back(0);
    rows.push_back(v);
  }
  Vector e7(7);
  e7[6] = 1;
  rows.push_back(e7);
  return Matrix::from_rows(rows);
}

inline Certificate build_certificate(const Matrix& f, Kind kind) {
  ClosedFourFormSpace space = closed_fourform_space(f);
  FourFormSearch search = max_length_in_space(space);
  const int need = kind == Kind::G2 ? 3 : 2;
  if (search.maxlen < need) throw DecisionFalse("no closed four-form of the required length");

  Certificate cert;
  cert.kind = kind;
  cert.epsilon = epsilon_of(kind);
  const int eps = kind == Kind::G2STAR ? -1 : 1;

  Multivector omega = *search.witness;
  if (search.maxlen == 3 && derivation_action(f, omega_pattern(eps)).is_zero()) omega = omega_pattern(eps);

  Matrix q;
  if (search.maxlen == 3) {
    cert.path = "length3";
    NormalForm nf = normal_form_length3(omega, eps);
    cert.witness_scale = nf.kappa;
    cert.omega_part = omega * nf.kappa.inverse();
    cert.cross = expand_in_basis(hodge_dual_cross_term(), nf.rows);
    q = pad_rows(nf.rows);
  } else {
    cert.path = "length2";
    Matrix rows = normal_form_length2(omega);
    NullTransport nt = null_transport();
    cert.omega_part = omega;
    cert.cross = expand_in_basis(nt.rho, rows);
    q = *inverse(nt.h) * pad_rows(rows);
    if (kind == Kind::G2C) {
      const Scalar mi = -Scalar::i();
      q = Matrix::diagonal({mi, mi, mi, mi, -1, -1, 1}) * q;
    }
  }
  cert.psi = on_g(cert.omega_part) + wedge(on_g(cert.cross), e7_form());
  cert.exhibited_basis = q;
  cert.scalar_system = q.is_real() ? "rational" : "gaussian_rational";
  return cert;
}

struct CheckFailure {
  std::string name;
  std::string message;
};

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<CheckFailure> failed;
  std::optional<Signature> signature;

  bool ok() const { return failed.empty(); }
};

inline Matrix adapted_gram(Kind kind) {
  return kind == Kind::G2STAR ? Matrix::diagonal({-1, -1, -1, -1, 1, 1, 1}) : Matrix::identity(7);
}

inline VerifyReport verify_certificate(const Certificate& cert, const Matrix& f) {
  VerifyReport rep;
  auto check = [&](const std::string& name, bool ok, const std::string& msg) {
    if (ok)
      rep.passed.push_back(name);
    else
      rep.failed.push_back({name, msg});
  };

  check("shape", cert.psi == on_g(cert.omega_part) + wedge(on_g(cert.cross), e7_form()),
        "psi differs from omega_part + cross ^ e^7");
  check("closed", ce_differential(from_matrix(f), cert.psi).is_zero(), "d psi != 0");

  const Matrix& q = cert.exhibited_basis;
  const Scalar det = q.rows() == 7 && q.is_square() ? determinant(q) : Scalar(0);
  if (det.is_zero()) {
    check("pattern", false, "exhibited basis is singular");
    return rep;
  }
  Multivector expected = standard_hodge_dual(cert.kind);
  check("pattern", coefficients_in_basis(cert.psi, q) == expected,
        "psi in the exhibited basis does not match the standard Hodge dual");

  const Multivector phi = expand_in_basis(standard_three_form(cert.kind), q);
  const bool complex = cert.kind == Kind::G2C;
  Recognition r = classify_three_form(phi, complex ? Field::gaussian_rational : Field::rational);
  bool recognized = false;
  if (complex) {
    recognized = r.kind == FormClass::G2C;
  } else {
    // the gram relative to e^{1..7} is det(Q) times the adapted one
    Signature s = signature(r.gram * det.inverse());
    rep.signature = s;
    recognized = cert.kind == Kind::G2 ? (r.kind == FormClass::G2 && s.positive == 7 && s.negative == 0)
                                       : (r.kind == FormClass::G2STAR && s.positive == 3 && s.negative == 4);
  }
  check("recognition", recognized, "companion three-form is classified as " + to_string(r.kind));

  Matrix g = q.transpose() * adapted_gram(cert.kind) * q;
  check("hodge_dual", hodge_star(phi, g, standard_volume7() * det) == cert.psi,
        "psi is not the Hodge dual of the companion three-form");
  return rep;
}

}  // namespace cocal

#endif  // COCAL_CERTIFICATE_HPP
