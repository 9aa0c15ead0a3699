#ifndef COCAL_SCALAR_HPP
#define COCAL_SCALAR_HPP

// Exact scalars over Q and Q(i).
//
// A Scalar always carries a real and an imaginary rational part; in rational
// field mode the imaginary part is simply zero. Equality is exact.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cocal {

enum class Field { rational, gaussian_rational };

inline std::string to_string(Field f) {
  return f == Field::rational ? "rational" : "gaussian_rational";
}

inline Field parse_field(std::string_view s) {
  if (s == "rational") return Field::rational;
  if (s == "gaussian_rational") return Field::gaussian_rational;
  throw std::invalid_argument("unknown field '" + std::string(s) + "'");
}

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Scalar frac(long num, long den) { return Scalar(mpq_class(num, den)); }
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.is_real() && is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (real part first, then imaginary part); used only for
  /// deterministic sorting, not as a field order.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Rational sign of a real scalar; throws if the scalar is not real.
  int real_sign() const {
    if (!is_real()) throw std::domain_error("sign of non-real scalar");
    return sgn(re_);
  }

  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

namespace detail {

inline std::string rational_str(const mpq_class& q) {
  // "p/q" with q > 0 and gcd(p,q) = 1; integers still carry "/1".
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string str(s);
  auto slash = str.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(str, 10));
    } else {
      mpz_class num(str.substr(0, slash), 10);
      mpz_class den(str.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + str + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace detail

inline std::string Scalar::str() const {
  if (is_real()) return detail::rational_str(re_);
  std::string out = detail::rational_str(re_);
  out += sgn(im_) < 0 ? "-" : "+";
  out += detail::rational_str(abs(im_));
  out += "*i";
  return out;
}

/// Parses "p/q", "p", "p/q+r/s*i", "p/q-r/s*i", "r/s*i" and "i".
inline Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(detail::parse_rational(s));

  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  // find the split between real and imaginary parts: last +/- not at start
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = (body[k] == '-' && body[k - 1] == '+') ? k - 1 : k;
      break;
    }
  }
  auto parse_im = [](std::string t) -> mpq_class {
    if (t.empty() || t == "+") return mpq_class(1);
    if (t == "-") return mpq_class(-1);
    if (t.front() == '+') t.erase(0, 1);
    if (t == "-") return mpq_class(-1);
    return detail::parse_rational(t);
  };
  if (split == std::string::npos) return {mpq_class(0), parse_im(body)};
  return {detail::parse_rational(body.substr(0, split)), parse_im(body.substr(split))};
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Exact square root in Q, if it exists.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return mpq_class(0);
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

/// Exact square root in Q(i), decided by norm tests: sqrt(a+bi) = x+yi with
/// x^2 = (|z|+a)/2 and y^2 = (|z|-a)/2, where |z| must itself be rational.
inline std::optional<Scalar> gaussian_sqrt(const Scalar& z) {
  if (z.is_zero()) return Scalar(0);
  auto n = rational_sqrt(z.norm());
  if (!n) return std::nullopt;
  auto x = rational_sqrt((*n + z.re()) / 2);
  auto y = rational_sqrt((*n - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = *y;
  if (sgn(*x) != 0) {
    yy = z.im() / (2 * *x);
  }
  Scalar r(*x, yy);
  if (r * r != z) return std::nullopt;
  return r;
}

/// Best rational approximation with bounded denominator (continued fractions).
inline mpq_class rational_approx(double v, long max_den) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value");
  long sign = v < 0 ? -1 : 1;
  double x = std::abs(v);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    mpz_class ai(a);
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return mpq_class(0);
  mpq_class r(p1 * sign, q1);
  r.canonicalize();
  return r;
}

}  // namespace cocal

#endif  // COCAL_SCALAR_HPP
