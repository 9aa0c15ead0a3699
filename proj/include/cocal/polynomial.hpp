#ifndef COCAL_POLYNOMIAL_HPP
#define COCAL_POLYNOMIAL_HPP

#include <cocal/matrix.hpp>
#include <cocal/scalar.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocal {

/// Univariate polynomial over Q(i), coefficients lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }
  static Polynomial x() { return Polynomial({0, 1}); }
  /// (x - r)
  static Polynomial linear(const Scalar& r) { return Polynomial({-r, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  const Scalar& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    std::vector<Scalar> out = c_;
    for (auto& s : out) s *= inv;
    return Polynomial(std::move(out));
  }

  Scalar eval(const Scalar& v) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> out = p.c_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }
  Polynomial operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quot(c_.size() - d.c_.size() + 1);
    Scalar inv = d.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
      Scalar f = rem[k + d.c_.size() - 1] * inv;
      quot[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].str() + ")";
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

inline Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// det(xI - m), via Faddeev-LeVerrier (exact in characteristic zero).
inline Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::identity(n);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = m * mk;
    Scalar ck = -am.trace() / Scalar(static_cast<long>(k));
    c[n - k] = ck;
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return Polynomial(std::move(c));
}

/// p(m) by Horner's rule.
inline Matrix eval_matrix(const Polynomial& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

}  // namespace cocal

#endif  // COCAL_POLYNOMIAL_HPP
