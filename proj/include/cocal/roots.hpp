#ifndef COCAL_ROOTS_HPP
#define COCAL_ROOTS_HPP

// Root extraction for polynomials over Q(i).
//
// Roots are produced exactly whenever the polynomial splits over Q(i):
// square-free parts are located numerically, each approximate root is
// rationalized and then confirmed by exact evaluation, and a residual
// quadratic is solved with an exact square root when one exists. Anything
// left over is reported numerically with exact = false.

#include <cocal/polynomial.hpp>
#include <cocal/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace cocal {

inline constexpr double kDefaultClusterTol = 1e-7;
inline constexpr double kDefaultRankTol = 1e-9;

struct Root {
  std::optional<Scalar> exact;  // set iff the root was verified exactly
  std::complex<double> approx;
  std::size_t multiplicity = 0;
};

struct RootSet {
  std::vector<Root> roots;
  bool exact = true;

  std::size_t total_multiplicity() const {
    std::size_t s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
  }
};

/// Yun's square-free decomposition: p = c * prod_i a_i^i with each a_i
/// square-free and pairwise coprime. Entry k of the result is a_{k+1}.
inline std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a0 = gcd(f, df);
  Polynomial b = f / a0;
  Polynomial c = df / a0;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial a = gcd(b, d);
    out.push_back(a);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  // drop trailing constant factors
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// Simultaneous (Aberth-Ehrlich) iteration on a polynomial with complex
/// coefficients; returns deg p approximate roots.
inline std::vector<std::complex<long double>> numeric_roots(const Polynomial& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<C> roots;
  if (n <= 0) return roots;
  std::vector<C> a(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Scalar& s = p.coeffs()[static_cast<std::size_t>(k)];
    a[static_cast<std::size_t>(k)] = C(s.re().get_d(), s.im().get_d());
  }
  const C lead = a[static_cast<std::size_t>(n)];
  for (auto& x : a) x /= lead;
  if (n == 1) return {-a[0]};

  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
  bound += 1;
  roots.resize(static_cast<std::size_t>(n));
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < n; ++k) {
    long double ang = 2 * pi * k / n + 0.4L;
    roots[static_cast<std::size_t>(k)] = std::polar(bound * 0.5L, ang);
  }
  auto eval = [&](C z, C& dp) {
    C v = a[static_cast<std::size_t>(n)];
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + v;
      v = v * z + a[static_cast<std::size_t>(k)];
    }
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double maxstep = 0;
    for (int i = 0; i < n; ++i) {
      auto& z = roots[static_cast<std::size_t>(i)];
      C dp;
      C v = eval(z, dp);
      if (v == C(0)) continue;
      C ratio = v / dp;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z - roots[static_cast<std::size_t>(j)]);
      C step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z -= step;
      maxstep = std::max(maxstep, std::abs(step) / (1 + std::abs(z)));
    }
    if (maxstep < 1e-18L) break;
  }
  return roots;
}

namespace detail {

inline std::optional<Scalar> rationalize_root(const Polynomial& p, std::complex<long double> z) {
  const long dens[] = {1000L, 1000000L, 100000000L};
  for (long md : dens) {
    mpq_class re = std::abs(z.real()) < 1e-12L ? mpq_class(0)
                                                : rational_approx(static_cast<double>(z.real()), md);
    mpq_class im = std::abs(z.imag()) < 1e-12L ? mpq_class(0)
                                                : rational_approx(static_cast<double>(z.imag()), md);
    Scalar cand(re, im);
    if (p.eval(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

/// Exact roots of a square-free polynomial; residual factor returned when
/// the polynomial does not split over Q(i).
inline std::pair<std::vector<Scalar>, Polynomial> exact_roots_squarefree(Polynomial q) {
  std::vector<Scalar> found;
  for (const auto& z : numeric_roots(q)) {
    if (q.degree() <= 0) break;
    if (auto r = rationalize_root(q, z)) {
      found.push_back(*r);
      q = q / Polynomial::linear(*r);
    }
  }
  if (q.degree() == 1) {
    found.push_back(-q.coeff(0) / q.coeff(1));
    q = Polynomial::constant(1);
  } else if (q.degree() == 2) {
    const Scalar& a = q.coeff(2);
    const Scalar& b = q.coeff(1);
    const Scalar& c = q.coeff(0);
    if (auto s = gaussian_sqrt(b * b - Scalar(4) * a * c)) {
      found.push_back((-b + *s) / (Scalar(2) * a));
      found.push_back((-b - *s) / (Scalar(2) * a));
      q = Polynomial::constant(1);
    }
  }
  return {std::move(found), q.monic()};
}

}  // namespace detail

/// Roots with multiplicities. Exact when the polynomial splits over Q(i);
/// otherwise numeric, clustered at the given tolerance, with exact = false.
inline RootSet roots(const Polynomial& p, double cluster_tol = kDefaultClusterTol) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  RootSet out;
  auto parts = squarefree_decomposition(p);
  std::vector<Root> numeric;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::size_t mult = k + 1;
    if (parts[k].degree() <= 0) continue;
    auto [exact, rest] = detail::exact_roots_squarefree(parts[k]);
    for (auto& r : exact) out.roots.push_back({r, r.to_complex(), mult});
    if (rest.degree() > 0) {
      out.exact = false;
      for (const auto& z : numeric_roots(rest))
        numeric.push_back({std::nullopt,
                           {static_cast<double>(z.real()), static_cast<double>(z.imag())},
                           mult});
    }
  }
  // merge numeric roots closer than the tolerance
  std::vector<Root> merged;
  for (auto& r : numeric) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Root& m) {
      return std::abs(m.approx - r.approx) < cluster_tol;
    });
    if (it == merged.end())
      merged.push_back(r);
    else
      it->multiplicity += r.multiplicity;
  }
  for (auto& r : merged) out.roots.push_back(std::move(r));
  std::stable_sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.exact && b.exact) return lex_less(*a.exact, *b.exact);
    if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
    return a.approx.imag() < b.approx.imag();
  });
  return out;
}

}  // namespace cocal

#endif  // COCAL_ROOTS_HPP
