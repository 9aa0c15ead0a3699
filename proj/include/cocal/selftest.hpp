#ifndef COCAL_SELFTEST_HPP
#define COCAL_SELFTEST_HPP

// Seeded property suites runnable from the command line. Each suite returns
// the first counterexample it meets.

#include <cocal/certificate.hpp>
#include <cocal/corpus.hpp>
#include <cocal/g2forms.hpp>
#include <cocal/io.hpp>
#include <cocal/jordan.hpp>
#include <cocal/liealg.hpp>
#include <cocal/oracle.hpp>
#include <cocal/random.hpp>
#include <cocal/report.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cocal {

struct SuiteResult {
  std::string name;
  int cases = 0;
  std::optional<std::string> counterexample;
  double seconds = 0;
};

struct SelftestSummary {
  std::vector<SuiteResult> suites;
  bool ok() const {
    for (const auto& s : suites)
      if (s.counterexample) return false;
    return true;
  }
};

namespace selftest {

using Failure = std::optional<std::string>;

inline Matrix split_gram() { return Matrix::diagonal({-1, -1, -1, -1, 1, 1, 1}); }

inline Failure fixtures(int& cases) {
  for (const auto& row : nilpotent_manifest()) {
    ++cases;
    Matrix f = nilpotent_model(row.partition);
    OracleDecision o = oracle_decide(f);
    if (decide_g2(f) != row.g2 || decide_g2star(f).value != row.g2star || o.g2 != row.g2 || o.g2star != row.g2star)
      return "nilpotent partition " + partition_name(row.partition);
  }
  ++cases;
  if (induced_bilinear(standard_three_form(Kind::G2)) != Matrix::identity(7)) return "G2 gram";
  ++cases;
  if (induced_bilinear(standard_three_form(Kind::G2STAR)) != split_gram()) return "G2* gram";
  for (Kind k : {Kind::G2, Kind::G2STAR}) {
    ++cases;
    auto star = hodge_star(standard_three_form(k), standard_three_form(k));
    if (!star || *star != standard_hodge_dual(k)) return "Hodge dual of the standard " + to_string(k) + " form";
  }
  for (const Matrix& g : {Matrix::identity(7), split_gram()})
    for (int deg = 0; deg <= 7; ++deg)
      for (Mask m : masks_of_grade(7, deg)) {
        ++cases;
        Multivector b(7, deg, Variance::form);
        b.add(m, 1);
        if (hodge_star(hodge_star(b, g, standard_volume7()), g, standard_volume7()) != b)
          return "** != id on " + b.str();
      }
  ++cases;
  if (null_transport() != compute_null_transport()) return "frozen null transport constant is stale";
  ++cases;
  if (!verify_certificate(build_certificate(Matrix(6, 6), Kind::G2), Matrix(6, 6)).ok()) return "F = 0 certificate";
  return std::nullopt;
}

inline Failure d_squared(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    LieAlgebra g = change_basis(from_matrix(rng.int_matrix(6, 6, -2, 2)), rng.invertible(7, -1, 1));
    Multivector rho = rng.multivector(7, 1 + static_cast<int>(rng.index(4)), Variance::form, 0.2);
    if (!ce_differential(g, ce_differential(g, rho)).is_zero()) return "d d rho != 0 for rho = " + rho.str();
  }
  return std::nullopt;
}

inline Failure d_matches_action(Rng& rng, int trials, int& cases) {
  const std::vector<int> at = {1, 2, 3, 4, 5, 6};
  for (int t = 0; t < trials; ++t, ++cases) {
    Matrix f = rng.int_matrix(6, 6, -2, 2);
    Multivector rho = rng.multivector(6, 1 + static_cast<int>(rng.index(5)), Variance::form, 0.4);
    Multivector lhs = ce_differential(from_matrix(f), embed(rho, 7, at));
    if (lhs != wedge(e7_form(), embed(derivation_action(f, rho), 7, at)))
      return "d rho != e^7 ^ F.rho for F = " + f.str() + ", rho = " + rho.str();
  }
  return std::nullopt;
}

inline Failure gcp_lengths(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    Multivector x = rng.multivector(6, 2, Variance::vector, 0.3);
    Matrix p = rng.invertible(6, -2, 2);
    if (length_grade2(pushforward(p, x)) != length_grade2(x)) return "GL length change for " + x.str();
    if (length_cograde2(dual_iso(x, standard_volume(6, Variance::form)), standard_volume(6, Variance::vector)) !=
        length_grade2(x))
      return "dual length differs for " + x.str();
  }
  return std::nullopt;
}

inline Failure decision_invariance(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    Matrix f = random_conjugated_model(rng);
    Matrix p = rng.invertible(6);
    Scalar gamma = rng.nonzero_rational(3, 3);
    const bool a = decide_g2(f), b = decide_g2star(f).value;
    for (const Matrix& g : {Matrix(p * f * *inverse(p)), Matrix(f * gamma)})
      if (decide_g2(g) != a || decide_g2star(g).value != b) return "decisions change on a move of F = " + f.str();
  }
  return std::nullopt;
}

inline Failure oracle_agreement(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    Matrix f = random_conjugated_model(rng);
    OracleDecision o = oracle_decide(f);
    if (o.g2 != decide_g2(f) || o.g2star != decide_g2star(f).value) return "oracle disagrees on F = " + f.str();
    if (invariant_symplectic_form(f).has_value() != o.g2) return "symplectic form mismatch on F = " + f.str();
  }
  return std::nullopt;
}

inline Failure null_law(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t) {
    Vector alpha = rng.rational_vector(7, 2, 2);
    if (t % 2) {
      // null by construction: r(a_1..a_4) on S^3, r(b_1..b_3) on S^2
      Vector a = rng.sphere_point(3), b = rng.sphere_point(2);
      Scalar r = rng.nonzero_rational(3, 2);
      alpha.clear();
      for (const auto& x : a) alpha.push_back(r * x);
      for (const auto& x : b) alpha.push_back(r * x);
    }
    if (std::all_of(alpha.begin(), alpha.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
    ++cases;
    Scalar norm;
    for (std::size_t i = 0; i < 7; ++i) norm += split_gram()(i, i) * alpha[i] * alpha[i];
    int l = length_cograde2(split_along(standard_hodge_dual(Kind::G2STAR), alpha).omega);
    if (l != (norm.is_zero() ? 2 : 3)) return "null-direction law fails";
    if (length_cograde2(split_along(standard_hodge_dual(Kind::G2), alpha).omega) != 3) return "compact law fails";
  }
  return std::nullopt;
}

inline Failure certificates(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t) {
    Matrix f = random_conjugated_model(rng);
    OracleDecision o = oracle_decide(f);
    for (Kind k : {Kind::G2, Kind::G2STAR}) {
      if (!(k == Kind::G2 ? o.g2 : o.g2star)) continue;
      ++cases;
      VerifyReport r = verify_certificate(build_certificate(f, k), f);
      if (!r.ok()) return "certificate " + to_string(k) + " fails " + r.failed[0].name + " for F = " + f.str();
    }
  }
  return std::nullopt;
}

inline Failure iso_moves(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    Matrix f = random_conjugated_model(rng);
    Matrix p = rng.invertible(6);
    Matrix g = p * f * *inverse(p) * rng.nonzero_rational(3, 3);
    if (!iso_test(from_matrix(f), from_matrix(g)).isomorphic) return "iso_test misses a move of F = " + f.str();
  }
  return std::nullopt;
}

inline Failure round_trips(Rng& rng, int trials, int& cases) {
  for (int t = 0; t < trials; ++t, ++cases) {
    Multivector x = rng.multivector(7, static_cast<int>(rng.index(8)), rng.coin() ? Variance::form : Variance::vector);
    if (form_from_json(parse_json_text(to_json(x).dump())) != x) return "form round trip " + x.str();
    MatrixRecord m{Field::rational, rng.rational_matrix(6)};
    if (matrix_from_json(parse_json_text(to_json(m).dump())) != m) return "matrix round trip";
    LieAlgebra g = change_basis(from_matrix(m.m), rng.invertible(7, -1, 1));
    if (lie_from_json(parse_json_text(to_json(g).dump())) != g) return "Lie algebra round trip";
    DecisionReport r = decide_matrix(m.m, Field::rational, {{}, false});
    if (report_from_json(parse_json_text(to_json(r).dump())) != r) return "report round trip";
  }
  return std::nullopt;
}

}  // namespace selftest

inline SelftestSummary run_selftest(std::uint64_t seed, int trials) {
  using Suite = std::function<selftest::Failure(Rng&, int, int&)>;
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"fixtures", [](Rng&, int, int& c) { return selftest::fixtures(c); }},
      {"d_squared", selftest::d_squared},
      {"d_matches_derivation_action", selftest::d_matches_action},
      {"gcp_and_dual_lengths", selftest::gcp_lengths},
      {"decision_invariance", selftest::decision_invariance},
      {"oracle_agreement", selftest::oracle_agreement},
      {"null_direction_law", selftest::null_law},
      {"certificates", selftest::certificates},
      {"iso_moves", selftest::iso_moves},
      {"file_round_trips", selftest::round_trips},
  };
  SelftestSummary out;
  std::uint64_t k = 0;
  for (const auto& [name, run] : suites) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * ++k);
    SuiteResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.counterexample = run(rng, trials, r.cases);
    } catch (const std::exception& e) {
      r.counterexample = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.suites.push_back(std::move(r));
  }
  return out;
}

}  // namespace cocal

#endif  // COCAL_SELFTEST_HPP
