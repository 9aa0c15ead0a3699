#ifndef COCAL_REPORT_HPP
#define COCAL_REPORT_HPP

// The full decision pipeline for one input and its report record.

#include <cocal/io.hpp>
#include <cocal/jordan.hpp>
#include <cocal/liealg.hpp>
#include <cocal/oracle.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace cocal {

struct Decisions {
  std::optional<bool> g2, g2star, g2star_nondeg_u;  // absent over Q(i)
  bool g2c = false;
  bool g2c_nondeg_u = false;

  friend bool operator==(const Decisions&, const Decisions&) = default;
};

struct DecisionReport {
  std::string input_digest;
  bool ideal_found = false;
  bool exact = true;
  Field field = Field::rational;
  std::optional<Matrix> f;
  Decisions decisions;
  std::vector<std::pair<std::string, std::string>> methods;
  std::optional<PairPartition> partition;
  std::optional<bool> oracle_g2, oracle_g2star;
  std::optional<std::string> certificate_path;
  std::vector<std::string> warnings;

  friend bool operator==(const DecisionReport&, const DecisionReport&) = default;
};

struct DecisionOptions {
  Tolerances tol;
  bool cross_check = true;
};

inline std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline DecisionReport decide_matrix(const Matrix& f, Field field, const DecisionOptions& opt = {}) {
  if (f.rows() != 6 || !f.is_square()) throw std::invalid_argument("decide: F must be 6x6");
  if (field == Field::rational && !f.is_real()) throw std::invalid_argument("decide: non-real entries over Q");
  DecisionReport r;
  r.ideal_found = true;
  r.field = field;
  r.f = f;
  r.input_digest = digest(to_json(MatrixRecord{field, f}).dump());

  const bool sp = sp_similar(f, opt.tol).value;
  G2StarDecision star = decide_g2star(f, opt.tol);
  r.exact = star.exact;
  r.partition = star.partition;
  r.decisions.g2c = star.value;
  r.decisions.g2c_nondeg_u = sp;
  const std::string star_method = star.exact ? "partition_search" : "partition_search_numeric";
  if (field == Field::rational) {
    r.decisions.g2 = sp;
    r.decisions.g2star = star.value;
    r.decisions.g2star_nondeg_u = sp;
    r.methods = {{"g2", "sp_similar_invariant_factors"},
                 {"g2star", star_method},
                 {"g2star_nondeg_u", "sp_similar_invariant_factors"},
                 {"g2c", star_method},
                 {"g2c_nondeg_u", "sp_similar_invariant_factors"}};
  } else {
    r.methods = {{"g2c", star_method}, {"g2c_nondeg_u", "sp_similar_invariant_factors"}};
    r.warnings.push_back("real decisions omitted over gaussian_rational");
  }
  if (!star.exact) r.warnings.push_back("spectrum not exact: partition search used numeric eigenvalues");

  if (opt.cross_check) {
    OracleDecision o = oracle_decide(f);
    r.oracle_g2 = o.g2;
    r.oracle_g2star = o.g2star;
  }
  return r;
}

/// Report-level invariants and the oracle cross-check; empty when consistent.
inline std::vector<std::string> report_violations(const DecisionReport& r) {
  std::vector<std::string> v;
  const Decisions& d = r.decisions;
  if (r.field == Field::rational) {
    if (!d.g2 || !d.g2star || !d.g2star_nondeg_u) {
      v.push_back("real decisions missing on a rational input");
      return v;
    }
    if (*d.g2 && !*d.g2star) v.push_back("g2 without g2star");
    if (*d.g2 != *d.g2star_nondeg_u || *d.g2 != d.g2c_nondeg_u) v.push_back("g2, g2star_nondeg_u, g2c_nondeg_u differ");
    if (*d.g2star != d.g2c) v.push_back("g2star differs from g2c");
  }
  if (d.g2c_nondeg_u && !d.g2c) v.push_back("g2c_nondeg_u without g2c");
  if (r.oracle_g2 && *r.oracle_g2 != d.g2c_nondeg_u) v.push_back("oracle disagrees on g2");
  if (r.oracle_g2star && r.exact && *r.oracle_g2star != d.g2c) v.push_back("oracle disagrees on g2star");
  return v;
}

inline json to_json(const DecisionReport& r) {
  json j;
  j["input_digest"] = r.input_digest;
  j["ideal_found"] = r.ideal_found;
  j["exact"] = r.exact;
  j["field"] = to_string(r.field);
  j["matrix"] = r.f ? matrix_entries(*r.f) : json(nullptr);
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  j["decisions"] = {{"g2", opt(r.decisions.g2)},
                    {"g2star", opt(r.decisions.g2star)},
                    {"g2star_nondeg_u", opt(r.decisions.g2star_nondeg_u)},
                    {"g2c", r.decisions.g2c},
                    {"g2c_nondeg_u", r.decisions.g2c_nondeg_u}};
  json methods = json::object();
  for (const auto& [k, m] : r.methods) methods[k] = m;
  j["methods"] = methods;
  if (r.partition) {
    json p = json::array();
    for (const auto& s : r.partition->sets) p.push_back({s[0], s[1]});
    j["partition"] = p;
  } else {
    j["partition"] = nullptr;
  }
  j["oracle"] = {{"g2", opt(r.oracle_g2)}, {"g2star", opt(r.oracle_g2star)}};
  j["certificate_path"] = r.certificate_path ? json(*r.certificate_path) : json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

inline DecisionReport report_from_json(const json& j) {
  DecisionReport r;
  auto opt = [](const json& v) -> std::optional<bool> {
    if (v.is_null()) return std::nullopt;
    if (!v.is_boolean()) throw FormatError("decision must be boolean or null");
    return v.get<bool>();
  };
  auto boolean = [](const json& v) {
    if (!v.is_boolean()) throw FormatError("expected boolean");
    return v.get<bool>();
  };
  r.input_digest = detail::require_string(j, "input_digest");
  r.ideal_found = boolean(detail::require(j, "ideal_found"));
  r.exact = boolean(detail::require(j, "exact"));
  r.field = detail::field_from(j);
  const json& m = detail::require(j, "matrix");
  if (!m.is_null()) r.f = matrix_from_entries(m);
  const json& d = detail::require(j, "decisions");
  r.decisions.g2 = opt(detail::require(d, "g2"));
  r.decisions.g2star = opt(detail::require(d, "g2star"));
  r.decisions.g2star_nondeg_u = opt(detail::require(d, "g2star_nondeg_u"));
  r.decisions.g2c = boolean(detail::require(d, "g2c"));
  r.decisions.g2c_nondeg_u = boolean(detail::require(d, "g2c_nondeg_u"));
  for (const auto& [k, v] : detail::require(j, "methods").items()) {
    if (!v.is_string()) throw FormatError("methods must be strings");
    r.methods.emplace_back(k, v.get<std::string>());
  }
  const json& p = detail::require(j, "partition");
  if (!p.is_null()) {
    if (!p.is_array() || p.size() != 3) throw FormatError("partition must list three pairs");
    PairPartition pp;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!p[k].is_array() || p[k].size() != 2) throw FormatError("partition sets are pairs");
      pp.sets[k] = {p[k][0].get<int>(), p[k][1].get<int>()};
    }
    r.partition = pp;
  }
  const json& o = detail::require(j, "oracle");
  r.oracle_g2 = opt(detail::require(o, "g2"));
  r.oracle_g2star = opt(detail::require(o, "g2star"));
  const json& c = detail::require(j, "certificate_path");
  if (!c.is_null()) r.certificate_path = c.get<std::string>();
  for (const auto& w : detail::require(j, "warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

inline std::string to_text(const DecisionReport& r) {
  auto show = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "omitted"; };
  std::string s;
  s += "digest          " + r.input_digest + "\n";
  s += "field           " + to_string(r.field) + (r.exact ? "" : " (numeric spectrum)") + "\n";
  s += "g2              " + std::string(show(r.decisions.g2)) + "\n";
  s += "g2star          " + std::string(show(r.decisions.g2star)) + "\n";
  s += "g2star_nondeg_u " + std::string(show(r.decisions.g2star_nondeg_u)) + "\n";
  s += "g2c             " + std::string(r.decisions.g2c ? "true" : "false") + "\n";
  s += "g2c_nondeg_u    " + std::string(r.decisions.g2c_nondeg_u ? "true" : "false") + "\n";
  if (r.partition) s += "partition       " + r.partition->str() + "\n";
  if (r.oracle_g2)
    s += "oracle          g2=" + std::string(show(r.oracle_g2)) + " g2star=" + show(r.oracle_g2star) + "\n";
  for (const auto& w : r.warnings) s += "warning: " + w + "\n";
  return s;
}

}  // namespace cocal

#endif  // COCAL_REPORT_HPP
