#ifndef COCAL_COMMANDS_HPP
#define COCAL_COMMANDS_HPP

// Command implementations behind the cocal executable. Each returns an exit
// code and writes its machine or text output to the given streams.

#include <cocal/certificate.hpp>
#include <cocal/corpus.hpp>
#include <cocal/g2forms.hpp>
#include <cocal/io.hpp>
#include <cocal/jordan.hpp>
#include <cocal/liealg.hpp>
#include <cocal/oracle.hpp>
#include <cocal/report.hpp>
#include <cocal/selftest.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

namespace cocal {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int jacobi = 2;
inline constexpr int no_ideal = 3;
inline constexpr int mismatch = 4;
inline constexpr int decision_false = 5;
inline constexpr int verification = 6;
inline constexpr int selftest = 7;
}  // namespace exit_code

struct CommandOptions {
  std::string input;   // Lie algebra or form file
  std::string matrix;  // matrix file
  std::optional<Field> field;
  double numeric_tol = kDefaultRankTol;
  double cluster_tol = kDefaultClusterTol;
  std::uint64_t seed = 20240601;
  std::string output;
  std::string format = "json";
  std::string kind = "G2";
  int trials = 100;
  std::vector<std::string> files;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

struct CommandError {
  int code;
  std::string message;
};

inline void emit(const CommandOptions& o, Io io, const std::string& text) {
  if (o.output.empty()) {
    io.out << text;
    if (!text.empty() && text.back() != '\n') io.out << '\n';
  } else {
    write_text_file(o.output, text + (text.empty() || text.back() == '\n' ? "" : "\n"));
  }
}

struct Model {
  Matrix f;
  Field field = Field::rational;
  std::string digest;
};

inline Field resolve_field(const CommandOptions& o, Field declared) { return o.field ? *o.field : declared; }

/// Reads --matrix or --input and reduces a Lie algebra to its model matrix F.
inline Model load_model(const CommandOptions& o) {
  if (o.matrix.empty() == o.input.empty()) throw CommandError{exit_code::usage, "give exactly one of --input or --matrix"};
  Model m;
  if (!o.matrix.empty()) {
    json j = read_json_file(o.matrix);
    MatrixRecord r = matrix_from_json(j);
    if (r.m.rows() != 6) throw CommandError{exit_code::usage, "matrix must be 6x6"};
    m.f = r.m;
    m.field = resolve_field(o, r.field);
    m.digest = digest(j.dump());
  } else {
    json j = read_json_file(o.input);
    LieAlgebra g = lie_from_json(j);
    if (g.dim() != 7) throw CommandError{exit_code::usage, "Lie algebra must be seven-dimensional"};
    ValidationResult v = validate(g);
    if (!v.ok) throw CommandError{exit_code::jacobi, v.diagnostic};
    auto ideal = find_codim1_abelian_ideal(g);
    if (!ideal) throw CommandError{exit_code::no_ideal, "no codimension-one Abelian ideal found"};
    m.f = ideal->f;
    m.field = resolve_field(o, g.field());
    m.digest = digest(j.dump());
  }
  if (m.field == Field::rational && !m.f.is_real())
    throw CommandError{exit_code::usage, "non-real entries with --field rational"};
  return m;
}

inline DecisionOptions decision_options(const CommandOptions& o) { return {{o.numeric_tol, o.cluster_tol}, true}; }

template <class F>
int guarded(Io io, F&& body) {
  try {
    return body();
  } catch (const CommandError& e) {
    io.err << "error: " << e.message << "\n";
    return e.code;
  } catch (const FormatError& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

}  // namespace detail

inline int cmd_decide(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    detail::Model m = detail::load_model(o);
    DecisionReport r = decide_matrix(m.f, m.field, detail::decision_options(o));
    r.input_digest = m.digest;
    auto bad = report_violations(r);
    detail::emit(o, io, o.format == "text" ? to_text(r) : to_json(r).dump(2));
    if (!bad.empty()) {
      for (const auto& b : bad) io.err << "cross-check: " << b << "\n";
      return exit_code::mismatch;
    }
    return exit_code::ok;
  });
}

inline int cmd_construct(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    Kind kind;
    try {
      kind = parse_kind(o.kind);
    } catch (const std::exception&) {
      throw detail::CommandError{exit_code::usage, "unknown kind '" + o.kind + "'"};
    }
    detail::Model m = detail::load_model(o);
    if (m.field == Field::gaussian_rational && kind != Kind::G2C)
      throw detail::CommandError{exit_code::usage, "real kinds need --field rational"};
    DecisionReport r = decide_matrix(m.f, m.field, detail::decision_options(o));
    const bool positive = kind == Kind::G2C ? r.decisions.g2c : kind == Kind::G2 ? *r.decisions.g2 : *r.decisions.g2star;
    if (!positive) {
      io.err << "decision is false: no certificate\n";
      return exit_code::decision_false;
    }
    if (kind != Kind::G2 && !r.exact) {
      io.err << "decision rests on a numeric spectrum: no certificate\n";
      return exit_code::decision_false;
    }
    Certificate cert;
    try {
      cert = build_certificate(m.f, kind);
    } catch (const DecisionFalse& e) {
      io.err << "cross-check: decision true but " << e.what() << "\n";
      return exit_code::mismatch;
    }
    VerifyReport v = verify_certificate(cert, m.f);
    cert.checks = v.passed;
    if (o.format == "text") {
      std::string s = "kind     " + to_string(kind) + "\npath     " + cert.path + "\npsi      " + cert.psi.str() +
                      "\nbasis    " + cert.exhibited_basis.str() + "\nchecks  ";
      for (const auto& c : v.passed) s += " " + c;
      detail::emit(o, io, s + "\n");
    } else {
      detail::emit(o, io, to_json(cert).dump(2));
    }
    for (const auto& f : v.failed) io.err << "verification failed: " << f.name << ": " << f.message << "\n";
    return v.ok() ? exit_code::ok : exit_code::verification;
  });
}

inline int cmd_recognize(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    if (o.input.empty()) throw detail::CommandError{exit_code::usage, "--input form file required"};
    Multivector phi = form_from_json(read_json_file(o.input));
    if (phi.dim() != 7 || phi.grade() != 3 || phi.variance() != Variance::form)
      throw FormatError("expected a three-form on a 7-space");
    const Field field = o.field ? *o.field : Field::rational;
    bool real = true;
    for (const auto& [m, c] : phi.terms()) real = real && c.is_real();
    Recognition r = classify_three_form(phi, real ? field : Field::gaussian_rational);
    json j = {{"kind", to_string(r.kind)}, {"gram", matrix_entries(r.gram)}};
    if (r.signature)
      j["signature"] = {{"positive", r.signature->positive}, {"negative", r.signature->negative}, {"zero", r.signature->zero}};
    else
      j["signature"] = nullptr;
    if (o.format == "text") {
      std::string s = "kind " + to_string(r.kind);
      if (r.signature)
        s += " (" + std::to_string(r.signature->positive) + "," + std::to_string(r.signature->negative) + ")";
      detail::emit(o, io, s + "\n");
    } else {
      detail::emit(o, io, j.dump(2));
    }
    return exit_code::ok;
  });
}

inline int cmd_iso(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    if (o.files.size() != 2) throw detail::CommandError{exit_code::usage, "iso needs two files"};
    std::vector<Matrix> fs;
    Field field = Field::rational;
    for (const auto& path : o.files) {
      json j = read_json_file(path);
      if (j.contains("rows")) {
        MatrixRecord r = matrix_from_json(j);
        fs.push_back(r.m);
        if (r.field == Field::gaussian_rational) field = Field::gaussian_rational;
      } else {
        LieAlgebra g = lie_from_json(j);
        ValidationResult v = validate(g);
        if (!v.ok) throw detail::CommandError{exit_code::jacobi, path + ": " + v.diagnostic};
        auto ideal = find_codim1_abelian_ideal(g);
        if (!ideal) throw detail::CommandError{exit_code::no_ideal, path + ": no codimension-one Abelian ideal found"};
        fs.push_back(ideal->f);
        if (g.field() == Field::gaussian_rational) field = Field::gaussian_rational;
      }
    }
    if (o.field) field = *o.field;
    IsoResult r = iso_test_matrices(fs[0], fs[1], field, o.cluster_tol);
    json j = {{"isomorphic", r.isomorphic}, {"exact", r.exact}, {"gamma", r.gamma ? json(r.gamma->str()) : json(nullptr)}};
    if (o.format == "text")
      detail::emit(o, io, std::string(r.isomorphic ? "isomorphic" : "not isomorphic") + (r.exact ? "" : " (advisory)") + "\n");
    else
      detail::emit(o, io, j.dump(2));
    return exit_code::ok;
  });
}

inline int cmd_oracle(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    detail::Model m = detail::load_model(o);
    ClosedFourFormSpace s = closed_fourform_space(m.f);
    FourFormSearch search = max_length_in_space(s);
    json j = {{"space_dim", s.basis.size()},
              {"maxlen", search.maxlen},
              {"g2", search.maxlen == 3},
              {"g2star", search.maxlen >= 2},
              {"witness", search.witness ? to_json(*search.witness) : json(nullptr)}};
    if (o.format == "text")
      detail::emit(o, io, "closed four-forms " + std::to_string(s.basis.size()) + ", max length " +
                              std::to_string(search.maxlen) + "\n");
    else
      detail::emit(o, io, j.dump(2));
    return exit_code::ok;
  });
}

inline std::string corpus_file_name(const Partition& p) { return "nilpotent_" + partition_name(p) + ".json"; }

inline int cmd_corpus(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    if (o.output.empty()) throw detail::CommandError{exit_code::usage, "--output directory required"};
    std::filesystem::create_directories(o.output);
    json manifest = json::array();
    for (const auto& row : nilpotent_manifest()) {
      const std::string name = corpus_file_name(row.partition);
      write_text_file((std::filesystem::path(o.output) / name).string(), to_json(from_matrix(nilpotent_model(row.partition))).dump(2) + "\n");
      manifest.push_back({{"partition", row.partition}, {"file", name}, {"g2", row.g2}, {"g2star", row.g2star}});
    }
    write_text_file((std::filesystem::path(o.output) / "manifest.json").string(), manifest.dump(2) + "\n");
    io.out << "wrote " << manifest.size() << " algebras to " << o.output << "\n";
    return exit_code::ok;
  });
}

inline int cmd_selftest(const CommandOptions& o, Io io) {
  return detail::guarded(io, [&] {
    SelftestSummary s = run_selftest(o.seed, o.trials);
    json suites = json::array();
    for (const auto& r : s.suites) {
      suites.push_back({{"name", r.name},
                        {"cases", r.cases},
                        {"passed", !r.counterexample},
                        {"seconds", r.seconds},
                        {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    }
    if (o.format == "text") {
      std::string t;
      for (const auto& r : s.suites) {
        t += (r.counterexample ? "FAIL " : "ok   ") + r.name + " (" + std::to_string(r.cases) + " cases)\n";
        if (r.counterexample) t += "     " + *r.counterexample + "\n";
      }
      detail::emit(o, io, t);
    } else {
      detail::emit(o, io, json{{"seed", o.seed}, {"trials", o.trials}, {"passed", s.ok()}, {"suites", suites}}.dump(2));
    }
    return s.ok() ? exit_code::ok : exit_code::selftest;
  });
}

}  // namespace cocal

#endif  // COCAL_COMMANDS_HPP
