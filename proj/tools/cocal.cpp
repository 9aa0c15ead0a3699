#include <cocal/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace cocal;
  CLI::App app{"cocalibrated G2 structures on almost Abelian Lie algebras"};
  app.require_subcommand(1);
  CommandOptions o;
  std::string field;

  auto common = [&](CLI::App* c, bool inputs) {
    if (inputs) {
      c->add_option("--input", o.input, "Lie algebra (or form) file");
      c->add_option("--matrix", o.matrix, "matrix file with F");
    }
    c->add_option("--field", field, "rational or gaussian_rational")->check(CLI::IsMember({"rational", "gaussian_rational"}));
    c->add_option("--numeric-tol", o.numeric_tol, "numeric rank threshold");
    c->add_option("--cluster-tol", o.cluster_tol, "root clustering tolerance");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--output", o.output, "output file (directory for corpus)");
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* decide = app.add_subcommand("decide", "decide existence of cocalibrated structures");
  common(decide, true);
  auto* construct = app.add_subcommand("construct", "build and verify a certificate");
  common(construct, true);
  construct->add_option("--kind", o.kind, "G2, G2STAR or G2C");
  auto* recognize = app.add_subcommand("recognize", "classify a three-form on a 7-space");
  common(recognize, true);
  auto* iso = app.add_subcommand("iso", "isomorphism test for two models");
  common(iso, false);
  iso->add_option("files", o.files, "two Lie algebra or matrix files")->required()->expected(2);
  auto* oracle = app.add_subcommand("oracle", "brute-force decision from closed four-forms");
  common(oracle, true);
  auto* corpus = app.add_subcommand("corpus", "write the nilpotent corpus and manifest");
  common(corpus, false);
  auto* selftest = app.add_subcommand("selftest", "run the seeded property suites");
  common(selftest, false);
  selftest->add_option("--trials", o.trials, "random cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code::usage;
  }
  if (!field.empty()) o.field = parse_field(field);

  Io io{std::cout, std::cerr};
  if (*decide) return cmd_decide(o, io);
  if (*construct) return cmd_construct(o, io);
  if (*recognize) return cmd_recognize(o, io);
  if (*iso) return cmd_iso(o, io);
  if (*oracle) return cmd_oracle(o, io);
  if (*corpus) return cmd_corpus(o, io);
  return cmd_selftest(o, io);
}
