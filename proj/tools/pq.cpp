// Command-line front end: verification suites, centralizer solves, relation
// dumps, straightening, and word evaluation, with JSON or text output.
//
// Exit codes: 0 all checks pass, 1 a checked identity failed, 2 bad usage.

#include "pq/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the periplectic quantum algebra"};
  app.require_subcommand(1);

  pq::RunConfig cfg;
  std::string format = "json";
  auto add_common = [&](CLI::App* cmd, bool with_legs = true) {
    cmd->add_option("--n", cfg.n, "size parameter n")->check(CLI::PositiveNumber);
    if (with_legs)
      cmd->add_option("--l", cfg.legs, "tensor legs")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  std::string target = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  {
    std::vector<std::string> choices = pq::verify_targets();
    choices.push_back("all");
    verify->add_option("target", target, "which checks to run")
        ->required()
        ->check(CLI::IsMember(choices));
  }
  add_common(verify);
  std::string mode = "symbolic";
  verify->add_option("--mode", mode, "symbolic or sampled relation sweep")
      ->check(CLI::IsMember({"symbolic", "sampled"}));
  verify->add_option("--seed", cfg.seed, "seed recorded for sampled runs");

  std::string side = "uqpn";
  bool want_double = false;
  CLI::App* cent = app.add_subcommand("centralizer", "solve a commutant problem");
  add_common(cent);
  cent->add_option("--side", side, "whose action to centralize")
      ->check(CLI::IsMember({"uqpn", "brauer"}));
  cent->add_flag("--double", want_double, "also run the double-centralizer report");

  CLI::App* rels = app.add_subcommand("relations", "dump the defining relations");
  add_common(rels, /*with_legs=*/false);

  std::string word;
  CLI::App* pbw = app.add_subcommand("pbw", "straighten a word of generators");
  add_common(pbw, /*with_legs=*/false);
  pbw->add_option("--word", word, "factors like \"t(1,2) t(2,2)\"")->required();

  CLI::App* brauer = app.add_subcommand("brauer", "q-Brauer word operations");
  CLI::App* beval = brauer->add_subcommand("eval", "evaluate a word of tokens");
  add_common(beval);
  beval->add_option("--word", word, "tokens like \"t1 c2 t1\"")->required();
  brauer->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.json_output = format == "json";
  cfg.symbolic = mode == "symbolic";
  try {
    if (verify->parsed()) return pq::run_verify(target, cfg, std::cout);
    if (cent->parsed()) return pq::run_centralizer(cfg, side, want_double, std::cout);
    if (rels->parsed()) return pq::run_relations_dump(cfg, std::cout);
    if (pbw->parsed()) return pq::run_pbw(cfg, word, std::cout);
    if (beval->parsed()) return pq::run_brauer_eval(cfg, word, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
