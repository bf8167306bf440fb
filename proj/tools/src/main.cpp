#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "picard_cli/commands.hpp"

int main(int argc, char** argv) {
  using picard::cli::RunConfig;
  RunConfig cfg;
  std::string out_path;

  CLI::App app{"Exact verification toolkit for hybrid subgroups of Picard modular groups"};
  app.require_subcommand(1);

  auto add_d = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "ring selector")->check(CLI::IsMember({1, 3, 7}));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "write output to this file"); };

  auto* verify = app.add_subcommand("verify", "re-verify claims and write a report");
  add_d(verify);
  add_out(verify);
  verify->add_option("--scope", cfg.scope, "all, or one of the check groups");
  verify->add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--seed", cfg.seed, "random seed (unused by deterministic checks)");
  verify->add_option("--max-cosets", cfg.max_cosets, "coset enumeration limit")->check(CLI::PositiveNumber);
  verify->add_option("--max-depth", cfg.max_depth, "word search depth")->check(CLI::PositiveNumber);
  verify->add_flag("--all", cfg.all, "every scope for d = 1, 3 and 7");
  verify->add_flag("--strict", cfg.strict, "treat discrepancies with published claims as failures");

  auto* orbit = app.add_subcommand("orbit", "export a boundary orbit as CSV");
  add_d(orbit);
  add_out(orbit);
  orbit->add_option("--variant", cfg.variant, "plain or primed")->check(CLI::IsMember({"plain", "primed"}));
  orbit->add_option("--length,-L", cfg.length, "word length bound")->check(CLI::NonNegativeNumber);
  orbit->add_option("--base", cfg.base, "origin, infinity, or 'z,s' with s = it/2");
  orbit->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv"}));
  orbit->add_option("--seed", cfg.seed, "random seed (unused)");

  auto* search = app.add_subcommand("search", "find a word for a catalog element");
  add_d(search);
  add_out(search);
  search->add_option("--target", cfg.target, "catalog name or word expression")->required();
  search->add_option("--gens", cfg.gens, "picard, hybrid, or comma-separated catalog names");
  search->add_option("--max-depth", cfg.max_depth, "word length bound")->check(CLI::NonNegativeNumber);
  search->add_option("--max-height", cfg.max_height, "coefficient bit bound")->check(CLI::PositiveNumber);
  search->add_option("--direction", cfg.direction, "bidirectional or unidirectional")
      ->check(CLI::IsMember({"bidirectional", "unidirectional"}));

  auto* classify = app.add_subcommand("classify", "isometry type of a catalog element");
  add_d(classify);
  add_out(classify);
  classify->add_option("--element", cfg.element, "catalog name or word expression")->required();
  classify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  add_out(abelianize);
  abelianize->add_option("--presentation", cfg.presentation,
                         "picard-1, picard-3, picard-7, G, quotient-<d>, or a presentation file");

  auto* dump = app.add_subcommand("catalog", "dump matrices and presentations");
  add_d(dump);
  add_out(dump);

  CLI11_PARSE(app, argc, argv);

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*verify) status = picard::cli::cmd_verify(cfg, buffer, std::cerr);
    if (*orbit) status = picard::cli::cmd_orbit(cfg, buffer, std::cerr);
    if (*search) status = picard::cli::cmd_search(cfg, buffer, std::cerr);
    if (*classify) status = picard::cli::cmd_classify(cfg, buffer, std::cerr);
    if (*abelianize) status = picard::cli::cmd_abelianize(cfg, buffer, std::cerr);
    if (*dump) status = picard::cli::cmd_catalog(cfg, buffer, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << buffer.str();
  }
  return status;
}
