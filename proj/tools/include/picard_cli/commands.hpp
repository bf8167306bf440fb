#pragma once

// Subcommands of the picard tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit status.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>

namespace picard::cli {

struct RunConfig {
  int d = 3;
  std::string variant = "plain";
  std::string scope = "all";
  std::string format;  // json | md | csv | text; empty picks the subcommand default
  std::uint64_t seed = 0;
  bool strict = false;
  bool all = false;  // verify: every scope for d = 1, 3, 7
  std::size_t max_cosets = 1'000'000;
  int max_depth = 12;
  std::size_t max_height = 512;
  std::string direction = "bidirectional";
  // search
  std::string target;
  std::string gens = "picard";
  // classify
  std::string element;
  // orbit
  int length = 2;
  std::string base = "origin";
  // abelianize
  std::string presentation = "picard-3";
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_abelianize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace picard::cli
