// Runs each acceptance criterion under its time limit and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "picard/catalog.hpp"
#include "picard/certify.hpp"
#include "picard/cxhyp.hpp"
#include "picard/search.hpp"
#include "picard/smith.hpp"
#include "picard/todd_coxeter.hpp"
#include "picard_cli/commands.hpp"
#include "support/oracles.hpp"

using namespace picard;

namespace {

// Collects failed conditions with a short reason.
struct Outcome {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void all_pass(const std::vector<CheckResult>& checks, const std::string& what) {
    for (const auto& c : checks)
      require(c.status == Status::Pass, what + " " + c.id + " is " + std::string(to_string(c.status)));
  }
};

int run_criterion(int n, double limit_s, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= limit_s) {
    std::ostringstream s;
    s << "took " << dt << " s, limit " << limit_s << " s";
    o.problems.push_back(s.str());
  }
  const bool pass = o.problems.empty();
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << std::fixed
            << std::setprecision(2) << dt << " s / " << limit_s << " s)\n";
  for (const auto& p : o.problems) std::cout << "    " << p << "\n";
  std::cout.flush();
  return pass ? 0 : 1;
}

std::size_t count_scope(const std::vector<Identity>& ids, std::string_view prefix) {
  return static_cast<std::size_t>(
      std::count_if(ids.begin(), ids.end(), [&](const Identity& i) { return i.lhs.rfind(prefix, 0) == 0; }));
}

std::size_t orbit_rows(int len) {
  cli::RunConfig cfg;
  cfg.d = 3;
  cfg.length = len;
  std::ostringstream out, err;
  cli::cmd_orbit(cfg, out, err);
  const std::string s = out.str();
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) - 1;
}

}  // namespace

int main() {
  int failures = 0;

  failures += run_criterion(1, 5, "form preservation and scalar relators", [](Outcome& o) {
    for (int d : {1, 3, 7}) {
      o.all_pass(check_forms(d), "d=" + std::to_string(d));
      const Catalog& c = catalog(d);
      const HermForm h = HermForm::siegel(c.ring());
      for (const auto& name : c.names()) o.require(is_unitary(c.matrix(name), h), name + " not unitary");
      for (const auto& g : fuchsian_generators(d).gens) o.require(preserves_disk_form(g.m), g.name + " disk form");
      const auto& pg = picard_group(d);
      for (const auto& r : pg.presentation.relators())
        o.require(proj_eq(evaluate(r, pg.realization, pg.ring), Mat3::identity(pg.ring)), "relator not scalar");
    }
  });

  failures += run_criterion(2, 5, "word identities", [](Outcome& o) {
    const std::size_t expected[] = {4, 3, 6};
    int k = 0;
    for (int d : {1, 3, 7}) {
      const auto ids = word_identities(d);
      o.require(ids.size() == expected[k++], "identity count for d=" + std::to_string(d));
      for (const auto& id : ids) o.require(verify_identity(id), id.lhs + " ~ " + id.rhs);
    }
    for (const auto& corr : hybrid_generators(1).corrections) o.require(corr.verified, corr.item);
  });

  failures += run_criterion(3, 10, "normality", [](Outcome& o) {
    for (int d : {1, 3, 7}) o.all_pass(verify_normality(d), "d=" + std::to_string(d));
    o.require(normality_identities(3).size() == 9, "d=3 count");
    const auto n1 = normality_identities(1);
    o.require(count_scope(n1, "Q^-1") == 4 && count_scope(n1, "I0") == 4, "d=1 conjugations and pairings");
    const auto n7 = normality_identities(7);
    o.require(count_scope(n7, "T1^-1") == 6 && count_scope(n7, "R") == 1, "d=7 conjugations and R membership");
  });

  failures += run_criterion(4, 60, "indices of the d=1 and d=7 quotients", [](Outcome& o) {
    EnumerationLimits lim;
    lim.max_cosets = 1'000'000;
    for (auto [d, idx] : {std::pair{1, 2}, std::pair{7, 1}}) {
      const Presentation q = hybrid_quotient(d);
      const CosetTable t = todd_coxeter(q, {}, lim);
      o.require(t.complete(), "enumeration incomplete for d=" + std::to_string(d));
      o.require(t.index() == static_cast<std::size_t>(idx), "index for d=" + std::to_string(d));
      o.require(table_is_closed(t, q), "table not relator-closed for d=" + std::to_string(d));
    }
  });

  failures += run_criterion(5, 5, "infiniteness certificate for d=3", [](Outcome& o) {
    const InfinitenessCertificate cert = triangle_236_certificate();
    o.require(cert.presentation.relators().size() == 6, "G should have six relators");
    for (const auto& r : cert.relators) o.require(r.identity && r.matrix_identity, "relator " + r.relator);
    o.require(cert.witness_image == EuclideanMotion::parse("1", "-1"), "witness is not z -> z - 1");
    o.require(cert.valid() && revalidate(cert), "certificate invalid");
    o.all_pass(sign_extension_checks(), "sign extension");
    const auto checks = index_checks(3, EnumerationLimits{});
    o.all_pass(checks, "index");
    bool concluded = false;
    for (const auto& c : checks) concluded |= c.id == "infinite-index" && c.status == Status::Pass;
    o.require(concluded, "no infinite-index conclusion");
    std::size_t prev = 0;
    for (int len = 1; len <= 4; ++len) {
      const std::size_t rows = orbit_rows(len);
      o.require(rows > prev, "orbit rows not increasing at L=" + std::to_string(len));
      prev = rows;
    }
  });

  failures += run_criterion(6, 60, "abelianizations", [](Outcome& o) {
    o.require(abelianization(picard_group(3).presentation).to_string() == "Z/6", "picard-3 abelianization");
    o.all_pass(hybrid_abelianization_bounds(), "abelianization");
    const Presentation& p = picard_group(3).presentation;
    const SchreierResult rs = reidemeister_schreier(p, abelianization_kernel_table(p));
    const AbelianInvariants inv = abelianization(rs.presentation);
    o.require(inv.rank == 2 && inv.torsion.empty(), "commutator subgroup is " + inv.to_string());
  });

  failures += run_criterion(7, 5, "classification", [](Outcome& o) {
    for (int d : {1, 3, 7}) {
      o.all_pass(check_classification(d), "d=" + std::to_string(d));
      const Catalog& c = catalog(d);
      o.require(classify(c.matrix("U1")) == IsometryClass::Unipotent2Step, "U1");
      o.require(classify(c.matrix("U2")) == IsometryClass::Unipotent2Step, "U2");
    }
    const Catalog& c3 = catalog(3);
    o.require(classify(c3.matrix("E1")) == IsometryClass::RegularElliptic, "E1 class");
    o.require(projective_order(c3.matrix("E1")) == 3, "E1 order");
    const Catalog& c7 = catalog(7);
    o.require(classify(c7.matrix("A1")) == IsometryClass::Loxodromic, "A1 class");
    o.require(projective_order(c7.matrix("B1")) == 2, "B1 order");
  });

  failures += run_criterion(8, 120, "word search", [](Outcome& o) {
    const Catalog& c = catalog(3);
    std::vector<Named3> gens;
    const auto& pg = c.picard();
    for (std::size_t i = 0; i < pg.realization.size(); ++i)
      gens.push_back({pg.presentation.generator_names()[i], pg.realization[i]});
    SearchConfig cfg;
    cfg.max_depth = 3;
    const SearchResult u1 = find_word(c.matrix("U1"), gens, cfg);
    o.require(u1.found && u1.verified && u1.rendered == "Q^2" && u1.length() == 2, "U1 = Q^2");
    const SearchResult e1 = find_word(c.matrix("E1"), gens, SearchConfig{});
    o.require(e1.found && e1.verified, "no verified word for E1 within depth 12");
  });

  failures += run_criterion(9, 60, "oracle properties", [](Outcome& o) {
    const auto corpus = oracle::small_group_corpus();
    o.require(corpus.size() >= 5, "corpus too small");
    for (const auto& g : corpus) {
      o.require(oracle::satisfies(g.faithful, g.presentation.relators()), g.label + " representation");
      const std::size_t order = oracle::permutation_group_order(g.faithful);
      o.require(order <= 24, g.label + " too large");
      const CosetTable t = todd_coxeter(g.presentation);
      o.require(t.complete() && t.index() == order, g.label + " order mismatch");
    }
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
      const IntMatrix a = oracle::random_int_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 20);
      o.require(oracle::smith_postcondition(a, smith_normal_form(a)), "SNF postcondition");
    }
    for (int k = 0; k < 1000; ++k) {
      const int d = k % 3 == 0 ? 1 : (k % 3 == 1 ? 3 : 7);
      const auto& pg = picard_group(d);
      const Mat3 m = evaluate(oracle::random_word(rng, pg.presentation.generators(), 8), pg.realization, pg.ring);
      const Mat3 cr = canonical_rep(m);
      o.require(canonical_rep(cr) == cr, "canonical_rep not idempotent");
      const auto& us = units(pg.ring);
      const Mat3 a = m.scaled(us[rng() % us.size()]), b = m.scaled(us[rng() % us.size()]);
      o.require(proj_eq(m, m) && proj_eq(a, m) == proj_eq(m, a) && proj_eq(a, m) && proj_eq(m, b) && proj_eq(a, b),
                "proj_eq laws");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
