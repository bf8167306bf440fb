#include <random>

#include "doctest.h"
#include "picard/catalog.hpp"
#include "picard/fpgroups.hpp"
#include "picard/smith.hpp"
#include "picard/todd_coxeter.hpp"
#include "support/oracles.hpp"

using namespace picard;

TEST_SUITE("fpgroups") {

TEST_CASE("free reduction and word algebra") {
  const Word w{1, 2, -2, -1, 3};
  CHECK(free_reduce(w) == Word{3});
  CHECK(inverse_word(Word{1, 2}) == Word{-2, -1});
  CHECK(concat(Word{1, 2}, Word{-2, 3}) == Word{1, 3});
  CHECK(power(Word{1, 2}, -2) == Word{-2, -1, -2, -1});
  CHECK(power(Word{1}, 0).empty());
  CHECK(cyclic_reduce(Word{-1, 2, 1}) == Word{2});
}

TEST_CASE("expression parsing and rendering") {
  const std::vector<std::string> names{"P", "Q", "R"};
  CHECK(parse_word("P^2 (R Q^2)^2 P^-2", names) == Word{1, 1, 3, 2, 2, 3, 2, 2, -1, -1});
  CHECK(parse_word("[P,Q]", names) == Word{-1, -2, 1, 2});
  CHECK(parse_word("1", names).empty());
  CHECK(render_word(Word{1, 1, -2}, names) == "P^2 Q^-1");
  CHECK_THROWS((void)parse_word("X", names));
  const Word w = parse_word("P Q^-3 R P", names);
  CHECK(parse_word(render_word(w, names), names) == w);
}

TEST_CASE("presentation text round trip") {
  const Presentation p = parse_presentation("gens: a b c\n# comment\naab\n(ab)^3\n[a,c]\n");
  CHECK(p.generators() == 3);
  CHECK(p.relators().size() == 3);
  const Presentation back = parse_presentation(render_presentation(p));
  CHECK(back == p);
  CHECK(parse_presentation("aB\n").generators() == 2);
  CHECK_THROWS_AS(Presentation({"a"}, {Word{2}}), std::out_of_range);
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = oracle::random_int_matrix(rng, rows, cols, 9);
    const SmithForm s = smith_normal_form(a);
    CHECK(oracle::smith_postcondition(a, s));
    std::vector<mpz_class> diag;
    for (const auto& x : s.diagonal())
      if (x != 0) diag.push_back(x);
    CHECK(diag == oracle::invariant_factors_by_minors(a));
  }
  const IntMatrix a(2, 2, {2, 4, 6, 8});
  CHECK((determinant(a) == -8));
  CHECK(smith_normal_form(a).diagonal() == std::vector<mpz_class>{2, 4});
  CHECK((determinant(IntMatrix::identity(5)) == 1));
}

TEST_CASE("abelian invariants") {
  CHECK(abelianization(picard_group(3).presentation).to_string() == "Z/6");
  CHECK(abelianization(Presentation::from_expressions({"a", "b"}, {"[a,b]"})).to_string() == "Z^2");
  CHECK(abelianization(Presentation::from_expressions({"a", "b"}, {"a^2", "b^2", "[a,b]"})).to_string() ==
        "Z/2 x Z/2");
  CHECK(abelianization(Presentation::from_expressions({"a"}, {"a"})).to_string() == "1");
  const Presentation s3 = Presentation::from_expressions({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  const AbelianizationMap m(s3);
  CHECK(m.invariants().to_string() == "Z/2");
  CHECK(m.is_trivial(parse_word("b", s3.generator_names())));
  CHECK((m.order(parse_word("a", s3.generator_names())) == 2));
  CHECK((m.invariants().order() == 2));
}

TEST_CASE("Todd-Coxeter agrees with brute-force orders") {
  for (const auto& g : oracle::small_group_corpus()) {
    CAPTURE(g.label);
    REQUIRE(oracle::satisfies(g.faithful, g.presentation.relators()));
    const CosetTable t = todd_coxeter(g.presentation);
    REQUIRE(t.complete());
    CHECK(t.index() == oracle::permutation_group_order(g.faithful));
    CHECK(table_is_closed(t, g.presentation));
  }
}

TEST_CASE("Todd-Coxeter with a subgroup and the overflow path") {
  const Presentation s3 = Presentation::from_expressions({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  CHECK(todd_coxeter(s3, {Word{1}}).index() == 3);
  CHECK(todd_coxeter(s3, {Word{2}}).index() == 2);
  const Presentation z2 = Presentation::from_expressions({"a", "b"}, {"[a,b]"});
  EnumerationLimits lim;
  lim.max_cosets = 500;
  const CosetTable t = todd_coxeter(z2, {}, lim);
  CHECK_FALSE(t.complete());
  CHECK(t.status() == EnumerationStatus::Overflowed);
}

TEST_CASE("Reidemeister-Schreier") {
  // Commutator subgroup of S3 is cyclic of order 3.
  const Presentation s3 = Presentation::from_expressions({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  const CosetTable t = abelianization_kernel_table(s3);
  CHECK(t.index() == 2);
  const SchreierResult rs = reidemeister_schreier(s3, t);
  CHECK(abelianization(rs.presentation).to_string() == "Z/3");
  // Index 3 subgroup <a> of S3 is Z/2.
  const SchreierResult r2 = reidemeister_schreier(s3, todd_coxeter(s3, {Word{1}}));
  CHECK(abelianization(r2.presentation).to_string() == "Z/2");
  // Free group of rank 2, index 2 subgroup: rank 3.
  const Presentation f2({"a", "b"}, {});
  const CosetTable c = coset_table_from_action({{1, 0}, {0, 1}});
  CHECK(abelianization(reidemeister_schreier(f2, c).presentation).to_string() == "Z^3");
  EnumerationLimits lim;
  lim.max_cosets = 100;
  CHECK_THROWS_AS((void)reidemeister_schreier(f2, todd_coxeter(f2, {}, lim)), std::logic_error);
}

TEST_CASE("rewriting to the identity and Tietze checks") {
  const Presentation s3 = Presentation::from_expressions({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  const auto& n = s3.generator_names();
  CHECK(reduces_to_identity(parse_word("a b a b", n), s3.relators()));
  CHECK(reduces_to_identity(parse_word("b a b a", n), s3.relators()));
  CHECK(reduces_to_identity(parse_word("b^-1 a^2 b", n), s3.relators()));
  CHECK_FALSE(reduces_to_identity(parse_word("a", n), s3.relators()));
  CHECK(substitute(Word{1, -2}, {Word{2, 2}, Word{1}}) == Word{2, 2, -1});
  const TietzeCheck tc = verify_tietze(hybrid_quotient(3), triangle_quotient_presentation(),
                                       triangle_quotient_substitution());
  CHECK(tc.ok());
}

}
