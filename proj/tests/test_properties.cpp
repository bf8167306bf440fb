#include <random>

#include "doctest.h"
#include "picard/catalog.hpp"
#include "picard/cxhyp.hpp"
#include "picard/euclidean.hpp"
#include "picard/fpgroups.hpp"
#include "picard/smith.hpp"
#include "support/oracles.hpp"

using namespace picard;

TEST_SUITE("properties") {

TEST_CASE("random catalog words: canonical forms, projective equality, forms, classification") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int d : {1, 3, 7}) {
    const Catalog& c = catalog(d);
    const auto& pg = c.picard();
    const HermForm h = HermForm::siegel(c.ring());
    const int n = d == 3 ? 400 : 300;
    for (int k = 0; k < n; ++k, ++checked) {
      const Word w = oracle::random_word(rng, pg.presentation.generators(), 6);
      const Mat3 m = evaluate(w, pg.realization, c.ring());
      const Mat3 cr = canonical_rep(m);
      CHECK(canonical_rep(cr) == cr);
      CHECK(is_unitary(m, h));
      // Reflexive, symmetric, and transitive through a unit multiple.
      const auto& us = units(c.ring());
      const QuadInt& u = us[static_cast<std::size_t>(k) % us.size()];
      const QuadInt& v = us[static_cast<std::size_t>(k + 1) % us.size()];
      const Mat3 um = m.scaled(u), vm = m.scaled(v);
      CHECK(proj_eq(m, m));
      CHECK(proj_eq(um, m) == proj_eq(m, um));
      CHECK(proj_eq(um, m));
      CHECK(proj_eq(m, vm));
      CHECK(proj_eq(um, vm));
      CHECK_FALSE(proj_eq(m, m.scaled(QuadInt(c.ring(), 2))));
      // A relator inserted anywhere leaves the element unchanged.
      const auto& rels = pg.presentation.relators();
      const Word& rel = rels[static_cast<std::size_t>(k) % rels.size()];
      const std::size_t cut = w.empty() ? 0 : static_cast<std::size_t>(k) % (w.size() + 1);
      Word w2(w.begin(), w.begin() + static_cast<long>(cut));
      w2.insert(w2.end(), rel.begin(), rel.end());
      w2.insert(w2.end(), w.begin() + static_cast<long>(cut), w.end());
      CHECK(proj_eq(evaluate(w2, pg.realization, c.ring()), m));
      // Classification is a conjugacy invariant.
      const Mat3& g = pg.realization[static_cast<std::size_t>(k) % pg.realization.size()];
      CHECK(classify(g * m * g.inverse()) == classify(m));
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("random Smith normal forms up to 6x6") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const IntMatrix a = oracle::random_int_matrix(rng, rows, cols, k % 2 ? 3 : 40);
    CHECK(oracle::smith_postcondition(a, smith_normal_form(a)));
  }
}

TEST_CASE("abelian invariants are unchanged by relator manipulations") {
  std::mt19937_64 rng(5);
  for (int d : {1, 3, 7}) {
    const Presentation& p = picard_group(d).presentation;
    const std::string base = abelianization(p).to_string();
    for (int k = 0; k < 20; ++k) {
      std::vector<Word> rels = p.relators();
      std::shuffle(rels.begin(), rels.end(), rng);
      const Word conj = oracle::random_word(rng, p.generators(), 4);
      rels[0] = concat(concat(conj, rels[0]), inverse_word(conj));
      rels[1] = inverse_word(rels[1]);
      rels.push_back(concat(rels[0], rels[1]));  // a consequence
      CHECK(abelianization(Presentation(p.generator_names(), rels)).to_string() == base);
    }
  }
}

TEST_CASE("motion group laws") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coeff(-9, 9);
  const auto& us = units(Ring::Eisenstein);
  auto random_motion = [&] {
    const QuadInt& a = us[rng() % us.size()];
    return EuclideanMotion(a, QuadInt(Ring::Eisenstein, coeff(rng), coeff(rng)));
  };
  for (int k = 0; k < 300; ++k) {
    const EuclideanMotion x = random_motion(), y = random_motion(), z = random_motion();
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).is_identity());
    CHECK((x * EuclideanMotion::identity()) == x);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    const QuadInt p(Ring::Eisenstein, coeff(rng), coeff(rng));
    CHECK((x * y).apply(p) == x.apply(y.apply(p)));
    if (auto o = x.order()) CHECK(x.pow(*o).is_identity());
  }
}

}
