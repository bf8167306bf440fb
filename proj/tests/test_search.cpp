#include <map>
#include <set>

#include "doctest.h"
#include "picard/catalog.hpp"
#include "picard/search.hpp"

using namespace picard;

namespace {

Mat3 perm_matrix(const std::array<int, 3>& p) {
  const Ring r = Ring::Gauss;
  Mat3 m(r, {QuadInt(r), QuadInt(r), QuadInt(r), QuadInt(r), QuadInt(r), QuadInt(r), QuadInt(r), QuadInt(r),
             QuadInt(r)});
  for (std::size_t i = 0; i < 3; ++i) m(static_cast<std::size_t>(p[i]), i) = QuadInt(r, 1);
  return m;
}

// Shortest word length for every element, by plain breadth-first search.
std::map<std::string, std::size_t> brute_force_lengths(const std::vector<Mat3>& letters) {
  const Mat3 id = Mat3::identity(letters.front().ring());
  std::map<std::string, std::size_t> dist{{canonical_key(id), 0}};
  std::vector<Mat3> frontier{id};
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    std::vector<Mat3> next;
    for (const auto& m : frontier)
      for (const auto& l : letters) {
        const Mat3 p = m * l;
        if (dist.emplace(canonical_key(p), len).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("minimal lengths on S3 match brute force in both directions") {
  const Mat3 s = perm_matrix({1, 0, 2}), t = perm_matrix({1, 2, 0});
  const std::vector<Named3> gens{{"s", s}, {"t", t}};
  const auto lengths = brute_force_lengths({s, t, s.inverse(), t.inverse()});
  CHECK(lengths.size() == 6);
  std::vector<Mat3> elements;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) elements.push_back(s.pow(a) * t.pow(b));
  for (const auto& e : elements) {
    SearchConfig bi, uni;
    uni.direction = SearchDirection::Unidirectional;
    const SearchResult rb = find_word(e, gens, bi), ru = find_word(e, gens, uni);
    REQUIRE(rb.found);
    REQUIRE(ru.found);
    CHECK(rb.verified);
    CHECK(rb.length() == lengths.at(canonical_key(e)));
    CHECK(ru.length() == rb.length());
    CHECK(ru.word == rb.word);
  }
}

TEST_CASE("a target outside a finite group is reported as exhausted") {
  const Mat3 s = perm_matrix({1, 0, 2});
  const Ring r = Ring::Gauss;
  const Mat3 target = Mat3::diagonal(r, {QuadInt(r, 0, 1), QuadInt(r, 1), QuadInt(r, 1)});
  const SearchResult res = find_word(target, {{"s", s}});
  CHECK_FALSE(res.found);
  CHECK(res.exhausted == "exhausted");
}

TEST_CASE("Picard words") {
  const Catalog& c = catalog(3);
  std::vector<Named3> gens;
  const auto& pg = c.picard();
  for (std::size_t i = 0; i < pg.realization.size(); ++i)
    gens.push_back({pg.presentation.generator_names()[i], pg.realization[i]});
  SearchConfig cfg;
  cfg.max_depth = 3;
  const SearchResult u1 = find_word(c.matrix("U1"), gens, cfg);
  REQUIRE(u1.found);
  CHECK(u1.rendered == "Q^2");
  CHECK(u1.length() == 2);
  cfg.max_depth = 2;
  const SearchResult e1 = find_word(c.matrix("E1"), gens, cfg);
  CHECK_FALSE(e1.found);
  CHECK(e1.exhausted == "depth");
  cfg.max_depth = 8;
  cfg.max_height_bits = 1;
  const SearchResult pruned = find_word(c.matrix("E1"), gens, cfg);
  CHECK_FALSE(pruned.found);
  CHECK(pruned.exhausted == "height");
  CHECK(pruned.pruned > 0);
}

TEST_CASE("conjugate membership") {
  const Catalog& c = catalog(3);
  const auto& h = c.hybrid();
  SearchConfig cfg;
  cfg.max_depth = 4;
  const SearchResult r = conjugate_membership(c.matrix("R"), c.matrix("U1"), h.gens, cfg);
  REQUIRE(r.found);
  CHECK(r.verified);
  CHECK(r.rendered == "U2");
}

}
