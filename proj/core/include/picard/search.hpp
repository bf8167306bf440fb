#pragma once

// Breadth-first search for a word in given generators that evaluates
// projectively to a target isometry.

#include <cstddef>
#include <string>
#include <vector>

#include "picard/catalog.hpp"
#include "picard/cxhyp.hpp"
#include "picard/fpgroups.hpp"

namespace picard {

enum class SearchDirection { Unidirectional, Bidirectional };

struct SearchConfig {
  int max_depth = 12;
  std::size_t max_height_bits = 512;
  SearchDirection direction = SearchDirection::Bidirectional;
};

struct SearchResult {
  bool found = false;
  Word word;  // over the generator list; letter g+1 is generator g
  std::string rendered;
  bool verified = false;
  /// When not found: "depth", "height" (some element was pruned) or
  /// "exhausted" (the generated group is finite and does not contain the target).
  std::string exhausted;
  std::size_t pruned = 0;
  std::size_t visited = 0;

  std::size_t length() const { return word.size(); }
};

/// Shortest word (lexicographically least among shortest, letters ordered
/// g0, g0^-1, g1, g1^-1, ...) with eval(word) ~ target, within the bounds.
/// Every returned word is re-evaluated; a mismatch throws std::logic_error.
SearchResult find_word(const Mat3& target, const std::vector<Named3>& gens, const SearchConfig& cfg = {});

/// Word w in subgens with eval(w) ~ g^-1 h g.
SearchResult conjugate_membership(const Mat3& g, const Mat3& h, const std::vector<Named3>& subgens,
                                  const SearchConfig& cfg = {});

}  // namespace picard
