#pragma once

// Independent reference computations used by the unit, property and
// acceptance tests. Nothing here calls the algorithms it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "picard/catalog.hpp"
#include "picard/fpgroups.hpp"
#include "picard/smith.hpp"

namespace picard::oracle {

using Perm = std::vector<int>;

/// Order of the permutation group generated by gens, by closure.
std::size_t permutation_group_order(const std::vector<Perm>& gens);

/// Whether the permutations satisfy every relator (letter g+1 acts as gens[g]).
bool satisfies(const std::vector<Perm>& gens, const std::vector<Word>& relators);

struct SmallGroup {
  std::string label;
  Presentation presentation;
  std::vector<Perm> faithful;  // a faithful permutation representation
};
/// At least five presentations of groups of order at most 24.
std::vector<SmallGroup> small_group_corpus();

/// Nonzero invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a);

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound);

/// L A R == D, D diagonal with d_i | d_{i+1} and d_i >= 0, and |det L| = |det R| = 1.
bool smith_postcondition(const IntMatrix& a, const SmithForm& s);

/// Uniformly random length in [0, max_len], uniformly random letters.
Word random_word(std::mt19937_64& rng, int generators, std::size_t max_len);

/// Newton iteration y -> (y + x/y) / 2 from y = x, in exact rationals.
mpq_class newton_sqrt(const mpq_class& x, int iterations);

}  // namespace picard::oracle
