#pragma once

// Coset enumeration (HLT with deduction scanning) and Reidemeister-Schreier.

#include <cstddef>
#include <string>
#include <vector>

#include "picard/fpgroups.hpp"

namespace picard {

struct EnumerationLimits {
  std::size_t max_cosets = 1'000'000;  // live cosets at any time
  std::size_t max_deductions = 100'000;  // pending deductions kept before the stack is dropped
};

enum class EnumerationStatus { Complete, Overflowed };

struct EnumerationStats {
  std::size_t defined = 0;   // total cosets ever defined
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
};

/// Standardized coset table. Coset 0 is the subgroup itself. Column 2g is
/// generator g, column 2g+1 its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int generators, std::vector<int> data, EnumerationStatus status, EnumerationStats stats);

  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::Complete; }
  /// Number of cosets; the index when complete.
  std::size_t index() const { return cols_ ? data_.size() / cols_ : 0; }
  int generators() const { return static_cast<int>(cols_ / 2); }
  const EnumerationStats& stats() const { return stats_; }

  static std::size_t column(Letter l) {
    return 2 * static_cast<std::size_t>(letter_gen(l)) + (letter_is_inverse(l) ? 1 : 0);
  }
  /// Coset c·l, or -1 if undefined (only possible after overflow).
  int act(std::size_t c, Letter l) const { return data_[c * cols_ + column(l)]; }
  /// Coset c·w, or -1.
  int act(std::size_t c, const Word& w) const;

  /// Images of cosets under generator g as a permutation (complete tables only).
  std::vector<int> permutation(int g) const;

 private:
  std::size_t cols_ = 0;
  std::vector<int> data_;
  EnumerationStatus status_ = EnumerationStatus::Overflowed;
  EnumerationStats stats_;
};

/// Enumerates the cosets of the subgroup generated by `subgroup` in p.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {},
                        const EnumerationLimits& limits = {});

/// Table of a transitive action of the generators on {0, ..., n-1}, based
/// at 0: perms[g][x] is the image of x under generator g. The subgroup is
/// the stabilizer of 0. Throws std::invalid_argument on non-permutations.
CosetTable coset_table_from_action(const std::vector<std::vector<int>>& perms);

/// Coset table of the kernel of p -> p^ab (the commutator subgroup).
/// Throws std::domain_error if the abelianization is infinite.
CosetTable abelianization_kernel_table(const Presentation& p);

/// True when every entry is defined and every relator closes at every coset.
bool table_is_closed(const CosetTable& t, const Presentation& p);

struct SchreierResult {
  Presentation presentation;          // on the Schreier generators
  std::vector<Word> generator_words;  // each Schreier generator as a word in p
  std::vector<Word> transversal;      // coset representatives, transversal[0] empty
};

/// Presentation of the subgroup with coset table t (must be complete).
SchreierResult reidemeister_schreier(const Presentation& p, const CosetTable& t);

}  // namespace picard
