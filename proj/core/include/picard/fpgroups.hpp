#pragma once

// Words, presentations and the algorithms on them that need no coset table:
// free reduction, quotients, abelianization, Tietze substitutions.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "picard/smith.hpp"

namespace picard {

/// Generator g (0-based) is the letter g + 1; its inverse is -(g + 1).
using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen_letter(int g, bool inverse = false) { return inverse ? -(g + 1) : g + 1; }
inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool letter_is_inverse(Letter l) { return l < 0; }

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long n);
/// Cyclically and freely reduced form.
Word cyclic_reduce(const Word& w);

/// Parses a word over multi-character generator names, e.g.
/// "P^2 (R Q^2)^2 P^-2" or "[(I0 T)^3, T]". Commutators are [x,y] = x^-1 y^-1 x y.
Word parse_word(std::string_view expr, const std::vector<std::string>& names);
std::string render_word(const Word& w, const std::vector<std::string>& names);

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               std::string name = {});
  /// Builds relators from expressions over the generator names.
  static Presentation from_expressions(std::vector<std::string> generator_names,
                                       const std::vector<std::string>& relators,
                                       std::string name = {});

  int generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& name() const { return name_; }

  void add_relator(const Word& w);

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.names_ == b.names_ && a.relators_ == b.relators_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::string name_;
};

/// Appends the given words as relators (empty words after reduction are skipped).
Presentation quotient_by_normal_gens(const Presentation& p, const std::vector<Word>& extra);

// Text format
// -----------
// One relator per line. Generators are single lowercase letters; an
// uppercase letter is the inverse. Also accepted: x^n, x^-n, (...)^n and
// commutators [u,v]. '#' starts a comment. An optional first directive
// "gens: a b c" fixes the generator list and its order; without it the
// generators are a, b, ... up to the largest letter used.
// Rendering writes the directive and each relator fully expanded.
Presentation parse_presentation(std::string_view text, std::string name = {});
std::string render_presentation(const Presentation& p);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // d1 | d2 | ..., all >= 2

  bool is_finite() const { return rank == 0; }
  /// Order of the group; only defined when finite.
  mpz_class order() const;
  /// e.g. "Z/6", "Z^2", "Z/2 x Z/6 x Z", "1".
  std::string to_string() const;
};

/// Relator exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const Presentation& p);
std::vector<mpz_class> exponent_vector(const Word& w, int generators);

AbelianInvariants abelianization(const Presentation& p);

/// Image of words in G^ab, in coordinates of the invariant decomposition:
/// torsion coordinates (reduced mod d_i) followed by free coordinates.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const Presentation& p);

  const AbelianInvariants& invariants() const { return inv_; }
  std::vector<mpz_class> image(const Word& w) const;
  bool is_trivial(const Word& w) const;
  /// Order of the image of w; 0 means infinite.
  mpz_class order(const Word& w) const;

 private:
  int generators_;
  AbelianInvariants inv_;
  IntMatrix change_;               // columns of R from L A R = D
  std::vector<std::size_t> slots_;  // diagonal positions kept, torsion first
  std::vector<mpz_class> moduli_;   // 0 for free coordinates
};

/// Sound rewriting test for w in the normal closure of the relators:
/// cyclically reduces w and repeatedly replaces a subword s by t whenever
/// s t^-1 is a cyclic permutation of a relator (or inverse) and |t| < |s|.
/// Returns true only if w is rewritten to the empty word.
bool reduces_to_identity(const Word& w, const std::vector<Word>& relators, std::size_t max_steps = 100000);

/// Replaces each generator g by images[g].
Word substitute(const Word& w, const std::vector<Word>& images);

/// A Tietze change of generators between two presentations, given by the
/// images of each side's generators as words in the other side's generators.
struct TietzeSubstitution {
  std::vector<Word> forward;   // source generator -> word over target generators
  std::vector<Word> backward;  // target generator -> word over source generators
};

struct TietzeCheck {
  bool inverse_maps = false;      // backward∘forward and forward∘backward are the identity on generators
  bool forward_relators = false;  // source relators map into the target normal closure
  bool backward_relators = false;
  bool ok() const { return inverse_maps && forward_relators && backward_relators; }
};

TietzeCheck verify_tietze(const Presentation& source, const Presentation& target,
                          const TietzeSubstitution& sub);

}  // namespace picard
