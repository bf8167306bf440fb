#pragma once

// Fixed data for d = 1, 3, 7: the Fuchsian generators, their hybrid images
// in the Siegel model, the Picard group presentations with matrix
// realizations, and the tables of word and conjugation identities.

#include <string>
#include <string_view>
#include <vector>

#include "picard/cxhyp.hpp"
#include "picard/fpgroups.hpp"
#include "picard/matrix.hpp"

namespace picard {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Block embedding into the 3x3 ball model: slot 1 acts on coordinates
/// (1, 3), slot 2 on (2, 3). Throws std::invalid_argument unless m preserves Diag(1, -1).
Mat3 embed(int slot, const Mat2& m);
/// J^-1 M J with J = [[1,1,0],[0,1,-1],[1,1,-1]], ball model to Siegel model.
Mat3 cayley(const Mat3& m);
/// J M J^-1.
Mat3 cayley_inverse(const Mat3& m);

struct Named2 {
  std::string name;
  Mat2 m;
};
struct Named3 {
  std::string name;
  Mat3 m;
};

struct FuchsianGens {
  Ring ring;
  std::vector<Named2> gens;  // d = 1, 3: R, U, E;  d = 7: U, A, B
  const Mat2& operator[](std::string_view name) const;
};
FuchsianGens fuchsian_generators(int d);

enum class Variant { Plain, Primed };
Variant parse_variant(std::string_view s);
std::string_view to_string(Variant v);

/// A printed formula that is realized differently, with the check that justifies it.
struct Correction {
  std::string item;
  std::string printed;
  std::string used;
  bool verified = false;
};

struct HybridGens {
  Ring ring;
  Variant variant;
  std::vector<Named3> gens;
  std::vector<Correction> corrections;

  const Mat3& operator[](std::string_view name) const;
  std::vector<std::string> names() const;
  std::vector<Mat3> matrices() const;
};

/// d = 3: E1 U1 U2 E2 I1 I2 (+ E1p);  d = 1: E1 U1 E2 U2 (+ R1 R2);
/// d = 7: U1 U2 A1 A2 B1 B2 (no primed variant).
/// Each generator is built as cayley(embed(...)) and checked against the
/// stored literal; a mismatch throws std::logic_error.
HybridGens hybrid_generators(int d, Variant v = Variant::Plain);

struct PicardGroup {
  Ring ring;
  Presentation presentation;  // named "picard-<d>"
  std::vector<Mat3> realization;
};
/// d = 3: {P, Q, R};  d = 1: {I0, Q, T};  d = 7: {T1, R, I}.
const PicardGroup& picard_group(int d);

Mat3 evaluate(const Word& w, const std::vector<Mat3>& gens, Ring r);

/// Every matrix of one ring under one namespace: the Picard generators,
/// the hybrid generators of both variants and the Fuchsian-derived I1, I2.
class Catalog {
 public:
  explicit Catalog(int d);

  Ring ring() const { return ring_; }
  int d() const { return ring_d(ring_); }
  const PicardGroup& picard() const { return picard_group(d()); }
  const HybridGens& hybrid(Variant v = Variant::Plain) const;
  const std::vector<std::string>& names() const { return names_; }
  const Mat3& matrix(std::string_view name) const;
  /// Evaluates a word expression over names().
  Mat3 eval(std::string_view expr) const;

 private:
  Ring ring_;
  HybridGens plain_;
  HybridGens primed_;
  bool has_primed_;
  std::vector<std::string> names_;
  std::vector<Mat3> mats_;
};
const Catalog& catalog(int d);

/// lhs ~ rhs projectively; both are expressions over catalog(d).names().
struct Identity {
  int d;
  std::string scope;
  std::string lhs;
  std::string rhs;
  std::string note;
};

bool verify_identity(const Identity& id);
/// Evaluates a word over the Picard generators and compares with rhs.
bool verify_word_identity(int d, const Word& lhs, const Mat3& rhs);

/// Hybrid generators written in the Picard generators (scope "words").
std::vector<Identity> word_identities(int d);
/// Conjugation identities and the generator pairings (scope "normality").
std::vector<Identity> normality_identities(int d);
/// Finite-order relations among E1, U1, U2 (d = 3 only, scope "relations").
std::vector<Identity> relation_identities(int d);

/// Picard-word for each hybrid generator used as a normal generator of the quotient.
std::vector<std::pair<std::string, std::string>> hybrid_words(int d, Variant v = Variant::Plain);
/// The Picard presentation with the hybrid words appended.
Presentation hybrid_quotient(int d, Variant v = Variant::Plain);

/// G = <a,b,c | c^2, a^6, [a,c], (ab)^3, (cab)^3, b^2>.
Presentation triangle_quotient_presentation();
/// a = P Q^-1, b = Q, c = R, from the d = 3 hybrid quotient to G.
TietzeSubstitution triangle_quotient_substitution();

/// Normal generators of the commutator subgroup of the d = 3 Picard group.
std::vector<std::string> commutator_subgroup_words();

/// Text dump of every matrix and presentation for ring d.
std::string catalog_dump(int d);

}  // namespace picard
