#pragma once

// Affine motions z -> alpha z + beta of the plane over O_3, and the
// certificate that a finitely presented group is infinite because it maps
// onto a group of such motions containing a translation.

#include <optional>
#include <string>
#include <vector>

#include "picard/exactring.hpp"
#include "picard/fpgroups.hpp"
#include "picard/matrix.hpp"

namespace picard {

class EuclideanMotion {
 public:
  /// alpha must be a unit of O_3.
  EuclideanMotion(QuadInt alpha, QuadInt beta);
  static EuclideanMotion identity();
  static EuclideanMotion parse(std::string_view alpha, std::string_view beta);

  const QuadInt& alpha() const { return alpha_; }
  const QuadInt& beta() const { return beta_; }

  /// (a1, b1) * (a2, b2) = (a1 a2, a1 b2 + b1): apply the right factor first.
  friend EuclideanMotion operator*(const EuclideanMotion& x, const EuclideanMotion& y);
  EuclideanMotion inverse() const;
  EuclideanMotion pow(long n) const;
  QuadInt apply(const QuadInt& z) const { return alpha_ * z + beta_; }

  bool is_identity() const { return alpha_.is_one() && beta_.is_zero(); }
  bool is_translation() const { return alpha_.is_one() && !beta_.is_zero(); }
  /// Order of the motion; nullopt when infinite (nonzero translations).
  std::optional<long> order() const;
  /// [[alpha, beta], [0, 1]].
  Mat2 affine_matrix() const;
  std::string to_string() const;

  friend bool operator==(const EuclideanMotion& x, const EuclideanMotion& y) {
    return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
  }

 private:
  QuadInt alpha_;
  QuadInt beta_;
};

/// Image of a word under generator images.
EuclideanMotion evaluate_motion(const Word& w, const std::vector<EuclideanMotion>& images);

struct RelatorImage {
  std::string relator;
  EuclideanMotion image;
  bool identity = false;         // computed by composing motions
  bool matrix_identity = false;  // recomputed with 2x2 affine matrices
};

struct InfinitenessCertificate {
  Presentation presentation;  // the group shown to be infinite
  std::vector<Word> killed;   // relators added before mapping
  std::vector<EuclideanMotion> images;
  Word witness;
  EuclideanMotion witness_image = EuclideanMotion::identity();
  std::vector<RelatorImage> relators;  // of presentation + killed

  /// Every relator maps to the identity (both ways) and the witness image is a translation.
  bool valid() const;
};

/// Builds the certificate, computing all relator and witness images.
InfinitenessCertificate build_certificate(const Presentation& p, const std::vector<Word>& killed,
                                          const std::vector<EuclideanMotion>& images, const Word& witness);

/// Re-derives every image from the stored generator images, independently of
/// the stored relator data, using affine matrices instead of motion composition.
bool revalidate(const InfinitenessCertificate& cert);

}  // namespace picard
