#include "picard/euclidean.hpp"

#include <stdexcept>

namespace picard {

EuclideanMotion::EuclideanMotion(QuadInt alpha, QuadInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.ring() != Ring::Eisenstein || beta_.ring() != Ring::Eisenstein) throw RingMismatch();
  if (!alpha_.is_unit()) throw std::invalid_argument("rotational part must be a unit, got " + alpha_.to_string());
}

EuclideanMotion EuclideanMotion::identity() {
  return EuclideanMotion(QuadInt(Ring::Eisenstein, 1), QuadInt(Ring::Eisenstein));
}

EuclideanMotion EuclideanMotion::parse(std::string_view alpha, std::string_view beta) {
  return EuclideanMotion(QuadInt::parse(Ring::Eisenstein, alpha), QuadInt::parse(Ring::Eisenstein, beta));
}

EuclideanMotion operator*(const EuclideanMotion& x, const EuclideanMotion& y) {
  return EuclideanMotion(x.alpha_ * y.alpha_, x.alpha_ * y.beta_ + x.beta_);
}

EuclideanMotion EuclideanMotion::inverse() const {
  const QuadInt ai = alpha_.conj();  // alpha^-1 for a unit
  return EuclideanMotion(ai, -(ai * beta_));
}

EuclideanMotion EuclideanMotion::pow(long n) const {
  EuclideanMotion base = n < 0 ? inverse() : *this;
  EuclideanMotion acc = identity();
  for (long k = 0; k < (n < 0 ? -n : n); ++k) acc = acc * base;
  return acc;
}

std::optional<long> EuclideanMotion::order() const {
  if (is_identity()) return 1;
  if (alpha_.is_one()) return std::nullopt;
  // A rotation: its order is that of alpha (at most 6 in O_3).
  QuadInt p = alpha_;
  for (long n = 1; n <= 6; ++n) {
    if (p.is_one()) return n;
    p *= alpha_;
  }
  throw std::logic_error("unit of O_3 with order above 6");
}

Mat2 EuclideanMotion::affine_matrix() const {
  Mat2 m = Mat2::identity(Ring::Eisenstein);
  m(0, 0) = alpha_;
  m(0, 1) = beta_;
  return m;
}

std::string EuclideanMotion::to_string() const {
  return "(" + alpha_.to_string() + ", " + beta_.to_string() + ")";
}

EuclideanMotion evaluate_motion(const Word& w, const std::vector<EuclideanMotion>& images) {
  EuclideanMotion acc = EuclideanMotion::identity();
  for (Letter l : w) {
    const auto& g = images.at(static_cast<std::size_t>(letter_gen(l)));
    acc = acc * (letter_is_inverse(l) ? g.inverse() : g);
  }
  return acc;
}

namespace {

Mat2 evaluate_affine(const Word& w, const std::vector<EuclideanMotion>& images) {
  Mat2 acc = Mat2::identity(Ring::Eisenstein);
  for (Letter l : w) {
    const Mat2 g = images.at(static_cast<std::size_t>(letter_gen(l))).affine_matrix();
    acc = acc * (letter_is_inverse(l) ? g.inverse() : g);
  }
  return acc;
}

}  // namespace

bool InfinitenessCertificate::valid() const {
  if (relators.size() != presentation.relators().size() + killed.size()) return false;
  for (const auto& r : relators)
    if (!r.identity || !r.matrix_identity) return false;
  return witness_image.is_translation() && !witness_image.order().has_value();
}

InfinitenessCertificate build_certificate(const Presentation& p, const std::vector<Word>& killed,
                                          const std::vector<EuclideanMotion>& images, const Word& witness) {
  if (images.size() != static_cast<std::size_t>(p.generators()))
    throw std::invalid_argument("one image per generator is required");
  InfinitenessCertificate cert{p, killed, images, witness, evaluate_motion(witness, images), {}};
  std::vector<Word> all = p.relators();
  all.insert(all.end(), killed.begin(), killed.end());
  for (const auto& r : all) {
    const EuclideanMotion img = evaluate_motion(r, images);
    cert.relators.push_back({render_word(r, p.generator_names()), img, img.is_identity(),
                             evaluate_affine(r, images).is_identity()});
  }
  return cert;
}

bool revalidate(const InfinitenessCertificate& cert) {
  std::vector<Word> all = cert.presentation.relators();
  all.insert(all.end(), cert.killed.begin(), cert.killed.end());
  for (const auto& r : all)
    if (!evaluate_affine(r, cert.images).is_identity()) return false;
  const Mat2 w = evaluate_affine(cert.witness, cert.images);
  return w(0, 0).is_one() && !w(0, 1).is_zero() && w == cert.witness_image.affine_matrix();
}

}  // namespace picard
