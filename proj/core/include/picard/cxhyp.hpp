#pragma once

// Complex hyperbolic plane: Hermitian forms, projective classes of
// unitary matrices, isometry types and the Heisenberg boundary action.

#include <optional>
#include <string>
#include <string_view>

#include "picard/exactring.hpp"
#include "picard/matrix.hpp"

namespace picard {

/// A Hermitian matrix defining a form on C^3.
class HermForm {
 public:
  explicit HermForm(Mat3 matrix);

  /// Diag(1, 1, -1), the ball model.
  static HermForm ball(Ring r);
  /// Antidiagonal (1, 1, 1) with the middle 1, the Siegel model.
  static HermForm siegel(Ring r);

  const Mat3& matrix() const { return m_; }

 private:
  Mat3 m_;
};

/// M* H M == H, exactly.
bool is_unitary(const Mat3& m, const HermForm& h);
/// 2x2 version against Diag(1, -1).
bool preserves_disk_form(const Mat2& m);

class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Projective class of a matrix modulo the unit group of O_d.
class ProjIsom {
 public:
  explicit ProjIsom(const Mat3& m);

  const Mat3& rep() const { return rep_; }
  Ring ring() const { return rep_.ring(); }
  /// Byte string that identifies the class exactly.
  const std::string& key() const { return key_; }

  ProjIsom operator*(const ProjIsom& o) const { return ProjIsom(rep_ * o.rep_); }
  ProjIsom inverse() const { return ProjIsom(rep_.inverse()); }

  friend bool operator==(const ProjIsom& a, const ProjIsom& b) { return a.key_ == b.key_; }

 private:
  Mat3 rep_;
  std::string key_;
};

/// Representative of {u M : u unit} that is least in the lexicographic order
/// of the row-major (a, b) coefficient sequence.
Mat3 canonical_rep(const Mat3& m);
bool proj_eq(const Mat3& m, const Mat3& n);
std::string canonical_key(const Mat3& m);

enum class IsometryClass {
  RegularElliptic,
  Loxodromic,
  Unipotent2Step,
  Unipotent3Step,
  OtherBoundary,
};

std::string_view to_string(IsometryClass c);

/// Scales m by a unit so that det = 1. Throws NormalizationError if no unit works.
Mat3 su_normalize(const Mat3& m);

/// |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27, exact (always an integer on O_d).
mpz_class goldman_discriminant(const QuadInt& tau);
/// The same quantity for the SU(2,1) rescaling of a matrix with unit
/// determinant det and trace tau. The rescaling itself may need a cube root
/// that is not in O_d (det = w in O_3), but |tau|^2 and tau^3 / det suffice.
mpz_class goldman_discriminant(const QuadInt& tau, const QuadInt& det);

IsometryClass classify(const Mat3& m);

/// Smallest n in [1, limit] with m^n projectively trivial.
std::optional<long> projective_order(const Mat3& m, long limit = 64);

/// Heisenberg translation with horizontal part z and vertical datum
/// s = i t / 2, i.e. top-right entry (-|z|^2 + i t) / 2 = -N(z)/2 + s.
/// Throws std::domain_error unless s is purely imaginary and that entry lies in O_d.
Mat3 heis_translation(const QuadInt& z, const QuadRat& s);

/// A point of the boundary sphere in Heisenberg coordinates, kept exact.
/// Finite points store z and s = i t / 2.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity(Ring r) { return BoundaryPoint(r); }
  static BoundaryPoint finite(const QuadRat& z, const QuadRat& s);
  static BoundaryPoint origin(Ring r) { return finite(QuadRat(r), QuadRat(r)); }

  bool is_infinity() const { return infinite_; }
  Ring ring() const { return z_.ring(); }
  const QuadRat& z() const { return z_; }
  const QuadRat& s() const { return s_; }
  /// t = 2 Im(s).
  double t_approx() const;

  std::string key() const;
  std::string to_string() const;

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || (a.z_ == b.z_ && a.s_ == b.s_));
  }

 private:
  explicit BoundaryPoint(Ring r) : infinite_(true), z_(r), s_(r) {}
  BoundaryPoint(QuadRat z, QuadRat s) : infinite_(false), z_(std::move(z)), s_(std::move(s)) {}

  bool infinite_;
  QuadRat z_;
  QuadRat s_;
};

BoundaryPoint boundary_action(const Mat3& m, const BoundaryPoint& p);
inline BoundaryPoint boundary_action(const ProjIsom& m, const BoundaryPoint& p) {
  return boundary_action(m.rep(), p);
}

}  // namespace picard
