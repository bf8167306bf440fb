#include "picard/cxhyp.hpp"

#include <stdexcept>

namespace picard {

namespace {

void append_mpz(std::string& out, const mpz_class& v) {
  const int sgn = mpz_sgn(v.get_mpz_t());
  std::size_t count = 0;
  std::string buf(mpz_sizeinbase(v.get_mpz_t(), 256) + 1, '\0');
  mpz_export(buf.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.push_back(static_cast<char>(sgn + 1));
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((count >> shift) & 0xff));
  out.append(buf.data(), count);
}

bool lex_less(const Mat3& x, const Mat3& y) {
  for (std::size_t k = 0; k < 9; ++k) {
    const auto c = x.entries()[k] <=> y.entries()[k];
    if (c != 0) return c < 0;
  }
  return false;
}

QuadRat from_rational(Ring r, const mpq_class& q) {
  return QuadRat(QuadInt(r, q.get_num()), q.get_den());
}

bool is_scalar(const Mat3& m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2) && !m(0, 0).is_zero();
}

}  // namespace

HermForm::HermForm(Mat3 matrix) : m_(std::move(matrix)) {
  if (!(m_.adjoint() == m_)) throw std::invalid_argument("form matrix is not Hermitian");
}

HermForm HermForm::ball(Ring r) {
  return HermForm(Mat3::diagonal(r, {QuadInt(r, 1), QuadInt(r, 1), QuadInt(r, -1)}));
}

HermForm HermForm::siegel(Ring r) {
  Mat3 m(r);
  m(0, 2) = QuadInt(r, 1);
  m(1, 1) = QuadInt(r, 1);
  m(2, 0) = QuadInt(r, 1);
  return HermForm(m);
}

bool is_unitary(const Mat3& m, const HermForm& h) {
  if (m.ring() != h.matrix().ring()) throw RingMismatch();
  return m.adjoint() * h.matrix() * m == h.matrix();
}

bool preserves_disk_form(const Mat2& m) {
  const Ring r = m.ring();
  const Mat2 d = Mat2::diagonal(r, {QuadInt(r, 1), QuadInt(r, -1)});
  return m.adjoint() * d * m == d;
}

Mat3 canonical_rep(const Mat3& m) {
  if (m.is_zero()) throw std::invalid_argument("zero matrix has no projective class");
  const auto& us = units(m.ring());
  Mat3 best = m;
  for (std::size_t k = 1; k < us.size(); ++k) {
    Mat3 cand = m.scaled(us[k]);
    if (lex_less(cand, best)) best = std::move(cand);
  }
  return best;
}

std::string canonical_key(const Mat3& m) {
  const Mat3 c = canonical_rep(m);
  std::string key;
  key.reserve(9 * 2 * 12);
  for (const auto& x : c.entries()) {
    append_mpz(key, x.a());
    append_mpz(key, x.b());
  }
  return key;
}

bool proj_eq(const Mat3& m, const Mat3& n) {
  if (m.ring() != n.ring()) throw RingMismatch();
  for (const auto& u : units(m.ring())) {
    if (n.scaled(u) == m) return true;
  }
  return false;
}

ProjIsom::ProjIsom(const Mat3& m) : rep_(canonical_rep(m)), key_(canonical_key(rep_)) {}

std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::RegularElliptic: return "RegularElliptic";
    case IsometryClass::Loxodromic: return "Loxodromic";
    case IsometryClass::Unipotent2Step: return "Unipotent2Step";
    case IsometryClass::Unipotent3Step: return "Unipotent3Step";
    case IsometryClass::OtherBoundary: return "OtherBoundary";
  }
  return "?";
}

Mat3 su_normalize(const Mat3& m) {
  const QuadInt d = m.det();
  for (const auto& u : units(m.ring())) {
    if ((u * u * u * d).is_one()) return m.scaled(u);
  }
  throw NormalizationError("determinant " + d.to_string() +
                           " cannot be scaled to 1 by a unit of O_d");
}

mpz_class goldman_discriminant(const QuadInt& tau) { return goldman_discriminant(tau, QuadInt(tau.ring(), 1)); }

mpz_class goldman_discriminant(const QuadInt& tau, const QuadInt& det) {
  if (!det.is_unit()) throw NormalizationError("determinant " + det.to_string() + " is not a unit");
  const mpz_class n = tau.norm();
  const mpz_class tr3 = (det.conj() * tau * tau * tau).trace();  // 2 Re(tau^3 / det)
  return n * n - 4 * tr3 + 18 * n - 27;
}

IsometryClass classify(const Mat3& m) {
  const Ring r = m.ring();
  const QuadInt t = m.trace();
  const mpz_class f = goldman_discriminant(t, m.det());
  if (f < 0) return IsometryClass::RegularElliptic;
  if (f > 0) return IsometryClass::Loxodromic;
  // m - (t/3) I, scaled by 3 to stay integral; unipotent up to scalar iff nilpotent.
  const Mat3 nil = m.scaled(QuadInt(r, 3)) - Mat3::identity(r).scaled(t);
  if (nil.is_zero()) return IsometryClass::OtherBoundary;
  const Mat3 sq = nil * nil;
  if (sq.is_zero()) return IsometryClass::Unipotent2Step;
  if ((sq * nil).is_zero()) return IsometryClass::Unipotent3Step;
  return IsometryClass::OtherBoundary;
}

std::optional<long> projective_order(const Mat3& m, long limit) {
  Mat3 p = m;
  for (long n = 1; n <= limit; ++n) {
    if (is_scalar(p)) return n;
    p = p * m;
  }
  return std::nullopt;
}

Mat3 heis_translation(const QuadInt& z, const QuadRat& s) {
  const Ring r = z.ring();
  if (s.ring() != r) throw RingMismatch();
  if (s.real_part() != 0) throw std::domain_error("vertical datum s = it/2 must be purely imaginary");
  const QuadRat corner = from_rational(r, mpq_class(-z.norm(), 2)) + s;
  if (!corner.is_integral()) {
    throw std::domain_error("Heisenberg translation entry " + corner.to_string() + " is not in O_d");
  }
  Mat3 t = Mat3::identity(r);
  t(0, 1) = -z.conj();
  t(0, 2) = corner.num();
  t(1, 2) = z;
  return t;
}

BoundaryPoint BoundaryPoint::finite(const QuadRat& z, const QuadRat& s) {
  if (z.ring() != s.ring()) throw RingMismatch();
  if (s.real_part() != 0) throw std::domain_error("boundary point needs s = it/2 purely imaginary");
  return BoundaryPoint(z, s);
}

double BoundaryPoint::t_approx() const { return 2.0 * s_.imag_approx(); }

std::string BoundaryPoint::key() const {
  if (infinite_) return "inf";
  return z_.to_string() + "|" + s_.to_string();
}

std::string BoundaryPoint::to_string() const {
  if (infinite_) return "infinity";
  return "(z = " + z_.to_string() + ", it/2 = " + s_.to_string() + ")";
}

BoundaryPoint boundary_action(const Mat3& m, const BoundaryPoint& p) {
  const Ring r = m.ring();
  if (p.ring() != r) throw RingMismatch();
  std::array<QuadRat, 3> v{QuadRat(r), QuadRat(r), QuadRat(r)};
  if (p.is_infinity()) {
    v[0] = QuadRat(QuadInt(r, 1));
  } else {
    v[0] = from_rational(r, -p.z().norm() / 2) + p.s();
    v[1] = p.z();
    v[2] = QuadRat(QuadInt(r, 1));
  }
  std::array<QuadRat, 3> y{QuadRat(r), QuadRat(r), QuadRat(r)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) y[i] += QuadRat(m(i, j)) * v[j];

  if (y[2].is_zero()) {
    if (!y[1].is_zero()) throw std::logic_error("image of a null vector left the boundary");
    return BoundaryPoint::infinity(r);
  }
  const QuadRat z = y[1] / y[2];
  const QuadRat x = y[0] / y[2];
  const QuadRat s = x + from_rational(r, z.norm() / 2);
  if (s.real_part() != 0) throw std::logic_error("image of a boundary point is not null");
  return BoundaryPoint::finite(z, s);
}

}  // namespace picard
