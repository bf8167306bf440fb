#pragma once

// Exact arithmetic in the imaginary quadratic orders O_d, d in {1, 3, 7}.
//
// An element is stored as a + b*tau with integer coefficients, where tau is
// the standard generator of O_d:
//   d = 1: tau = i                 tau^2 = -1
//   d = 3: tau = w = (-1+i√3)/2    tau^2 = -1 - tau
//   d = 7: tau = (1+i√7)/2         tau^2 = tau - 2
// so i√3 = 1 + 2w and i√7 = 2*tau - 1.

#include <complex>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace picard {

enum class Ring : int { Gauss = 1, Eisenstein = 3, Seven = 7 };

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings O_d") {}
};

class UnsupportedRing : public std::invalid_argument {
 public:
  explicit UnsupportedRing(int d)
      : std::invalid_argument("unsupported ring selector d = " + std::to_string(d) +
                              " (expected 1, 3 or 7)") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Ring ring_from_d(int d);
int ring_d(Ring r);

/// Symbol used for tau in the textual form: "i", "w" or "t7".
std::string_view tau_symbol(Ring r);

class QuadInt {
 public:
  explicit QuadInt(Ring r, mpz_class a = 0, mpz_class b = 0);

  static QuadInt tau(Ring r) { return QuadInt(r, 0, 1); }
  /// i√d expressed over tau.
  static QuadInt i_sqrt_d(Ring r);

  Ring ring() const { return ring_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_unit() const { return norm() == 1; }

  QuadInt conj() const;
  /// x * conj(x), a nonnegative integer.
  mpz_class norm() const;
  /// x + conj(x) = 2 Re(x), an integer.
  mpz_class trace() const;

  std::complex<double> approx() const;
  std::string to_string() const;
  static QuadInt parse(Ring r, std::string_view text);

  /// Largest bit length of the two coefficients.
  std::size_t height_bits() const;

  QuadInt operator-() const { return QuadInt(ring_, -a_, -b_); }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (a, b); only meaningful within one ring.
  friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);

 private:
  Ring ring_;
  mpz_class a_;
  mpz_class b_;
};

QuadInt qi_mul(const QuadInt& x, const QuadInt& y);
QuadInt qi_conj(const QuadInt& x);
std::complex<double> qi_approx(const QuadInt& x);

/// Exact quotient x / y if y divides x in O_d, otherwise throws std::domain_error.
QuadInt exact_div(const QuadInt& x, const QuadInt& y);
bool divides(const QuadInt& y, const QuadInt& x);

/// All units of O_d in a fixed order, starting with 1.
const std::vector<QuadInt>& units(Ring r);

/// Cube roots of unity that lie in O_d (only 1 unless d = 3).
std::vector<QuadInt> cube_roots_of_unity(Ring r);

/// Element of the fraction field Q(i√d): num / den with den > 0 and
/// gcd(den, a, b) = 1.
class QuadRat {
 public:
  explicit QuadRat(Ring r) : num_(r), den_(1) {}
  QuadRat(QuadInt num);  // NOLINT(google-explicit-constructor)
  QuadRat(QuadInt num, mpz_class den);

  Ring ring() const { return num_.ring(); }
  const QuadInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  QuadRat conj() const { return QuadRat(num_.conj(), den_); }
  mpq_class norm() const;
  mpq_class real_part() const;
  /// Imaginary part divided by Im(tau); Im(x) = imag_over_tau() * Im(tau).
  mpq_class imag_over_tau() const;
  /// Imaginary part as a float.
  double imag_approx() const;

  std::complex<double> approx() const;
  std::string to_string() const;
  static QuadRat parse(Ring r, std::string_view text);

  QuadRat operator-() const { return QuadRat(-num_, den_); }
  QuadRat& operator+=(const QuadRat& o);
  QuadRat& operator-=(const QuadRat& o);
  QuadRat& operator*=(const QuadRat& o);
  QuadRat& operator/=(const QuadRat& o);

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  void reduce();

  QuadInt num_;
  mpz_class den_;
};

std::complex<double> qi_approx(const QuadRat& x);

/// Imaginary part of tau as a double (1, √3/2, √7/2).
double im_tau(Ring r);

}  // namespace picard
