#include "picard/exactring.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace picard {

namespace {

// tau^2 = p*tau + q
struct MinPoly {
  int p;
  int q;
};

MinPoly min_poly(Ring r) {
  switch (r) {
    case Ring::Gauss: return {0, -1};
    case Ring::Eisenstein: return {-1, -1};
    case Ring::Seven: return {1, -2};
  }
  throw UnsupportedRing(static_cast<int>(r));
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Ring ring_from_d(int d) {
  switch (d) {
    case 1: return Ring::Gauss;
    case 3: return Ring::Eisenstein;
    case 7: return Ring::Seven;
    default: throw UnsupportedRing(d);
  }
}

int ring_d(Ring r) { return static_cast<int>(r); }

std::string_view tau_symbol(Ring r) {
  switch (r) {
    case Ring::Gauss: return "i";
    case Ring::Eisenstein: return "w";
    case Ring::Seven: return "t7";
  }
  throw UnsupportedRing(static_cast<int>(r));
}

double im_tau(Ring r) {
  switch (r) {
    case Ring::Gauss: return 1.0;
    case Ring::Eisenstein: return std::sqrt(3.0) / 2.0;
    case Ring::Seven: return std::sqrt(7.0) / 2.0;
  }
  throw UnsupportedRing(static_cast<int>(r));
}

QuadInt::QuadInt(Ring r, mpz_class a, mpz_class b) : ring_(r), a_(std::move(a)), b_(std::move(b)) {
  (void)min_poly(r);
}

QuadInt QuadInt::i_sqrt_d(Ring r) {
  switch (r) {
    case Ring::Gauss: return QuadInt(r, 0, 1);
    case Ring::Eisenstein: return QuadInt(r, 1, 2);
    case Ring::Seven: return QuadInt(r, -1, 2);
  }
  throw UnsupportedRing(static_cast<int>(r));
}

QuadInt QuadInt::conj() const {
  // conj(tau) = p - tau
  const auto mp = min_poly(ring_);
  return QuadInt(ring_, a_ + b_ * mp.p, -b_);
}

mpz_class QuadInt::norm() const {
  const auto mp = min_poly(ring_);
  return a_ * a_ + a_ * b_ * mp.p - b_ * b_ * mp.q;
}

mpz_class QuadInt::trace() const {
  const auto mp = min_poly(ring_);
  return 2 * a_ + b_ * mp.p;
}

std::complex<double> QuadInt::approx() const {
  const auto mp = min_poly(ring_);
  const double a = a_.get_d();
  const double b = b_.get_d();
  return {a + b * (mp.p / 2.0), b * im_tau(ring_)};
}

std::size_t QuadInt::height_bits() const {
  const std::size_t ba = a_ == 0 ? 0 : mpz_sizeinbase(a_.get_mpz_t(), 2);
  const std::size_t bb = b_ == 0 ? 0 : mpz_sizeinbase(b_.get_mpz_t(), 2);
  return std::max(ba, bb);
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  if (ring_ != o.ring_) throw RingMismatch();
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  if (ring_ != o.ring_) throw RingMismatch();
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  if (ring_ != o.ring_) throw RingMismatch();
  const auto mp = min_poly(ring_);
  // (a + b t)(c + e t) = ac + be q + (ae + bc + be p) t
  mpz_class be = b_ * o.b_;
  mpz_class na = a_ * o.a_ + be * mp.q;
  mpz_class nb = a_ * o.b_ + b_ * o.a_ + be * mp.p;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
  if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadInt::to_string() const {
  const std::string sym(tau_symbol(ring_));
  if (b_ == 0) return a_.get_str();
  if (a_ == 0) return b_.get_str() + "*" + sym;
  std::string out = a_.get_str();
  if (b_ < 0) {
    mpz_class nb = -b_;
    out += "-" + nb.get_str();
  } else {
    out += "+" + b_.get_str();
  }
  return out + "*" + sym;
}

QuadInt QuadInt::parse(Ring r, std::string_view text) {
  const std::string s = trim(text);
  const std::string sym(tau_symbol(r));
  if (s.empty()) throw ParseError("empty ring element");
  mpz_class a = 0;
  mpz_class b = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    bool has_sym = false;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) throw ParseError("missing coefficient before '*' in '" + s + "'");
      ++pos;
      if (s.compare(pos, sym.size(), sym) != 0) throw ParseError("expected '" + sym + "' in '" + s + "'");
      pos += sym.size();
      has_sym = true;
    } else if (s.compare(pos, sym.size(), sym) == 0) {
      pos += sym.size();
      has_sym = true;
    }
    if (digits.empty() && !has_sym) throw ParseError("malformed ring element '" + s + "'");
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    coeff *= sign;
    (has_sym ? b : a) += coeff;
    any = true;
  }
  return QuadInt(r, a, b);
}

QuadInt qi_mul(const QuadInt& x, const QuadInt& y) { return x * y; }
QuadInt qi_conj(const QuadInt& x) { return x.conj(); }
std::complex<double> qi_approx(const QuadInt& x) { return x.approx(); }
std::complex<double> qi_approx(const QuadRat& x) { return x.approx(); }

bool divides(const QuadInt& y, const QuadInt& x) {
  if (y.ring() != x.ring()) throw RingMismatch();
  if (y.is_zero()) return x.is_zero();
  const QuadInt t = x * y.conj();
  const mpz_class n = y.norm();
  return mpz_divisible_p(t.a().get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(t.b().get_mpz_t(), n.get_mpz_t());
}

QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
  if (y.ring() != x.ring()) throw RingMismatch();
  if (y.is_zero()) throw std::domain_error("division by zero in O_d");
  const QuadInt t = x * y.conj();
  const mpz_class n = y.norm();
  if (!mpz_divisible_p(t.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.b().get_mpz_t(), n.get_mpz_t())) {
    throw std::domain_error(y.to_string() + " does not divide " + x.to_string());
  }
  mpz_class qa = t.a() / n;
  mpz_class qb = t.b() / n;
  return QuadInt(x.ring(), qa, qb);
}

const std::vector<QuadInt>& units(Ring r) {
  static const std::vector<QuadInt> gauss = {
      QuadInt(Ring::Gauss, 1), QuadInt(Ring::Gauss, -1), QuadInt(Ring::Gauss, 0, 1),
      QuadInt(Ring::Gauss, 0, -1)};
  // 1, -1, w, -w, w^2 = -1-w, -w^2 = 1+w
  static const std::vector<QuadInt> eisenstein = {
      QuadInt(Ring::Eisenstein, 1),      QuadInt(Ring::Eisenstein, -1),
      QuadInt(Ring::Eisenstein, 0, 1),   QuadInt(Ring::Eisenstein, 0, -1),
      QuadInt(Ring::Eisenstein, -1, -1), QuadInt(Ring::Eisenstein, 1, 1)};
  static const std::vector<QuadInt> seven = {QuadInt(Ring::Seven, 1), QuadInt(Ring::Seven, -1)};
  switch (r) {
    case Ring::Gauss: return gauss;
    case Ring::Eisenstein: return eisenstein;
    case Ring::Seven: return seven;
  }
  throw UnsupportedRing(static_cast<int>(r));
}

std::vector<QuadInt> cube_roots_of_unity(Ring r) {
  std::vector<QuadInt> out;
  for (const auto& u : units(r)) {
    if ((u * u * u).is_one()) out.push_back(u);
  }
  return out;
}

// ---------------------------------------------------------------------------

QuadRat::QuadRat(QuadInt num) : num_(std::move(num)), den_(1) {}

QuadRat::QuadRat(QuadInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("zero denominator");
  reduce();
}

void QuadRat::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  mpz_class g = gcd(gcd(num_.a(), num_.b()), den_);
  if (g > 1) {
    mpz_class a = num_.a() / g;
    mpz_class b = num_.b() / g;
    num_ = QuadInt(num_.ring(), a, b);
    den_ /= g;
  }
}

mpq_class QuadRat::norm() const {
  mpq_class q(num_.norm(), den_ * den_);
  q.canonicalize();
  return q;
}

mpq_class QuadRat::real_part() const {
  mpq_class q(num_.trace(), 2 * den_);
  q.canonicalize();
  return q;
}

mpq_class QuadRat::imag_over_tau() const {
  mpq_class q(num_.b(), den_);
  q.canonicalize();
  return q;
}

double QuadRat::imag_approx() const { return imag_over_tau().get_d() * im_tau(ring()); }

std::complex<double> QuadRat::approx() const {
  return {real_part().get_d(), imag_approx()};
}

std::string QuadRat::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

QuadRat QuadRat::parse(Ring r, std::string_view text) {
  std::string s = trim(text);
  const auto slash = s.rfind('/');
  if (slash == std::string::npos) return QuadRat(QuadInt::parse(r, s));
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (num.size() >= 2 && num.front() == '(' && num.back() == ')') num = num.substr(1, num.size() - 2);
  if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed denominator in '" + s + "'");
  }
  return QuadRat(QuadInt::parse(r, num), mpz_class(den));
}

QuadRat& QuadRat::operator+=(const QuadRat& o) {
  num_ = num_ * QuadInt(ring(), o.den_) + o.num_ * QuadInt(ring(), den_);
  den_ *= o.den_;
  reduce();
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) { return *this += -o; }

QuadRat& QuadRat::operator*=(const QuadRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i sqrt d)");
  // x / (n/m) = x * m * conj(n) / N(n)
  num_ *= o.num_.conj() * QuadInt(ring(), o.den_);
  den_ *= o.num_.norm();
  reduce();
  return *this;
}

}  // namespace picard
