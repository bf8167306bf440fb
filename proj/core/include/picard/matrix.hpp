#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "picard/exactring.hpp"

namespace picard {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// N x N matrix with entries in O_d.
template <std::size_t N>
class SquareMatrix {
 public:
  explicit SquareMatrix(Ring r) : ring_(r), e_(filled(r)) {}

  /// Row-major literal of ring elements.
  SquareMatrix(Ring r, std::initializer_list<QuadInt> entries);

  static SquareMatrix identity(Ring r);
  static SquareMatrix diagonal(Ring r, const std::array<QuadInt, N>& d);

  Ring ring() const { return ring_; }
  const QuadInt& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }
  QuadInt& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  const std::array<QuadInt, N * N>& entries() const { return e_; }

  bool is_zero() const;
  bool is_identity() const { return *this == identity(ring_); }

  SquareMatrix adjoint() const;  // conjugate transpose
  SquareMatrix transpose() const;
  SquareMatrix scaled(const QuadInt& s) const;
  QuadInt trace() const;
  QuadInt det() const;
  /// Exact inverse; requires a unit determinant.
  SquareMatrix inverse() const;
  SquareMatrix pow(long n) const;

  std::size_t height_bits() const;
  std::string to_string() const;

  SquareMatrix& operator+=(const SquareMatrix& o);
  SquareMatrix& operator-=(const SquareMatrix& o);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(const SquareMatrix& a) { return a.scaled(QuadInt(a.ring_, -1)); }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) { return a.mul(b); }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.ring_ == b.ring_ && a.e_ == b.e_;
  }

 private:
  static std::array<QuadInt, N * N> filled(Ring r);
  SquareMatrix mul(const SquareMatrix& o) const;

  Ring ring_;
  std::array<QuadInt, N * N> e_;
};

using Mat2 = SquareMatrix<2>;
using Mat3 = SquareMatrix<3>;

extern template class SquareMatrix<2>;
extern template class SquareMatrix<3>;

}  // namespace picard
