#include "picard/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace picard {

template <std::size_t N>
std::array<QuadInt, N * N> SquareMatrix<N>::filled(Ring r) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<QuadInt, N * N>{((void)I, QuadInt(r))...};
  }(std::make_index_sequence<N * N>{});
}

template <std::size_t N>
SquareMatrix<N>::SquareMatrix(Ring r, std::initializer_list<QuadInt> entries)
    : ring_(r), e_(filled(r)) {
  if (entries.size() != N * N) throw std::invalid_argument("matrix literal has wrong entry count");
  std::size_t k = 0;
  for (const auto& x : entries) {
    if (x.ring() != r) throw RingMismatch();
    e_[k++] = x;
  }
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::identity(Ring r) {
  SquareMatrix m(r);
  for (std::size_t i = 0; i < N; ++i) m(i, i) = QuadInt(r, 1);
  return m;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::diagonal(Ring r, const std::array<QuadInt, N>& d) {
  SquareMatrix m(r);
  for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
  return m;
}

template <std::size_t N>
bool SquareMatrix<N>::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const QuadInt& x) { return x.is_zero(); });
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::adjoint() const {
  SquareMatrix m(ring_);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i).conj();
  return m;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::transpose() const {
  SquareMatrix m(ring_);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
  return m;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::scaled(const QuadInt& s) const {
  SquareMatrix m(*this);
  for (auto& x : m.e_) x *= s;
  return m;
}

template <std::size_t N>
QuadInt SquareMatrix<N>::trace() const {
  QuadInt t(ring_);
  for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
  return t;
}

template <std::size_t N>
QuadInt SquareMatrix<N>::det() const {
  const auto& m = *this;
  if constexpr (N == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  } else {
    static_assert(N == 3);
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::inverse() const {
  const QuadInt d = det();
  if (!d.is_unit()) throw NotInvertible("determinant " + d.to_string() + " is not a unit of O_d");
  const QuadInt dinv = d.conj();  // units have norm 1
  const auto& m = *this;
  SquareMatrix adj(ring_);
  if constexpr (N == 2) {
    adj(0, 0) = m(1, 1);
    adj(0, 1) = -m(0, 1);
    adj(1, 0) = -m(1, 0);
    adj(1, 1) = m(0, 0);
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        // cofactor of (j, i)
        const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
        const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
        QuadInt minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
      }
    }
  }
  return adj.scaled(dinv);
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::pow(long n) const {
  SquareMatrix base = n < 0 ? inverse() : *this;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  SquareMatrix acc = identity(ring_);
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

template <std::size_t N>
std::size_t SquareMatrix<N>::height_bits() const {
  std::size_t h = 0;
  for (const auto& x : e_) h = std::max(h, x.height_bits());
  return h;
}

template <std::size_t N>
std::string SquareMatrix<N>::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < N; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

template <std::size_t N>
SquareMatrix<N>& SquareMatrix<N>::operator+=(const SquareMatrix& o) {
  if (ring_ != o.ring_) throw RingMismatch();
  for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
  return *this;
}

template <std::size_t N>
SquareMatrix<N>& SquareMatrix<N>::operator-=(const SquareMatrix& o) {
  if (ring_ != o.ring_) throw RingMismatch();
  for (std::size_t k = 0; k < N * N; ++k) e_[k] -= o.e_[k];
  return *this;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::mul(const SquareMatrix& o) const {
  if (ring_ != o.ring_) throw RingMismatch();
  SquareMatrix m(ring_);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      QuadInt s(ring_);
      for (std::size_t k = 0; k < N; ++k) {
        const QuadInt& x = (*this)(i, k);
        const QuadInt& y = o(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        s += x * y;
      }
      m(i, j) = std::move(s);
    }
  }
  return m;
}

template class SquareMatrix<2>;
template class SquareMatrix<3>;

}  // namespace picard
