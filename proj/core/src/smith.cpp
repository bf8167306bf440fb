#include "picard/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace picard {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: wrong number of entries");
  std::size_t k = 0;
  for (long v : values) data_[k++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

struct Work {
  IntMatrix a, l, r;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < l.cols(); ++c) std::swap(l(i, c), l(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < r.rows(); ++k) std::swap(r(k, i), r(k, j));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
    for (std::size_t c = 0; c < l.cols(); ++c) l(i, c) += q * l(j, c);
  }
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) += q * a(k, j);
    for (std::size_t k = 0; k < r.rows(); ++k) r(k, i) += q * r(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < l.cols(); ++c) l(i, c) = -l(i, c);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  Work w{input, IntMatrix::identity(m), IntMatrix::identity(n)};

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (w.a(i, j) != 0 && (pi == m || abs(w.a(i, j)) < abs(w.a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.a(i, t) == 0) continue;
        w.add_row(i, t, -floor_div(w.a(i, t), w.a(t, t)));
        if (w.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.a(t, j) == 0) continue;
        w.add_col(j, t, -floor_div(w.a(t, j), w.a(t, t)));
        if (w.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold in any entry the pivot does not divide.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }
done:
  return SmithForm{std::move(w.a), std::move(w.l), std::move(w.r)};
}

}  // namespace picard
