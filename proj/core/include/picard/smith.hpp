#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace picard {

/// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Exact determinant by fraction-free elimination.
mpz_class determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix D;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix L;  // unimodular, rows x rows
  IntMatrix R;  // unimodular, cols x cols
  std::vector<mpz_class> diagonal() const;
};

/// L * A * R == D.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace picard
