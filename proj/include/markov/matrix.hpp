#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "markov/bigint.hpp"

namespace markov {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  /// Rows [first, first + count) as a new matrix.
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  std::vector<BigInt> column(std::size_t c) const;

  /// Rows separated by ';', entries by ','.
  std::string str() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) elimination; exact for any square matrix.
BigInt determinant(const IntMatrix& m);

/// Transposed cofactor matrix, so that m * adjugate(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace markov
