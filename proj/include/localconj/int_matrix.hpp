#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace localconj {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// Matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  const std::vector<Integer>& data() const { return data_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  Integer trace() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& c);
  /// col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Integer& c);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& c, IntMatrix a);
IntVector operator*(const IntMatrix& a, const IntVector& x);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);
IntMatrix mod_floor(const IntMatrix& a, const Integer& m);
IntVector mod_floor(const IntVector& v, const Integer& m);

bool is_zero_mod(const IntMatrix& a, const Integer& m);
bool is_zero_vector(const IntVector& v);

/// Column-major vectorization: entry (i, j) goes to index i + j * rows.
IntVector vec(const IntMatrix& x);
IntMatrix unvec(const IntVector& v, std::size_t n);

}  // namespace localconj
