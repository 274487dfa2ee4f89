#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "brauerc/field.hpp"

namespace brauerc {

// Dense matrix over a Field. Prime-field entries live in a residue vector,
// rational entries in an mpq vector; only one of the two is ever populated.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_scalars(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  Matrix row(std::size_t i) const { return row_range(i, i + 1); }
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void append_rows(const Matrix& b);

  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

  // Backend storage, row-major.
  std::vector<std::uint32_t>& fp_data() { return fp_; }
  const std::vector<std::uint32_t>& fp_data() const { return fp_; }
  std::vector<mpq_class>& q_data() { return q_; }
  const std::vector<mpq_class>& q_data() const { return q_; }

 private:
  void check_same(const Matrix& o, const char* what) const;
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

}  // namespace brauerc
