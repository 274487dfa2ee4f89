#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "brauerc/matrix.hpp"

namespace brauerc {

struct Echelon {
  Matrix reduced;  // full rref, zero rows kept at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix basis() const { return reduced.row_range(0, rank); }
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Rows span {x : m x^T = 0}.
Matrix kernel_basis(const Matrix& m);
// Rows span {y : y m = 0}.
Matrix left_kernel_basis(const Matrix& m);
// Reduced basis of the row space.
Matrix row_basis(const Matrix& m);
Matrix intersect_spans(const Matrix& u, const Matrix& v);

// x with a x = y (column systems), nullopt if inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& y);
// x with x a = b, nullopt if inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

Matrix matrix_power(const Matrix& a, std::size_t e);
bool is_nilpotent(const Matrix& a);

// Incrementally grows a list of linearly independent row vectors and reports
// how dependent vectors decompose over the vectors inserted so far.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t dim);
  ~SpanBuilder();
  SpanBuilder(SpanBuilder&&) noexcept;
  SpanBuilder& operator=(SpanBuilder&&) noexcept;

  // nullopt: v was independent and has been appended. Otherwise the
  // 1 x size() coefficient row c with v = c * vectors().
  std::optional<Matrix> insert(const Matrix& v);
  bool contains(const Matrix& v) const;
  std::size_t size() const;
  std::size_t dim() const;
  Matrix vectors() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace brauerc
