#pragma once

// Field-specialised kernels shared by matrix, linalg and poly code.

#include <limits>
#include <utility>
#include <vector>

#include "brauerc/matrix.hpp"

namespace brauerc::detail {

struct FpOps {
  using T = std::uint32_t;
  std::uint32_t p;

  static std::vector<T>& data(Matrix& m) { return m.fp_data(); }
  static const std::vector<T>& data(const Matrix& m) { return m.fp_data(); }

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  T neg(T a) const { return a ? p - a : 0; }
  T inv(T a) const { return inverse_mod(a, p); }
  void sub_mul(T& x, const T& f, const T& y) const { x = sub(x, mul(f, y)); }
  void scale(T& x, const T& f) const { x = mul(x, f); }
  Scalar to_scalar(const T& a) const { return Scalar::from_residue(p, a); }
  T from_scalar(const Scalar& s) const { return s.residue(); }
};

struct QOps {
  using T = mpq_class;
  mutable mpq_class tmp;

  static std::vector<T>& data(Matrix& m) { return m.q_data(); }
  static const std::vector<T>& data(const Matrix& m) { return m.q_data(); }

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (sgn(a) == 0) throw MathError("division by zero");
    return 1 / a;
  }
  void sub_mul(T& x, const T& f, const T& y) const {
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), y.get_mpq_t());
    mpq_sub(x.get_mpq_t(), x.get_mpq_t(), tmp.get_mpq_t());
  }
  void scale(T& x, const T& f) const { mpq_mul(x.get_mpq_t(), x.get_mpq_t(), f.get_mpq_t()); }
  Scalar to_scalar(const T& a) const { return Scalar::from_mpq(a); }
  T from_scalar(const Scalar& s) const { return s.rational(); }
};

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(QOps{});
  return fn(FpOps{f.characteristic()});
}

// In-place reduced row echelon form of a rows x cols row-major array.
// Returns pivot columns; the first pivots.size() rows are the nonzero rows.
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
                                       std::size_t cols, std::size_t col_limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::size_t climit = std::min(cols, col_limit);
  for (std::size_t c = 0; c < climit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) ops.scale(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        if (!ops.is_zero(a[r * cols + j])) ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace brauerc::detail
