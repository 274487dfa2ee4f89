#include "brauerc/matrix.hpp"

#include <sstream>

#include "dense_ops.hpp"

namespace brauerc {

using detail::dispatch;
using detail::FpOps;
using detail::QOps;

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_rational())
    q_.assign(rows * cols, mpq_class(0));
  else
    fp_.assign(rows * cols, 0);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw MathError("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, f.from_int(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_scalars(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) throw MathError("entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (field_.is_rational()) return Scalar::from_mpq(q_[i * cols_ + j]);
  return Scalar::from_residue(field_.characteristic(), fp_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.characteristic() != field_.characteristic()) throw MathError("scalar from a different field");
  if (field_.is_rational())
    q_[i * cols_ + j] = v.rational();
  else
    fp_[i * cols_ + j] = v.residue();
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

void Matrix::check_same(const Matrix& o, const char* what) const {
  if (field_ != o.field_) throw MathError(std::string(what) + ": field mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o, "matrix product");
  if (cols_ != o.rows_) throw MathError("matrix product: shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  const std::size_t n = o.cols_;
  if (!field_.is_rational()) {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t batch = sq == 0 ? ~0ull : std::numeric_limits<std::uint64_t>::max() / sq - 1;
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t count = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        std::uint64_t a = fp_[i * cols_ + j];
        if (!a) continue;
        const std::uint32_t* brow = &o.fp_[j * n];
        for (std::size_t k = 0; k < n; ++k) acc[k] += a * brow[k];
        if (++count == batch) {
          for (auto& x : acc) x %= p;
          count = 0;
        }
      }
      for (std::size_t k = 0; k < n; ++k) out.fp_[i * n + k] = static_cast<std::uint32_t>(acc[k] % p);
    }
    return out;
  }
  mpq_class t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpq_class& a = q_[i * cols_ + j];
      if (sgn(a) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& b = o.q_[j * n + k];
        if (sgn(b) == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        mpq_add(out.q_[i * n + k].get_mpq_t(), out.q_[i * n + k].get_mpq_t(), t.get_mpq_t());
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum: shape mismatch");
  Matrix out = *this;
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.add(d[i], e[i]);
  });
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o, "matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference: shape mismatch");
  Matrix out = *this;
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.sub(d[i], e[i]);
  });
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.characteristic() != field_.characteristic()) throw MathError("scalar from a different field");
  Matrix out = *this;
  dispatch(field_, [&](auto ops) {
    auto f = ops.from_scalar(s);
    for (auto& x : ops.data(out)) ops.scale(x, f);
  });
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) d[j * rows_ + i] = e[i * cols_ + j];
  });
  return out;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw MathError("row range out of bounds");
  std::vector<std::size_t> idx;
  for (std::size_t i = begin; i < end; ++i) idx.push_back(i);
  return select_rows(idx);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(*this);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= rows_) throw MathError("row index out of bounds");
      std::copy(e.begin() + idx[i] * cols_, e.begin() + (idx[i] + 1) * cols_, d.begin() + i * cols_);
    }
  });
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) d[i * idx.size() + j] = e[i * cols_ + idx[j]];
  });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw MathError("block out of bounds");
  Matrix out(field_, nr, nc);
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& e = ops.data(*this);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = e[(r0 + i) * cols_ + c0 + j];
  });
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  check_same(b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw MathError("block out of bounds");
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(*this);
    const auto& e = ops.data(b);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = e[i * b.cols_ + j];
  });
}

void Matrix::append_rows(const Matrix& b) {
  if (rows_ == 0 && cols_ == 0) {
    *this = b;
    return;
  }
  check_same(b, "append_rows");
  if (b.cols_ != cols_) throw MathError("append_rows: column mismatch");
  dispatch(field_, [&](auto ops) {
    auto& d = ops.data(*this);
    const auto& e = ops.data(b);
    d.insert(d.end(), e.begin(), e.end());
  });
  rows_ += b.rows_;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out.append_rows(b);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  a.check_same(b, "hstack");
  if (a.rows_ != b.rows_) throw MathError("hstack: row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  a.check_same(b, "kron");
  Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  dispatch(a.field_, [&](auto ops) {
    auto& d = ops.data(out);
    const auto& x = ops.data(a);
    const auto& y = ops.data(b);
    const std::size_t oc = out.cols_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& s = x[i * a.cols_ + j];
        if (ops.is_zero(s)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            d[(i * b.rows_ + k) * oc + j * b.cols_ + l] = ops.mul(s, y[k * b.cols_ + l]);
      }
  });
  return out;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) nr += b.rows_, nc += b.cols_;
  Matrix out(blocks[0].field_, nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return out;
}

bool Matrix::is_zero() const {
  return dispatch(field_, [&](auto ops) {
    for (const auto& x : ops.data(*this))
      if (!ops.is_zero(x)) return false;
    return true;
  });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && fp_ == o.fp_ && q_ == o.q_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace brauerc
