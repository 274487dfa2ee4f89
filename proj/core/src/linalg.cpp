#include "brauerc/linalg.hpp"

#include <variant>

#include "dense_ops.hpp"

namespace brauerc {

using detail::dispatch;

Echelon rref(const Matrix& m) {
  Echelon e;
  e.reduced = m;
  e.pivots = dispatch(m.field(), [&](auto ops) {
    return detail::rref_in_place(ops, ops.data(e.reduced), m.rows(), m.cols());
  });
  e.rank = e.pivots.size();
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) { return rref(m).basis(); }

Matrix kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(m.field(), free.size(), n);
  dispatch(m.field(), [&](auto ops) {
    auto& kd = ops.data(k);
    const auto& rd = ops.data(e.reduced);
    for (std::size_t f = 0; f < free.size(); ++f) {
      kd[f * n + free[f]] = ops.one();
      for (std::size_t i = 0; i < e.rank; ++i) kd[f * n + e.pivots[i]] = ops.neg(rd[i * n + free[f]]);
    }
  });
  return k;
}

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

Matrix intersect_spans(const Matrix& u, const Matrix& v) {
  if (u.cols() != v.cols()) throw MathError("intersect_spans: column mismatch");
  if (u.rows() == 0 || v.rows() == 0) return Matrix(u.field(), 0, u.cols());
  Matrix k = left_kernel_basis(Matrix::vstack(u, v));
  if (k.rows() == 0) return Matrix(u.field(), 0, u.cols());
  Matrix a = k.block(0, 0, k.rows(), u.rows());
  return row_basis(a * u);
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& y) {
  if (a.rows() != y.rows()) throw MathError("solve: row mismatch");
  const std::size_t n = a.cols(), k = y.cols();
  Matrix aug = Matrix::hstack(a, y);
  std::optional<Matrix> result;
  dispatch(a.field(), [&](auto ops) {
    auto& d = ops.data(aug);
    auto piv = detail::rref_in_place(ops, d, aug.rows(), n + k, n);
    const std::size_t w = n + k;
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
      for (std::size_t j = n; j < w; ++j)
        if (!ops.is_zero(d[i * w + j])) return;
    Matrix x(a.field(), n, k);
    auto& xd = ops.data(x);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) xd[piv[i] * k + j] = d[i * w + n + j];
    result = std::move(x);
  });
  return result;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto x = solve_right(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_right(a, Matrix::identity(a.field(), a.rows()));
}

Matrix matrix_power(const Matrix& a, std::size_t e) {
  Matrix acc = Matrix::identity(a.field(), a.rows()), base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool is_nilpotent(const Matrix& a) {
  if (a.rows() == 0) return true;
  // a^n = 0 for an n x n nilpotent; repeated squaring reaches exponent >= n.
  Matrix p = a;
  std::size_t e = 1;
  while (e < a.rows()) {
    p = p * p;
    e *= 2;
    if (p.is_zero()) return true;
  }
  return p.is_zero();
}

// Each stored echelon row carries its expression over the inserted vectors.
template <class Ops>
struct SpanCore {
  Ops ops;
  std::size_t dim;
  std::vector<std::vector<typename Ops::T>> inserted;
  std::vector<std::vector<typename Ops::T>> echelon;  // pivot entry normalised to one
  std::vector<std::size_t> pivot;
  std::vector<std::vector<typename Ops::T>> expr;  // echelon[i] = sum expr[i][t] inserted[t]

  // Reduces v against the echelon rows, accumulating coefficients.
  void reduce(std::vector<typename Ops::T>& v, std::vector<typename Ops::T>& coef) const {
    coef.assign(inserted.size(), ops.zero());
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      auto f = v[pivot[i]];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (!ops.is_zero(echelon[i][j])) ops.sub_mul(v[j], f, echelon[i][j]);
      for (std::size_t t = 0; t < expr[i].size(); ++t)
        if (!ops.is_zero(expr[i][t])) {
          auto x = ops.mul(f, expr[i][t]);
          coef[t] = ops.add(coef[t], x);
        }
    }
  }
};

struct SpanBuilder::Impl {
  Field field;
  std::variant<SpanCore<detail::FpOps>, SpanCore<detail::QOps>> core;
};

SpanBuilder::SpanBuilder(Field f, std::size_t dim) : impl_(std::make_unique<Impl>()) {
  impl_->field = f;
  if (f.is_rational())
    impl_->core = SpanCore<detail::QOps>{detail::QOps{}, dim, {}, {}, {}, {}};
  else
    impl_->core = SpanCore<detail::FpOps>{detail::FpOps{f.characteristic()}, dim, {}, {}, {}, {}};
}
SpanBuilder::~SpanBuilder() = default;
SpanBuilder::SpanBuilder(SpanBuilder&&) noexcept = default;
SpanBuilder& SpanBuilder::operator=(SpanBuilder&&) noexcept = default;

std::optional<Matrix> SpanBuilder::insert(const Matrix& v) {
  if (v.rows() != 1 || v.cols() != dim()) throw MathError("SpanBuilder: expected a row vector of matching length");
  return std::visit(
      [&](auto& c) -> std::optional<Matrix> {
        const auto& ops = c.ops;
        auto w = ops.data(v);
        std::vector<std::remove_cvref_t<decltype(w[0])>> coef;
        c.reduce(w, coef);
        std::size_t lead = c.dim;
        for (std::size_t j = 0; j < c.dim; ++j)
          if (!ops.is_zero(w[j])) {
            lead = j;
            break;
          }
        if (lead == c.dim) {
          Matrix out(impl_->field, 1, c.inserted.size());
          ops.data(out) = coef;
          return out;
        }
        // w = v - sum coef[t] inserted[t]; normalise.
        auto inv = ops.inv(w[lead]);
        for (auto& x : w) ops.scale(x, inv);
        for (auto& x : coef) x = ops.neg(ops.mul(x, inv));
        coef.push_back(inv);
        for (auto& e : c.expr) e.push_back(ops.zero());
        // keep echelon rows fully reduced in the new pivot column
        for (std::size_t i = 0; i < c.echelon.size(); ++i) {
          auto f = c.echelon[i][lead];
          if (ops.is_zero(f)) continue;
          for (std::size_t j = 0; j < c.dim; ++j)
            if (!ops.is_zero(w[j])) ops.sub_mul(c.echelon[i][j], f, w[j]);
          for (std::size_t t = 0; t < coef.size(); ++t)
            if (!ops.is_zero(coef[t])) ops.sub_mul(c.expr[i][t], f, coef[t]);
        }
        c.echelon.push_back(std::move(w));
        c.pivot.push_back(lead);
        c.expr.push_back(std::move(coef));
        c.inserted.push_back(ops.data(v));
        return std::nullopt;
      },
      impl_->core);
}

bool SpanBuilder::contains(const Matrix& v) const {
  return std::visit(
      [&](const auto& c) {
        auto w = c.ops.data(v);
        std::vector<std::remove_cvref_t<decltype(w[0])>> coef;
        c.reduce(w, coef);
        for (const auto& x : w)
          if (!c.ops.is_zero(x)) return false;
        return true;
      },
      impl_->core);
}

std::size_t SpanBuilder::size() const {
  return std::visit([](const auto& c) { return c.inserted.size(); }, impl_->core);
}

std::size_t SpanBuilder::dim() const {
  return std::visit([](const auto& c) { return c.dim; }, impl_->core);
}

Matrix SpanBuilder::vectors() const {
  return std::visit(
      [&](const auto& c) {
        Matrix out(impl_->field, c.inserted.size(), c.dim);
        auto& d = c.ops.data(out);
        for (std::size_t i = 0; i < c.inserted.size(); ++i)
          std::copy(c.inserted[i].begin(), c.inserted[i].end(), d.begin() + i * c.dim);
        return out;
      },
      impl_->core);
}

}  // namespace brauerc
