#include "brauerc/module.hpp"

#include <deque>

#include "brauerc/linalg.hpp"

namespace brauerc {

namespace {
// Taken before the delegated-to constructor moves the vector.
std::size_t first_rows(const std::vector<Matrix>& g) { return g.empty() ? 0 : g[0].rows(); }
}  // namespace

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix>&& gens)
    : alg_(std::move(algebra)), dim_(dim), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  if (gens_.size() != alg_->num_generators()) throw MathError("wrong number of generator actions");
  for (const auto& g : gens_)
    if (g.rows() != dim_ || g.cols() != dim_ || g.field() != alg_->field())
      throw MathError("generator action has the wrong shape or field: " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " vs " + std::to_string(dim_));
  cache_->actions.resize(alg_->dimension());
}

Module::Module(AlgebraPtr algebra, std::vector<Matrix> generator_actions)
    : Module(algebra, first_rows(generator_actions), std::move(generator_actions)) {
  if (gens_.empty()) throw MathError("use Module::trusted for algebras without generators");
  validate();
}

Module Module::trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> generator_actions) {
  return Module(std::move(algebra), dim, std::move(generator_actions));
}

Module Module::regular(AlgebraPtr algebra) {
  const std::size_t n = algebra->dimension();
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < algebra->num_generators(); ++g) {
    Matrix a(algebra->field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Term& t = algebra->times_generator(i, g);
      if (!t.coef.is_zero()) a.add_to(i, t.index, t.coef);
    }
    gens.push_back(std::move(a));
  }
  return trusted(algebra, n, std::move(gens));
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<Matrix> gens(algebra->num_generators(), Matrix(algebra->field(), 0, 0));
  return trusted(algebra, 0, std::move(gens));
}

Module Module::one_dimensional(AlgebraPtr algebra, const std::vector<Scalar>& values) {
  std::vector<Matrix> gens;
  for (const auto& v : values) gens.push_back(Matrix::from_scalars(algebra->field(), 1, 1, {v}));
  Module m = trusted(algebra, 1, std::move(gens));
  m.validate();
  return m;
}

Matrix Module::basis_action(std::size_t b) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->actions[b]) return *cache_->actions[b];
  }
  const Word& w = alg_->word(b);
  Matrix acc = Matrix::identity(field(), dim_);
  for (auto g : w.gens) acc = acc * gens_[g];
  if (!w.scale.is_one()) acc = acc.scaled(w.scale.inverse());
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->actions[b] = acc;
  return acc;
}

void Module::validate() const {
  const std::size_t n = alg_->dimension();
  for (std::size_t b = 0; b < n; ++b) {
    Matrix phi = basis_action(b);
    for (std::size_t g = 0; g < alg_->num_generators(); ++g) {
      const Term& t = alg_->times_generator(b, g);
      Matrix expect = t.coef.is_zero() ? Matrix(field(), dim_, dim_) : basis_action(t.index).scaled(t.coef);
      if (phi * gens_[g] != expect)
        throw MathError("action matrices violate the relation " + alg_->label(b) + " * generator " +
                        std::to_string(g) + " of " + alg_->key());
    }
  }
  if (!basis_action(alg_->identity()).is_identity()) throw MathError("identity does not act as identity");
}

bool same_algebra(const Module& a, const Module& b) { return a.algebra().key() == b.algebra().key(); }

Module restrict_to(const Module& m, const Matrix& basis) {
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) {
    if (basis.rows() == 0) {
      gens.emplace_back(m.field(), 0, 0);
      continue;
    }
    auto a = solve_left(basis, basis * g);
    if (!a) throw MathError("subspace is not invariant");
    gens.push_back(std::move(*a));
  }
  return Module::trusted(m.algebra_ptr(), basis.rows(), std::move(gens));
}

Submodule submodule(const Module& m, const Matrix& vectors) {
  SpanBuilder span(m.field(), m.dim());
  std::deque<Matrix> queue;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    Matrix v = vectors.row(i);
    if (!span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Matrix v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : m.gens()) {
      Matrix w = v * g;
      if (!span.insert(w)) queue.push_back(std::move(w));
    }
  }
  Matrix basis = span.size() ? span.vectors() : Matrix(m.field(), 0, m.dim());
  return {restrict_to(m, basis), basis};
}

Quotient quotient(const Module& m, const Matrix& sub) {
  const std::size_t n = m.dim();
  Echelon e = rref(sub.rows() ? sub : Matrix(m.field(), 0, n));
  std::vector<bool> piv(n, false);
  for (auto c : e.pivots) piv[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c)
    if (!piv[c]) keep.push_back(c);
  // Reducing e_a modulo the subspace and reading the non-pivot coordinates.
  Matrix proj(m.field(), n, keep.size());
  Matrix rb = e.basis();
  for (std::size_t a = 0; a < n; ++a) {
    Matrix v(m.field(), 1, n);
    v.set(0, a, m.field().one());
    if (piv[a]) {
      std::size_t k = 0;
      while (e.pivots[k] != a) ++k;
      v = v - rb.row(k);
    }
    proj.set_block(a, 0, v.select_cols(keep));
  }
  Matrix sel(m.field(), keep.size(), n);
  for (std::size_t i = 0; i < keep.size(); ++i) sel.set(i, keep[i], m.field().one());
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) gens.push_back(sel * g * proj);
  return {Module::trusted(m.algebra_ptr(), keep.size(), std::move(gens)), proj};
}

Module direct_sum(const Module& a, const Module& b) {
  if (!same_algebra(a, b)) throw MathError("direct sum over different algebras");
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.gens().size(); ++g) {
    if (a.dim() == 0) {
      gens.push_back(b.gen(g));
      continue;
    }
    if (b.dim() == 0) {
      gens.push_back(a.gen(g));
      continue;
    }
    gens.push_back(Matrix::block_diagonal({a.gen(g), b.gen(g)}));
  }
  return Module::trusted(a.algebra_ptr(), a.dim() + b.dim(), std::move(gens));
}

Module dual_module(const Module& m) {
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < m.gens().size(); ++g) {
    std::size_t inv = m.algebra().involution(m.algebra().generator(g));
    gens.push_back(m.basis_action(inv).transpose());
  }
  return Module::trusted(m.algebra_ptr(), m.dim(), std::move(gens));
}

Module inner_tensor(const Module& a, const Module& b) {
  if (!same_algebra(a, b)) throw MathError("inner tensor over different algebras");
  if (!std::dynamic_pointer_cast<const GroupAlgebra>(a.algebra_ptr()))
    throw MathError("inner tensor products need a group algebra");
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.gens().size(); ++g) gens.push_back(Matrix::kron(a.gen(g), b.gen(g)));
  return Module::trusted(a.algebra_ptr(), a.dim() * b.dim(), std::move(gens));
}

Module tensor_over(const Module& x, const BiModule& y) {
  if (x.algebra().key() != y.left_algebra->key()) throw MathError("tensor_over: left structure mismatch");
  const Field f = x.field();
  const std::size_t n = x.dim() * y.dim;
  Matrix ix = Matrix::identity(f, x.dim()), iy = Matrix::identity(f, y.dim);
  std::vector<Matrix> acts;
  for (const auto& rg : y.right) acts.push_back(n ? Matrix::kron(ix, rg) : Matrix(f, 0, 0));
  Module plain = Module::trusted(y.right_algebra, n, std::move(acts));
  Matrix rel(f, 0, n);
  for (std::size_t s = 0; s < y.left.size(); ++s) {
    if (n == 0) break;
    rel.append_rows(Matrix::kron(x.gen(s), iy) - Matrix::kron(ix, y.left[s]));
  }
  return quotient(plain, row_basis(rel)).module;
}

Module pull_back(const Module& m, AlgebraPtr target, const std::vector<std::size_t>& images) {
  if (images.size() != target->num_generators()) throw MathError("pull_back: generator count mismatch");
  std::vector<Matrix> gens;
  for (auto b : images) gens.push_back(m.basis_action(b));
  return Module::trusted(std::move(target), m.dim(), std::move(gens));
}

}  // namespace brauerc
