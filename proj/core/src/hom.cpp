#include "brauerc/hom.hpp"

#include <deque>

#include "brauerc/linalg.hpp"

namespace brauerc {

Spin spin(const Module& m, const Matrix* seeds) {
  const Field f = m.field();
  const std::size_t d = m.dim();
  Spin s;
  s.roots = Matrix(f, 0, d);
  SpanBuilder span(f, d);
  std::vector<Matrix> rows;
  auto grow = [&](Matrix root) {
    s.roots.append_rows(root);
    const std::size_t r = s.roots.rows() - 1;
    rows.push_back(root);
    s.root_of.push_back(r);
    s.parent.push_back(-1);
    s.via.push_back(0);
    std::deque<std::size_t> queue{rows.size() - 1};
    while (!queue.empty()) {
      std::size_t j = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < m.gens().size(); ++g) {
        Matrix v = rows[j] * m.gen(g);
        auto dep = span.insert(v);
        if (dep) {
          s.relations.push_back({j, g, std::move(*dep)});
          continue;
        }
        rows.push_back(v);
        s.root_of.push_back(r);
        s.parent.push_back(static_cast<long>(j));
        s.via.push_back(g);
        queue.push_back(rows.size() - 1);
      }
    }
  };
  auto offer = [&](const Matrix& v) {
    if (span.contains(v)) return;
    span.insert(v);
    grow(v);
  };
  if (seeds)
    for (std::size_t i = 0; i < seeds->rows(); ++i) offer(seeds->row(i));
  for (std::size_t a = 0; a < d && span.size() < d; ++a) {
    Matrix e(f, 1, d);
    e.set(0, a, f.one());
    offer(e);
  }
  s.basis = d ? span.vectors() : Matrix(f, 0, 0);
  // Relation coefficient rows were recorded against a growing span; pad them.
  for (auto& rel : s.relations) {
    if (rel.coef.cols() == d) continue;
    Matrix padded(f, 1, d);
    if (rel.coef.cols()) padded.set_block(0, 0, rel.coef);
    rel.coef = std::move(padded);
  }
  return s;
}

bool is_homomorphism(const Module& m, const Module& n, const Matrix& f) {
  for (std::size_t g = 0; g < m.gens().size(); ++g)
    if (m.gen(g) * f != f * n.gen(g)) return false;
  return true;
}

// Unknowns: images w_i in n of the spin roots, stacked as one row of length k*dim n.
// images[t] is the (s x dim n) matrix of all current candidate images of basis[t].
HomBasis hom_space(const Module& m, const Module& n) {
  if (!same_algebra(m, n)) throw MathError("hom_space: modules over different algebras");
  const Field f = m.field();
  HomBasis out{m, n, {}};
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return out;
  Spin s = spin(m);
  const std::size_t k = s.roots.rows();
  std::vector<Matrix> img(dm);
  for (std::size_t t = 0; t < dm; ++t) {
    if (s.parent[t] < 0) {
      Matrix sel(f, k * dn, dn);
      sel.set_block(s.root_of[t] * dn, 0, Matrix::identity(f, dn));
      img[t] = std::move(sel);
    } else {
      img[t] = img[static_cast<std::size_t>(s.parent[t])] * n.gen(s.via[t]);
    }
  }
  std::size_t sdim = k * dn;
  for (const auto& rel : s.relations) {
    Matrix lhs = img[rel.row] * n.gen(rel.gen);
    for (std::size_t t = 0; t < dm; ++t) {
      Scalar c = rel.coef.at(0, t);
      if (!c.is_zero()) lhs = lhs - img[t].scaled(c);
    }
    if (lhs.is_zero()) continue;
    Matrix y = left_kernel_basis(lhs);
    sdim = y.rows();
    for (auto& m_t : img) m_t = sdim ? y * m_t : Matrix(f, 0, dn);
    if (sdim == 0) return out;
  }
  auto binv = inverse(s.basis);
  if (!binv) throw MathError("spin basis is singular");
  for (std::size_t i = 0; i < sdim; ++i) {
    Matrix phi(f, dm, dn);
    for (std::size_t t = 0; t < dm; ++t) phi.set_block(t, 0, img[t].row(i));
    out.maps.push_back(*binv * phi);
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).dim(); }

std::size_t ext1_dim(const Module& m, const Module& n, Presentation p) {
  if (!same_algebra(m, n)) throw MathError("ext1_dim: modules over different algebras");
  const Field f = m.field();
  if (m.dim() == 0 || n.dim() == 0) return 0;
  Matrix gens(f, 0, m.dim());
  if (p == Presentation::greedy)
    gens = spin(m).roots;
  else
    gens = Matrix::identity(f, m.dim());
  const std::size_t k = gens.rows();
  const auto& alg = m.algebra();
  const std::size_t na = alg.dimension();
  Module reg = Module::regular(m.algebra_ptr());
  Module free = reg;
  for (std::size_t i = 1; i < k; ++i) free = direct_sum(free, reg);
  // pi(e_{i,b}) = gens_i * b
  Matrix pi(f, k * na, m.dim());
  for (std::size_t b = 0; b < na; ++b) {
    Matrix act = m.basis_action(b);
    for (std::size_t i = 0; i < k; ++i) pi.set_block(i * na + b, 0, gens.row(i) * act);
  }
  if (rank(pi) != m.dim()) throw MathError("presentation is not surjective");
  Matrix omega = left_kernel_basis(pi);
  Module om = omega.rows() ? restrict_to(free, omega) : Module::zero(m.algebra_ptr());
  const std::size_t h_omega = hom_dim(om, n);
  const std::size_t h_m = hom_dim(m, n);
  return h_omega + h_m - k * n.dim();
}

}  // namespace brauerc
