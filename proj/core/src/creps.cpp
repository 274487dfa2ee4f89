#include "brauerc/creps.hpp"

#include <random>

#include "brauerc/hom.hpp"
#include "brauerc/linalg.hpp"

namespace brauerc {

namespace {

const BrauerCAlgebra& brauer_of(const Module& m) {
  auto b = dynamic_cast<const BrauerCAlgebra*>(&m.algebra());
  if (!b) throw MathError("not a module over a type C Brauer algebra");
  return *b;
}

void require_delta(const BrauerCAlgebra& b, int l) {
  if (l < 0 || l > b.rank()) throw MathError("layer out of range");
  if (l >= 1 && b.spec().delta.is_zero()) throw DeltaZeroError();
}

Dangle axis_dangle(int r, int l) { return layer_decompose(e_hat(r, l)).top; }

bool top_has_axis_arcs(const CDiagram& d, int l) {
  for (int i = 1; i <= l; ++i)
    if (d.partner(d.encode({false, -i})) != d.encode({false, i})) return false;
  return true;
}

// Action on an invariant subspace given by independent rows.
Matrix restrict_action(const Matrix& basis, const Matrix& act) {
  auto sol = solve_left(basis, basis * act);
  if (!sol) throw MathError("subspace is not invariant");
  return *sol;
}

}  // namespace

Module ind_l(const Module& x, int l, const BrauerPtr& b) {
  require_delta(*b, l);
  const int r = b->rank();
  if (group_degree(x) != r - l) throw MathError("ind_l: module is not over W_{r-l}");
  const Field f = b->field();
  auto w = hyperoctahedral_algebra(r - l, f);
  const Dangle axis = axis_dangle(r, l);
  const auto dangles = enumerate_dangles(r, l);
  std::map<Dangle, std::size_t> didx;
  for (std::size_t i = 0; i < dangles.size(); ++i) didx.emplace(dangles[i], i);
  const std::size_t dx = x.dim(), n = dangles.size() * dx;
  const SignedPerm id = SignedPerm::identity(r - l);

  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < b->num_generators(); ++g) {
    const CDiagram& gd = b->diagrams()[b->generator(g)];
    Matrix act(f, n, n);
    for (std::size_t d = 0; d < dangles.size(); ++d) {
      auto pr = multiply(recompose(axis, dangles[d], id), gd);
      if (pr.result.top_arcs() > l) continue;  // falls into J_{l+1}
      auto ld = layer_decompose(pr.result);
      if (ld.top != axis) throw MathError("ind_l: top dangle changed");
      Matrix block = x.basis_action(w->index_of(ld.through)).scaled(b->spec().delta.pow(pr.loops));
      act.set_block(d * dx, didx.at(ld.bottom) * dx, block);
    }
    gens.push_back(std::move(act));
  }
  return Module::trusted(b, n, std::move(gens));
}

BiModule e_l_B(int l, const BrauerPtr& b) {
  require_delta(*b, l);
  const int r = b->rank();
  const Field f = b->field();
  const Scalar delta = b->spec().delta;
  auto w = hyperoctahedral_algebra(r - l, f);
  std::vector<std::size_t> ys;
  std::map<CDiagram, std::size_t> yidx;
  for (std::size_t i = 0; i < b->dimension(); ++i)
    if (top_has_axis_arcs(b->diagrams()[i], l)) {
      yidx.emplace(b->diagrams()[i], ys.size());
      ys.push_back(i);
    }
  const std::size_t n = ys.size();
  BiModule out{w, b, n, {}, {}};
  const Dangle axis = axis_dangle(r, l);
  Scalar scale = l ? delta.pow(l).inverse() : f.one();
  for (const auto& s : generators(r - l)) {
    CDiagram st = recompose(axis, axis, s);
    Matrix left(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto pr = multiply(st, b->diagrams()[ys[j]]);
      left.add_to(j, yidx.at(pr.result), delta.pow(pr.loops) * scale);
    }
    out.left.push_back(std::move(left));
  }
  for (std::size_t g = 0; g < b->num_generators(); ++g) {
    Matrix right(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Term& t = b->times_generator(ys[j], g);
      if (!t.coef.is_zero()) right.add_to(j, yidx.at(b->diagrams()[t.index]), t.coef);
    }
    out.right.push_back(std::move(right));
  }
  return out;
}

Module Ind_l(const Module& x, int l, const BrauerPtr& b) {
  if (group_degree(x) != b->rank() - l) throw MathError("Ind_l: module is not over W_{r-l}");
  return tensor_over(x, e_l_B(l, b));
}

Module Res_l(const Module& n, int l) {
  const BrauerCAlgebra& b = brauer_of(n);
  require_delta(b, l);
  const int r = b.rank();
  const Field f = b.field();
  Scalar scale = l ? b.spec().delta.pow(l).inverse() : f.one();
  auto w = hyperoctahedral_algebra(r - l, f);
  Matrix image = row_basis(n.basis_action(b.index_of(e_hat(r, l))));
  const Dangle axis = axis_dangle(r, l);
  std::vector<Matrix> gens;
  for (const auto& s : generators(r - l)) {
    Matrix act = n.basis_action(b.index_of(recompose(axis, axis, s))).scaled(scale);
    gens.push_back(image.rows() ? restrict_action(image, act) : Matrix(f, 0, 0));
  }
  return Module::trusted(w, image.rows(), std::move(gens));
}

Module cell_module(const CellIndex& idx, const BrauerPtr& b, SignPlacement placement) {
  return ind_l(dual_specht(idx.lam, b->field(), placement), idx.l, b);
}

Module perm_module_B(const CellIndex& idx, const BrauerPtr& b, SignPlacement placement) {
  return Ind_l(perm_module_W(idx.lam, b->field(), placement).module, idx.l, b);
}

bool has_surjection(const Module& src, const Module& tgt, std::uint64_t seed) {
  if (tgt.dim() == 0) return true;
  if (src.dim() < tgt.dim()) return false;
  auto h = hom_space(src, tgt);
  if (h.maps.empty()) return false;
  const Field f = src.field();
  const std::size_t full = tgt.dim();
  Matrix images(f, 0, full);
  for (const auto& m : h.maps) images.append_rows(m);
  if (rank(images) < full) return false;
  for (const auto& m : h.maps)
    if (rank(m) == full) return true;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  const long long spread = f.is_rational() ? 7 : static_cast<long long>(f.characteristic());
  for (int t = 0; t < 64; ++t) {
    Matrix c(f, src.dim(), full);
    for (const auto& m : h.maps) c = c + m.scaled(f.from_int(static_cast<long long>(rng() % spread) - (f.is_rational() ? 3 : 0)));
    if (rank(c) == full) return true;
  }
  const std::uint64_t p = f.characteristic();
  if (p && h.dim() <= 2 && p * p <= 65536) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t c = 0; c < (h.dim() == 2 ? p : 1); ++c) {
        Matrix m = h.maps[0].scaled(f.from_int(static_cast<long long>(a)));
        if (h.dim() == 2) m = m + h.maps[1].scaled(f.from_int(static_cast<long long>(c)));
        if (rank(m) == full) return true;
      }
    return false;
  }
  throw UndecidedError("surjection search inconclusive");
}

std::vector<Matrix> j_layer_chain(const Module& m) {
  const BrauerCAlgebra& b = brauer_of(m);
  const int r = b.rank();
  std::vector<Matrix> chain{Matrix::identity(m.field(), m.dim())};
  for (int k = 1; k <= r; ++k) {
    Matrix span(m.field(), 0, m.dim());
    for (std::size_t i = 0; i < b.dimension(); ++i)
      if (b.diagrams()[i].top_arcs() >= k) span.append_rows(m.basis_action(i));
    chain.push_back(row_basis(span));
  }
  chain.push_back(Matrix(m.field(), 0, m.dim()));
  return chain;
}

TypeCContext::TypeCContext(int r, FieldSpec spec, SignPlacement placement, std::uint64_t seed)
    : r_(r), spec_(std::move(spec)), placement_(placement), seed_(seed), alg_(brauer_c_algebra(r, spec_)) {
  indices_ = cell_indices(r);
  if (spec_.delta.is_zero() && r >= 1) throw DeltaZeroError();
}

const Module& TypeCContext::cell(const CellIndex& idx) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = cells_.find(idx);
  if (it == cells_.end()) it = cells_.emplace(idx, cell_module(idx, alg_, placement_)).first;
  return it->second;
}

const Module& TypeCContext::perm(const CellIndex& idx) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = perms_.find(idx);
  if (it == perms_.end()) it = perms_.emplace(idx, perm_module_B(idx, alg_, placement_)).first;
  return it->second;
}

const std::vector<Summand>& TypeCContext::perm_summands(const CellIndex& idx) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = summands_.find(idx);
  if (it == summands_.end()) it = summands_.emplace(idx, split_indecomposables(perm(idx), seed_)).first;
  return it->second;
}

const Summand& TypeCContext::young(const CellIndex& idx) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = youngs_.find(idx);
  if (it != youngs_.end()) return it->second;
  Module target = ind_l(young_module_W(idx.lam, field(), placement_, seed_).module, idx.l, alg_);
  std::optional<Summand> found;
  for (const auto& s : perm_summands(idx)) {
    if (!has_surjection(s.module, target, seed_)) continue;
    if (found) throw MathError("Young module Y" + idx.to_string() + " is not unique");
    found = s;
  }
  if (!found) throw MathError("no summand of M" + idx.to_string() + " surjects onto ind_l Y");
  return youngs_.emplace(idx, *found).first->second;
}

std::map<CellIndex, int> TypeCContext::decompose_perm(const CellIndex& idx) {
  std::map<CellIndex, int> out;
  for (const auto& s : perm_summands(idx)) {
    std::optional<CellIndex> label;
    for (const auto& j : indices_) {  // decreasing Λ-order
      const Module& y = young(j).module;
      if (y.dim() == s.module.dim() && is_isomorphic(s.module, y, seed_)) {
        label = j;
        break;
      }
    }
    if (!label) throw MathError("summand of M" + idx.to_string() + " matches no Young module");
    ++out[*label];
  }
  return out;
}

std::vector<long long> TypeCContext::composition_vector(const Module& m) {
  auto v = composition_multiplicities(m, seed_);
  return {v.begin(), v.end()};
}

namespace {

// Solve target = sum c_i rows_i over Q; require a unique nonnegative integral answer.
std::optional<std::vector<long long>> solve_counts(const std::vector<std::vector<long long>>& rows,
                                                   const std::vector<long long>& target, std::string& why) {
  Field q = Field::rationals();
  const std::size_t cols = target.size();
  Matrix a(q, rows.size(), cols), t(q, 1, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, q.from_int(rows[i][j]));
  for (std::size_t j = 0; j < cols; ++j) t.set(0, j, q.from_int(target[j]));
  if (rank(a) < rows.size()) {
    why = "classes of the standard modules are linearly dependent";
    return std::nullopt;
  }
  auto sol = solve_left(a, t);
  if (!sol) {
    why = "not in the span of the standard classes";
    return std::nullopt;
  }
  std::vector<long long> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const mpq_class v = sol->at(0, i).rational();
    if (v.get_den() != 1 || v < 0) {
      why = "non-integral or negative multiplicity " + v.get_str();
      return std::nullopt;
    }
    out.push_back(v.get_num().get_si());
  }
  return out;
}

bool group_order_invertible(int n, Field f) {
  if (f.is_rational()) return true;
  const std::uint32_t p = f.characteristic();
  return p != 2 && static_cast<int>(p) > n;
}

}  // namespace

FiltrationReport TypeCContext::cell_filtration(const Module& m, FiltrationMethod method) {
  FiltrationReport rep;
  if (method == FiltrationMethod::grothendieck) {
    rep.method = "grothendieck";
    std::vector<std::vector<long long>> rows;
    for (const auto& idx : indices_) rows.push_back(composition_vector(cell(idx)));
    auto sol = solve_counts(rows, composition_vector(m), rep.message);
    if (!sol) {
      rep.ok = false;
      return rep;
    }
    for (std::size_t i = 0; i < indices_.size(); ++i)
      if ((*sol)[i]) rep.multiplicities[indices_[i]] = (*sol)[i];
    return rep;
  }

  rep.method = "explicit";
  auto chain = j_layer_chain(m);
  for (int k = 0; k <= r_; ++k) {
    const Matrix& upper = chain[k];
    if (upper.rows() == 0) continue;
    Module top = restrict_to(m, upper);
    auto lower = solve_left(upper, chain[k + 1]);
    if (!lower) throw MathError("J-layer chain is not decreasing");
    Module layer = quotient(top, *lower).module;
    if (layer.dim() == 0) continue;
    Module x = Res_l(layer, k);
    const std::size_t vk = enumerate_dangles(r_, k).size();
    if (x.dim() * vk != layer.dim()) {
      rep.ok = false;
      rep.message = "layer " + std::to_string(k) + " is not induced from its e_l-part";
      return rep;
    }
    auto parts = enumerate_bipartitions(r_ - k);
    std::vector<Module> duals;
    for (const auto& lam : parts) duals.push_back(dual_specht(lam, field(), placement_));
    std::vector<long long> counts;
    if (group_order_invertible(r_ - k, field())) {
      // semisimple W_{r-k}: dual Specht modules are the absolutely irreducible ones
      for (const auto& d : duals) counts.push_back(static_cast<long long>(hom_dim(d, x) / hom_dim(d, d)));
    } else {
      std::vector<std::vector<long long>> rows;
      for (const auto& d : duals) {
        auto v = composition_multiplicities(d, seed_);
        rows.emplace_back(v.begin(), v.end());
      }
      auto v = composition_multiplicities(x, seed_);
      auto sol = solve_counts(rows, {v.begin(), v.end()}, rep.message);
      if (!sol) {
        rep.ok = false;
        return rep;
      }
      counts = *sol;
    }
    std::size_t covered = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      covered += static_cast<std::size_t>(counts[i]) * duals[i].dim();
      if (counts[i]) rep.multiplicities[CellIndex{k, parts[i]}] = counts[i];
    }
    if (covered != x.dim()) {
      rep.ok = false;
      rep.message = "layer " + std::to_string(k) + " is not filtered by dual Specht modules";
      return rep;
    }
  }
  return rep;
}

Summand young_module_B(const CellIndex& idx, TypeCContext& ctx) { return ctx.young(idx); }
std::map<CellIndex, int> decompose_perm_B(const CellIndex& idx, TypeCContext& ctx) { return ctx.decompose_perm(idx); }
FiltrationReport cell_filtration(const Module& m, FiltrationMethod method, TypeCContext& ctx) {
  return ctx.cell_filtration(m, method);
}

}  // namespace brauerc
