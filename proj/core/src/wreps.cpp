#include "brauerc/wreps.hpp"

#include <deque>
#include <mutex>

#include "brauerc/hom.hpp"
#include "brauerc/linalg.hpp"

namespace brauerc {

namespace {
long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Module make_module(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> gens) {
  return Module::trusted(std::move(alg), dim, std::move(gens));
}
}  // namespace

int group_degree(const Module& m) {
  auto g = dynamic_cast<const GroupAlgebra*>(&m.algebra());
  if (!g) throw MathError("not a module over a hyperoctahedral group algebra");
  return g->degree();
}

long long perm_dimension_formula(const BiPartition& lam, SignPlacement placement) {
  const int r = lam.size();
  const Partition& s = sign_component(placement) == 0 ? lam.first : lam.second;
  long long d = factorial(r) << (r - size(s));
  for (int v : lam.first) d /= factorial(v);
  for (int v : lam.second) d /= factorial(v);
  return d;
}

PermModuleW perm_module_W(const BiPartition& lam, Field f, SignPlacement placement) {
  const int r = lam.size();
  auto alg = hyperoctahedral_algebra(r, f);
  auto gens = generators(r);
  BiTableau t0 = BiTableau::initial(lam);
  std::vector<BiTabloid> tabloids{BiTabloid::of(t0, placement)};
  std::map<BiTabloid, std::size_t> index{{tabloids[0], 0}};
  // orbit of {t0}; tabloids are permuted, images recorded per generator
  std::vector<std::vector<std::size_t>> image;
  for (std::size_t i = 0; i < tabloids.size(); ++i) {
    BiTableau t{lam, tabloids[i].rows};
    std::vector<std::size_t> row;
    for (const auto& g : gens) {
      BiTabloid next = BiTabloid::of(t.act(g), placement);
      auto [it, fresh] = index.emplace(next, tabloids.size());
      if (fresh) tabloids.push_back(next);
      row.push_back(it->second);
    }
    image.push_back(std::move(row));
  }
  const std::size_t n = tabloids.size();
  std::vector<Matrix> acts(gens.size(), Matrix(f, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) acts[g].set(i, image[i][g], f.one());
  Module m = make_module(alg, n, std::move(acts));
  return PermModuleW{lam, placement, t0, std::move(tabloids), std::move(index), std::move(m)};
}

Matrix polytabloid(const PermModuleW& m, const BiTableau& t) {
  Field f = m.module.field();
  Matrix v(f, 1, m.module.dim());
  for (const auto& s : column_group(t, m.placement)) {
    auto it = m.index.find(BiTabloid::of(t.act(s), m.placement));
    if (it == m.index.end()) throw MathError("tableau is not of the module's shape");
    v.add_to(0, it->second, f.from_int(s.sign()));
  }
  return v;
}

SpechtW specht_W(const BiPartition& lam, Field f, SignPlacement placement) {
  PermModuleW perm = perm_module_W(lam, f, placement);
  SpanBuilder span(f, perm.module.dim());
  for (const auto& w : enumerate_group(lam.size())) {
    span.insert(polytabloid(perm, perm.t0.act(w)));
    if (span.size() == perm.module.dim()) break;
  }
  Matrix basis = span.vectors();
  Module s = restrict_to(perm.module, basis);
  return SpechtW{std::move(perm), std::move(basis), std::move(s)};
}

Matrix gram_matrix(const SpechtW& s) { return s.basis * s.basis.transpose(); }

Module simple_D(const SpechtW& s) {
  Matrix radical = left_kernel_basis(gram_matrix(s));
  return quotient(s.module, radical).module;
}

Module dual_specht(const BiPartition& lam, Field f, SignPlacement placement) {
  return dual_module(specht_module(lam, f, placement));
}

Module trivial_module_W(int r, Field f) {
  auto alg = hyperoctahedral_algebra(r, f);
  return Module::one_dimensional(alg, std::vector<Scalar>(alg->num_generators(), f.one()));
}

Module sign_module_W(int r, Field f) {
  auto alg = hyperoctahedral_algebra(r, f);
  return Module::one_dimensional(alg, std::vector<Scalar>(alg->num_generators(), f.from_int(-1)));
}

Module sign_twist(const Module& m) { return inner_tensor(m, sign_module_W(group_degree(m), m.field())); }

Summand young_module_W(const BiPartition& lam, Field f, SignPlacement placement, std::uint64_t seed) {
  SpechtW s = specht_W(lam, f, placement);
  std::optional<Summand> found;
  for (auto& part : split_indecomposables(s.perm.module, seed)) {
    if (intersect_spans(part.inclusion, s.basis).rows() == 0) continue;
    if (found) throw MathError("Young module of " + lam.to_string() + " is not unique");
    found = std::move(part);
  }
  if (!found) throw MathError("no summand of M(" + lam.to_string() + ") meets S(" + lam.to_string() + ")");
  return *found;
}

std::map<BiPartition, int> decompose_perm_W(const BiPartition& lam, Field f, SignPlacement placement,
                                            std::uint64_t seed) {
  const int r = lam.size();
  std::vector<std::pair<BiPartition, Module>> catalogue;
  for (const auto& mu : enumerate_bipartitions(r))
    catalogue.emplace_back(mu, young_module_W(mu, f, placement, seed).module);
  std::map<BiPartition, int> out;
  for (const auto& part : split_indecomposables(perm_module_W(lam, f, placement).module, seed)) {
    std::optional<BiPartition> label;
    for (const auto& [mu, y] : catalogue)
      if (y.dim() == part.module.dim() && is_isomorphic(part.module, y, seed)) {
        label = mu;
        break;
      }
    if (!label) throw MathError("summand of M(" + lam.to_string() + ") matches no Young module");
    ++out[*label];
  }
  return out;
}

Module induce_product(const Module& x, const Module& y) {
  const int a = group_degree(x), b = group_degree(y), r = a + b;
  Field f = x.field();
  if (y.field() != f) throw MathError("induce_product: field mismatch");
  auto sub = product_subgroup_algebra(a, b, f);
  auto big = hyperoctahedral_algebra(r, f);
  // outer product as a module over W_a x W_b
  std::vector<Matrix> outer;
  Matrix ix = Matrix::identity(f, x.dim()), iy = Matrix::identity(f, y.dim());
  for (const auto& g : x.gens()) outer.push_back(Matrix::kron(g, iy));
  for (const auto& g : y.gens()) outer.push_back(Matrix::kron(ix, g));
  Module xy = make_module(sub, x.dim() * y.dim(), std::move(outer));

  const std::size_t n = big->dimension();
  BiModule reg{sub, big, n, {}, {}};
  for (std::size_t s = 0; s < sub->num_generators(); ++s) {
    const SignedPerm& gs = sub->elements()[sub->generator(s)];
    Matrix l(f, n, n);
    for (std::size_t j = 0; j < n; ++j) l.set(j, big->index_of(gs * big->elements()[j]), f.one());
    reg.left.push_back(std::move(l));
  }
  reg.right = Module::regular(big).gens();
  return tensor_over(xy, reg);
}

namespace {
PlacementCheck check_placement(SignPlacement pl) {
  Field q = Field::rationals();
  PlacementCheck c{pl, true, {}};
  auto all = enumerate_bipartitions(2);
  std::vector<Module> specht;
  for (const auto& mu : all) specht.push_back(specht_module(mu, q, pl));
  for (const auto& lam : all) {
    Module m = perm_module_W(lam, q, pl).module;
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::size_t mult = hom_dim(specht[k], m);  // End S(mu) = Q in char 0
      c.multiplicities[{lam, all[k]}] = mult;
      if (all[k] == lam ? mult != 1 : (mult && !dominates(all[k], lam))) c.unitriangular = false;
    }
  }
  return c;
}
}  // namespace

const ConventionOracle& convention_oracle() {
  static std::once_flag once;
  static ConventionOracle result;
  std::call_once(once, [] {
    for (auto pl : {SignPlacement::first, SignPlacement::second}) result.checks.push_back(check_placement(pl));
    if (result.checks[0].unitriangular != result.checks[1].unitriangular)
      result.chosen = result.checks[0].unitriangular ? SignPlacement::first : SignPlacement::second;
  });
  return result;
}

SignPlacement resolve_placement(std::optional<SignPlacement> requested) {
  if (requested) return *requested;
  const auto& o = convention_oracle();
  if (!o.chosen) throw MathError("convention oracle did not single out a sign placement");
  return *o.chosen;
}

}  // namespace brauerc
