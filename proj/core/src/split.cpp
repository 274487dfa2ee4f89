#include "brauerc/split.hpp"

#include <mutex>
#include <random>

#include "brauerc/linalg.hpp"
#include "brauerc/poly.hpp"

namespace brauerc {

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) return f.from_int(static_cast<long long>(rng() % 7) - 3);
  return f.from_int(static_cast<long long>(rng() % f.characteristic()));
}

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng) {
  Matrix acc = basis[0].scaled(random_scalar(basis[0].field(), rng));
  for (std::size_t i = 1; i < basis.size(); ++i) acc = acc + basis[i].scaled(random_scalar(basis[i].field(), rng));
  return acc;
}

// Generalised eigenspace decomposition of m along theta, if theta's minimal
// polynomial has at least two coprime factors.
std::optional<std::vector<Matrix>> fitting_pieces(const Matrix& theta, std::uint64_t seed) {
  Poly mp = minimal_polynomial(theta);
  auto fac = factor(mp, seed);
  if (fac.size() < 2) return std::nullopt;
  std::vector<Matrix> pieces;
  for (const auto& pf : fac) {
    Matrix q = evaluate(pf.factor, theta);
    q = matrix_power(q, static_cast<std::size_t>(pf.multiplicity));
    pieces.push_back(left_kernel_basis(q));
  }
  return pieces;
}

// Single eigenvalue of theta in the field, if its minimal polynomial is (x-c)^e.
std::optional<Scalar> sole_eigenvalue(const Matrix& theta, std::uint64_t seed, bool& splits) {
  Poly mp = minimal_polynomial(theta);
  auto fac = factor(mp, seed);
  splits = fac.size() >= 2;
  if (fac.size() != 1 || fac[0].factor.degree() != 1) return std::nullopt;
  return -fac[0].factor.coeff(0);
}

bool generates_nilpotent_algebra(const std::vector<Matrix>& gens, std::size_t n) {
  if (gens.empty() || n == 0) return true;
  const Field f = gens[0].field();
  auto flat = [&](const Matrix& m) {
    Matrix v(f, 1, n * n);
    for (std::size_t i = 0; i < n; ++i) v.set_block(0, i * n, m.row(i));
    return v;
  };
  std::vector<Matrix> layer;
  {
    SpanBuilder sb(f, n * n);
    for (const auto& g : gens)
      if (!sb.insert(flat(g)) && !g.is_zero()) layer.push_back(g);
  }
  // Products of length > n vanish in a nilpotent matrix algebra.
  for (std::size_t len = 1; len <= n && !layer.empty(); ++len) {
    SpanBuilder sb(f, n * n);
    std::vector<Matrix> next;
    for (const auto& a : layer)
      for (const auto& g : gens) {
        Matrix p = a * g;
        if (p.is_zero()) continue;
        if (!sb.insert(flat(p))) next.push_back(std::move(p));
      }
    layer = std::move(next);
  }
  return layer.empty();
}

struct LocalCheck {
  std::optional<bool> local;
  std::optional<std::vector<Matrix>> pieces;  // a split found along the way
};

LocalCheck check_local(const Module& m, const std::vector<Matrix>& end, std::uint64_t seed) {
  LocalCheck out;
  const std::size_t n = m.dim();
  if (end.size() <= 1) {
    out.local = true;
    return out;
  }
  std::vector<Matrix> shifted;
  bool all_rational = true;
  for (const auto& theta : end) {
    bool splits = false;
    auto c = sole_eigenvalue(theta, seed, splits);
    if (splits) {
      out.pieces = fitting_pieces(theta, seed);
      out.local = false;
      return out;
    }
    if (!c) {
      all_rational = false;
      continue;
    }
    shifted.push_back(theta - Matrix::identity(m.field(), n).scaled(*c));
  }
  if (!all_rational) return out;
  out.local = generates_nilpotent_algebra(shifted, n);
  return out;
}

void split_rec(const Module& m, const Matrix& incl, std::uint64_t seed, std::vector<Summand>& out) {
  if (m.dim() <= 1) {
    out.push_back({m, incl});
    return;
  }
  HomBasis end = hom_space(m, m);
  LocalCheck lc = check_local(m, end.maps, seed);
  if (lc.local && *lc.local && !lc.pieces) {
    out.push_back({m, incl});
    return;
  }
  std::optional<std::vector<Matrix>> pieces = lc.pieces;
  if (!pieces) {
    std::mt19937_64 rng(seed * 0x2545F4914F6CDD1Dull + m.dim());
    for (int attempt = 0; attempt < 200 && !pieces; ++attempt)
      pieces = fitting_pieces(random_combination(end.maps, rng), seed + attempt);
  }
  if (!pieces) {
    if (!lc.local) throw UndecidedError("cannot split or certify a module of dimension " + std::to_string(m.dim()));
    throw UndecidedError("endomorphism ring is not local but no splitting endomorphism was found");
  }
  std::uint64_t child = seed;
  for (const auto& basis : *pieces) {
    if (basis.rows() == 0) continue;
    Module sub = restrict_to(m, basis);
    split_rec(sub, basis * incl, ++child, out);
  }
}

}  // namespace

std::vector<Summand> split_indecomposables(const Module& m, std::uint64_t seed) {
  std::vector<Summand> out;
  if (m.dim() == 0) return out;
  split_rec(m, Matrix::identity(m.field(), m.dim()), seed, out);
  return out;
}

std::optional<bool> is_local_endomorphism_ring(const Module& m) {
  if (m.dim() == 0) return false;
  HomBasis end = hom_space(m, m);
  LocalCheck lc = check_local(m, end.maps, 0);
  return lc.local;
}

bool is_indecomposable(const Module& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  auto local = is_local_endomorphism_ring(m);
  if (local) return *local;
  return split_indecomposables(m, seed).size() == 1;
}

namespace {

bool invertible(const Matrix& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

// m indecomposable: m is isomorphic to a module of equal dimension iff some
// composite m -> n -> m of basis maps is not nilpotent.
bool iso_via_composites(const HomBasis& mn, const HomBasis& nm) {
  for (const auto& f : mn.maps)
    for (const auto& g : nm.maps)
      if (!is_nilpotent(f * g)) return true;
  return false;
}

bool search_invertible(const HomBasis& h, std::uint64_t seed) {
  for (const auto& f : h.maps)
    if (invertible(f)) return true;
  const Field fld = h.source.field();
  std::mt19937_64 rng(seed ^ 0x51ed270b27a5ull);
  for (int i = 0; i < 64; ++i)
    if (invertible(random_combination(h.maps, rng))) return true;
  if (!fld.is_rational() && h.dim() <= 2) {
    const std::uint32_t p = fld.characteristic();
    if (static_cast<std::uint64_t>(p) * p <= 1u << 16)
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < (h.dim() == 2 ? p : 1u); ++b) {
          Matrix f = h.maps[0].scaled(fld.from_int(a));
          if (h.dim() == 2) f = f + h.maps[1].scaled(fld.from_int(b));
          if (invertible(f)) return true;
        }
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  if (!same_algebra(a, b)) throw MathError("is_isomorphic: modules over different algebras");
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  HomBasis ab = hom_space(a, b), ba = hom_space(b, a);
  if (ab.dim() != ba.dim() || ab.dim() == 0) return false;
  if (hom_dim(a, a) != hom_dim(b, b)) return false;
  if (search_invertible(ab, seed)) return true;
  auto local = is_local_endomorphism_ring(a);
  if (local && *local) return iso_via_composites(ab, ba);
  // Krull-Schmidt: compare indecomposable summands.
  auto sa = split_indecomposables(a, seed), sb = split_indecomposables(b, seed);
  if (sa.size() != sb.size()) return false;
  std::vector<bool> used(sb.size(), false);
  for (const auto& x : sa) {
    bool matched = false;
    for (std::size_t j = 0; j < sb.size() && !matched; ++j) {
      if (used[j] || sb[j].module.dim() != x.module.dim()) continue;
      HomBasis xy = hom_space(x.module, sb[j].module);
      if (xy.dim() == 0) continue;
      HomBasis yx = hom_space(sb[j].module, x.module);
      if (iso_via_composites(xy, yx)) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

std::shared_ptr<const ProjectiveCatalogue> projective_catalogue(const AlgebraPtr& alg, std::uint64_t seed) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const ProjectiveCatalogue>> cache;
  const std::string key = alg->key() + "#" + std::to_string(seed);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto cat = std::make_shared<ProjectiveCatalogue>();
  for (auto& s : split_indecomposables(Module::regular(alg), seed)) {
    bool found = false;
    for (std::size_t i = 0; i < cat->projectives.size() && !found; ++i)
      if (is_isomorphic(cat->projectives[i], s.module, seed)) {
        ++cat->simple_dims[i];
        found = true;
      }
    if (!found) {
      cat->projectives.push_back(s.module);
      cat->simple_dims.push_back(1);
    }
  }
  // Split fields only: dim D = multiplicity of P_D in the regular module and dim End(D) = 1.
  for (std::size_t i = 0; i < cat->projectives.size(); ++i)
    if (hom_dim(cat->projectives[i], cat->projectives[i]) == 0) throw MathError("degenerate projective");
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, cat);
  return cat;
}

std::vector<std::size_t> composition_multiplicities(const Module& m, std::uint64_t seed) {
  auto cat = projective_catalogue(m.algebra_ptr(), seed);
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (std::size_t i = 0; i < cat->projectives.size(); ++i) {
    out.push_back(hom_dim(cat->projectives[i], m));
    total += out.back() * cat->simple_dims[i];
  }
  if (total != m.dim()) throw MathError("composition multiplicities do not account for the dimension");
  return out;
}

}  // namespace brauerc
