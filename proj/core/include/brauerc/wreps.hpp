#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauerc/algebra.hpp"
#include "brauerc/bicomb.hpp"
#include "brauerc/module.hpp"
#include "brauerc/split.hpp"

namespace brauerc {

struct PermModuleW {
  BiPartition shape;
  SignPlacement placement;
  BiTableau t0;
  std::vector<BiTabloid> tabloids;
  std::map<BiTabloid, std::size_t> index;
  Module module;
};

PermModuleW perm_module_W(const BiPartition& lam, Field f, SignPlacement placement);
// 2^(r - |lam^s|) r! / prod(parts!), s the sign-carrying component.
long long perm_dimension_formula(const BiPartition& lam, SignPlacement placement);

// Row vector in the tabloid basis of m.
Matrix polytabloid(const PermModuleW& m, const BiTableau& t);

struct SpechtW {
  PermModuleW perm;
  Matrix basis;  // rows in tabloid coordinates
  Module module;
};

SpechtW specht_W(const BiPartition& lam, Field f, SignPlacement placement);
inline Module specht_module(const BiPartition& lam, Field f, SignPlacement placement) {
  return specht_W(lam, f, placement).module;
}
Matrix gram_matrix(const SpechtW& s);
Module simple_D(const SpechtW& s);
Module dual_specht(const BiPartition& lam, Field f, SignPlacement placement);

Module trivial_module_W(int r, Field f);
Module sign_module_W(int r, Field f);
Module sign_twist(const Module& m);

// The summand of M(lam) meeting S(lam); throws if zero or several summands do.
Summand young_module_W(const BiPartition& lam, Field f, SignPlacement placement, std::uint64_t seed = 0);

// Decomposition of M(lam) into Young modules, labels found by isomorphism.
std::map<BiPartition, int> decompose_perm_W(const BiPartition& lam, Field f, SignPlacement placement,
                                            std::uint64_t seed = 0);

// Induction from W_a x W_b (letters 1..a and a+1..a+b) of the outer product x ⊠ y.
Module induce_product(const Module& x, const Module& y);

int group_degree(const Module& m);

struct PlacementCheck {
  SignPlacement placement;
  bool unitriangular = true;
  // multiplicity of S(mu) in M(lam), char 0
  std::map<std::pair<BiPartition, BiPartition>, std::size_t> multiplicities;
};

struct ConventionOracle {
  std::vector<PlacementCheck> checks;  // first, second
  std::optional<SignPlacement> chosen;
};

// Char 0, r = 2: which placement makes every M(lam) = S(lam) + sum of S(mu), mu dominating lam.
const ConventionOracle& convention_oracle();
SignPlacement resolve_placement(std::optional<SignPlacement> requested);

}  // namespace brauerc
