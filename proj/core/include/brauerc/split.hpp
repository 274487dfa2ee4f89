#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "brauerc/hom.hpp"

namespace brauerc {

// Raised when the seeded searches cannot certify an answer.
struct UndecidedError : MathError {
  using MathError::MathError;
};

struct Summand {
  Module module;
  Matrix inclusion;  // rows: basis of the summand in the ambient coordinates
};

std::vector<Summand> split_indecomposables(const Module& m, std::uint64_t seed = 0);

// Exact: End(m) is local, i.e. every basis endomorphism has a single
// eigenvalue in the field and the shifted basis generates a nilpotent algebra.
// nullopt when some basis endomorphism has no eigenvalue in the field.
std::optional<bool> is_local_endomorphism_ring(const Module& m);
bool is_indecomposable(const Module& m, std::uint64_t seed = 0);

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed = 0);

// Projective indecomposables of an algebra, one per isomorphism class, with
// the dimension of the corresponding simple head.
struct ProjectiveCatalogue {
  std::vector<Module> projectives;
  std::vector<std::size_t> simple_dims;
};

std::shared_ptr<const ProjectiveCatalogue> projective_catalogue(const AlgebraPtr& alg, std::uint64_t seed = 0);

// [m : D_i] for the simples of the catalogue, in catalogue order.
std::vector<std::size_t> composition_multiplicities(const Module& m, std::uint64_t seed = 0);

}  // namespace brauerc
