#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "brauerc/algebra.hpp"
#include "brauerc/matrix.hpp"

namespace brauerc {

// Right module over a based algebra; vectors are rows, v -> v * rho(g).
class Module {
 public:
  // Checks every basis element against the algebra's structure constants.
  Module(AlgebraPtr algebra, std::vector<Matrix> generator_actions);
  // For constructions that are module maps by design.
  static Module trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> generator_actions);
  static Module regular(AlgebraPtr algebra);
  static Module zero(AlgebraPtr algebra);
  // One-dimensional module on which generator g acts by values[g].
  static Module one_dimensional(AlgebraPtr algebra, const std::vector<Scalar>& values);

  const BasedAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  Field field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& gen(std::size_t g) const { return gens_[g]; }
  const std::vector<Matrix>& gens() const { return gens_; }

  // Action of basis element b, built from its generator word.
  Matrix basis_action(std::size_t b) const;
  void validate() const;

 private:
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix>&& gens);
  struct Cache {
    std::mutex mutex;
    std::vector<std::optional<Matrix>> actions;
  };
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::shared_ptr<Cache> cache_;
};

// (S, B)-bimodule: left[s] row j = s * y_j, right[g] row j = y_j * g.
struct BiModule {
  AlgebraPtr left_algebra, right_algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left, right;
};

struct Submodule {
  Module module;
  Matrix basis;  // rows, in coordinates of the ambient module
};

struct Quotient {
  Module module;
  Matrix projection;  // dim(ambient) x dim(quotient)
};

bool same_algebra(const Module& a, const Module& b);

// Smallest submodule containing the rows of `vectors`.
Submodule submodule(const Module& m, const Matrix& vectors);
// Module structure on an invariant subspace with independent basis rows.
Module restrict_to(const Module& m, const Matrix& basis);
Quotient quotient(const Module& m, const Matrix& sub);
Module direct_sum(const Module& a, const Module& b);
Module dual_module(const Module& m);
// Inner tensor product over a group algebra (generators are group elements).
Module inner_tensor(const Module& a, const Module& b);
Module tensor_over(const Module& x, const BiModule& y);
// Transport of a module along a map of algebras that sends generator g of
// `target` to basis element images[g] of m's algebra.
Module pull_back(const Module& m, AlgebraPtr target, const std::vector<std::size_t>& images);

}  // namespace brauerc
