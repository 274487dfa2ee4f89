#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "brauerc/algebra.hpp"
#include "brauerc/bicomb.hpp"
#include "brauerc/module.hpp"
#include "brauerc/split.hpp"
#include "brauerc/wreps.hpp"

namespace brauerc {

// M ⊗_{W_{r-l}} e_l(B/J_{l+1}); basis index = dangle * dim x + a.
Module ind_l(const Module& x, int l, const BrauerPtr& b);
// M ⊗_{W_{r-l}} e_l B.
Module Ind_l(const Module& x, int l, const BrauerPtr& b);
// N e_l with W_{r-l} acting through δ^{-l} ê_l σ.
Module Res_l(const Module& n, int l);

// The (W_{r-l}, B)-bimodule e_l B on diagrams whose top carries the l axis arcs.
BiModule e_l_B(int l, const BrauerPtr& b);

Module cell_module(const CellIndex& idx, const BrauerPtr& b, SignPlacement placement);
Module perm_module_B(const CellIndex& idx, const BrauerPtr& b, SignPlacement placement);

// Some f in Hom(src, tgt) of full rank. Exact negative answers come from the
// image of the whole Hom space or exhaustive search; otherwise UndecidedError.
bool has_surjection(const Module& src, const Module& tgt, std::uint64_t seed = 0);

struct FiltrationReport {
  std::string method;
  std::map<CellIndex, long long> multiplicities;
  bool ok = true;
  std::string message;
};

enum class FiltrationMethod { grothendieck, explicit_layers };

// Shared, lazily filled caches for one (r, field, δ, placement, seed).
class TypeCContext {
 public:
  TypeCContext(int r, FieldSpec spec, SignPlacement placement, std::uint64_t seed = 0);

  int rank() const { return r_; }
  const FieldSpec& spec() const { return spec_; }
  Field field() const { return spec_.field; }
  SignPlacement placement() const { return placement_; }
  std::uint64_t seed() const { return seed_; }
  const BrauerPtr& algebra() const { return alg_; }
  const std::vector<CellIndex>& indices() const { return indices_; }

  const Module& cell(const CellIndex& idx);
  const Module& perm(const CellIndex& idx);
  const Summand& young(const CellIndex& idx);
  const std::vector<Summand>& perm_summands(const CellIndex& idx);

  // Labels of the indecomposable summands of M(idx), identified against Y(·).
  std::map<CellIndex, int> decompose_perm(const CellIndex& idx);
  FiltrationReport cell_filtration(const Module& m, FiltrationMethod method);

 private:
  std::vector<long long> composition_vector(const Module& m);

  int r_;
  FieldSpec spec_;
  SignPlacement placement_;
  std::uint64_t seed_;
  BrauerPtr alg_;
  std::vector<CellIndex> indices_;
  std::recursive_mutex mutex_;
  std::map<CellIndex, Module> cells_, perms_;
  std::map<CellIndex, Summand> youngs_;
  std::map<CellIndex, std::vector<Summand>> summands_;
};

Summand young_module_B(const CellIndex& idx, TypeCContext& ctx);
std::map<CellIndex, int> decompose_perm_B(const CellIndex& idx, TypeCContext& ctx);
FiltrationReport cell_filtration(const Module& m, FiltrationMethod method, TypeCContext& ctx);

// The chain m ⊇ m J_1 ⊇ ... ⊇ m J_r ⊇ 0, as row bases in m's coordinates.
std::vector<Matrix> j_layer_chain(const Module& m);

}  // namespace brauerc
