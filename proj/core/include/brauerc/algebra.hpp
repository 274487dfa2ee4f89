#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brauerc/bicomb.hpp"
#include "brauerc/diagrams.hpp"
#include "brauerc/field.hpp"
#include "brauerc/hyperoct.hpp"

namespace brauerc {

// b_i * b_j = coef * b_index; a zero coef means the product vanishes.
struct Term {
  std::size_t index = 0;
  Scalar coef;
};

// Product of generators w[0] w[1] ... equals scale * b_i.
struct Word {
  std::vector<std::size_t> gens;
  Scalar scale;
};

// Finite-dimensional algebra whose basis is closed under multiplication up to
// scalars (group algebras, diagram algebras).
class BasedAlgebra {
 public:
  using Product = std::function<Term(std::size_t, std::size_t)>;

  BasedAlgebra(std::string key, Field field, std::vector<std::string> labels, std::size_t identity,
               std::vector<std::size_t> generators, Product product, std::vector<std::size_t> involution);
  virtual ~BasedAlgebra() = default;

  const std::string& key() const { return key_; }
  Field field() const { return field_; }
  std::size_t dimension() const { return labels_.size(); }
  std::size_t num_generators() const { return gens_.size(); }
  std::size_t generator(std::size_t g) const { return gens_[g]; }
  std::size_t identity() const { return identity_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  Term multiply(std::size_t i, std::size_t j) const { return product_(i, j); }
  const Term& times_generator(std::size_t i, std::size_t g) const { return right_[i * gens_.size() + g]; }
  const Term& generator_times(std::size_t g, std::size_t i) const { return left_[i * gens_.size() + g]; }
  const Word& word(std::size_t i) const { return words_[i]; }
  // The anti-automorphism on basis indices.
  std::size_t involution(std::size_t i) const { return inv_[i]; }

 private:
  std::string key_;
  Field field_;
  std::vector<std::string> labels_;
  std::size_t identity_;
  std::vector<std::size_t> gens_;
  Product product_;
  std::vector<std::size_t> inv_;
  std::vector<Term> right_, left_;
  std::vector<Word> words_;
};

// Group algebra of a subgroup of W_n.
class GroupAlgebra : public BasedAlgebra {
 public:
  GroupAlgebra(std::string key, Field f, int n, std::vector<SignedPerm> elements, std::vector<SignedPerm> generators);
  int degree() const { return n_; }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  std::size_t index_of(const SignedPerm& s) const;

 private:
  static Product make_product(const std::vector<SignedPerm>& el, const std::map<SignedPerm, std::size_t>& idx, Field f);
  int n_;
  std::vector<SignedPerm> elements_;
  std::map<SignedPerm, std::size_t> index_;
};

class BrauerCAlgebra : public BasedAlgebra {
 public:
  BrauerCAlgebra(int r, FieldSpec spec, std::vector<CDiagram> basis);
  int rank() const { return r_; }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<CDiagram>& diagrams() const { return basis_; }
  std::size_t index_of(const CDiagram& d) const;

 private:
  int r_;
  FieldSpec spec_;
  std::vector<CDiagram> basis_;
  std::map<CDiagram, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;
using GroupAlgebraPtr = std::shared_ptr<const GroupAlgebra>;
using BrauerPtr = std::shared_ptr<const BrauerCAlgebra>;

// Cached, shared instances; construction is serialised by a mutex.
GroupAlgebraPtr hyperoctahedral_algebra(int n, Field f);
// W_a x W_b inside W_{a+b}: the first factor on letters 1..a.
GroupAlgebraPtr product_subgroup_algebra(int a, int b, Field f);
BrauerPtr brauer_c_algebra(int r, const FieldSpec& spec);

}  // namespace brauerc
