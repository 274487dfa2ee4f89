#include "brauerc/algebra.hpp"

#include <deque>
#include <mutex>

namespace brauerc {

BasedAlgebra::BasedAlgebra(std::string key, Field field, std::vector<std::string> labels, std::size_t identity,
                           std::vector<std::size_t> generators, Product product, std::vector<std::size_t> involution)
    : key_(std::move(key)),
      field_(field),
      labels_(std::move(labels)),
      identity_(identity),
      gens_(std::move(generators)),
      product_(std::move(product)),
      inv_(std::move(involution)) {
  const std::size_t n = labels_.size(), k = gens_.size();
  right_.resize(n * k);
  left_.resize(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < k; ++g) {
      right_[i * k + g] = product_(i, gens_[g]);
      left_[i * k + g] = product_(gens_[g], i);
    }
  // Breadth-first words from the identity, using only nonvanishing steps.
  words_.assign(n, Word{{}, field_.zero()});
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{identity_};
  seen[identity_] = true;
  words_[identity_] = Word{{}, field_.one()};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < k; ++g) {
      const Term& t = right_[i * k + g];
      if (t.coef.is_zero() || seen[t.index]) continue;
      seen[t.index] = true;
      Word w = words_[i];
      w.gens.push_back(g);
      w.scale = w.scale * t.coef;
      words_[t.index] = std::move(w);
      queue.push_back(t.index);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw MathError(key_ + ": basis element " + labels_[i] + " is not a product of generators");
}

BasedAlgebra::Product GroupAlgebra::make_product(const std::vector<SignedPerm>& el,
                                                 const std::map<SignedPerm, std::size_t>& idx, Field f) {
  Scalar one = f.one();
  return [el, idx, one](std::size_t i, std::size_t j) {
    return Term{idx.at(compose(el[i], el[j])), one};
  };
}

namespace {
std::vector<std::string> perm_labels(const std::vector<SignedPerm>& el) {
  std::vector<std::string> out;
  for (const auto& s : el) out.push_back(s.to_string());
  return out;
}
std::map<SignedPerm, std::size_t> perm_index(const std::vector<SignedPerm>& el) {
  std::map<SignedPerm, std::size_t> m;
  for (std::size_t i = 0; i < el.size(); ++i) m.emplace(el[i], i);
  return m;
}
std::vector<std::size_t> perm_gen_idx(const std::vector<SignedPerm>& gens, const std::map<SignedPerm, std::size_t>& m) {
  std::vector<std::size_t> g;
  for (const auto& s : gens) g.push_back(m.at(s));
  return g;
}
std::vector<std::size_t> perm_inv(const std::vector<SignedPerm>& el, const std::map<SignedPerm, std::size_t>& m) {
  std::vector<std::size_t> v;
  for (const auto& s : el) v.push_back(m.at(s.inverse()));
  return v;
}
}  // namespace

GroupAlgebra::GroupAlgebra(std::string key, Field f, int n, std::vector<SignedPerm> elements,
                           std::vector<SignedPerm> generators)
    : BasedAlgebra(std::move(key), f, perm_labels(elements), perm_index(elements).at(SignedPerm::identity(n)),
                   perm_gen_idx(generators, perm_index(elements)),
                   make_product(elements, perm_index(elements), f), perm_inv(elements, perm_index(elements))),
      n_(n),
      elements_(std::move(elements)),
      index_(perm_index(elements_)) {}

std::size_t GroupAlgebra::index_of(const SignedPerm& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw MathError(s.to_string() + " is not in " + key());
  return it->second;
}

namespace {
std::vector<std::string> diagram_labels(const std::vector<CDiagram>& b) {
  std::vector<std::string> out;
  for (const auto& d : b) out.push_back(d.to_string());
  return out;
}
std::map<CDiagram, std::size_t> diagram_index(const std::vector<CDiagram>& b) {
  std::map<CDiagram, std::size_t> m;
  for (std::size_t i = 0; i < b.size(); ++i) m.emplace(b[i], i);
  return m;
}
}  // namespace

BrauerCAlgebra::BrauerCAlgebra(int r, FieldSpec spec, std::vector<CDiagram> basis)
    : BasedAlgebra(
          "B(C" + std::to_string(r) + ")/" + spec.key(), spec.field, diagram_labels(basis),
          diagram_index(basis).at(CDiagram::identity(r)),
          [&] {
            auto m = diagram_index(basis);
            std::vector<std::size_t> g;
            for (const auto& d : algebra_generators(r)) g.push_back(m.at(d));
            return g;
          }(),
          [basis, m = diagram_index(basis), delta = spec.delta](std::size_t i, std::size_t j) {
            auto pr = brauerc::multiply(basis[i], basis[j]);
            return Term{m.at(pr.result), delta.pow(pr.loops)};
          },
          [&] {
            auto m = diagram_index(basis);
            std::vector<std::size_t> v;
            for (const auto& d : basis) v.push_back(m.at(brauerc::involution(d)));
            return v;
          }()),
      r_(r),
      spec_(std::move(spec)),
      basis_(std::move(basis)),
      index_(diagram_index(basis_)) {}

std::size_t BrauerCAlgebra::index_of(const CDiagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) throw MathError("diagram not in basis: " + d.to_string());
  return it->second;
}

namespace {
std::mutex registry_mutex;
std::map<std::string, std::shared_ptr<const BasedAlgebra>> registry;

template <class T, class Make>
std::shared_ptr<const T> cached(const std::string& key, Make make) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return std::static_pointer_cast<const T>(it->second);
  std::shared_ptr<const T> made = make();
  registry.emplace(key, made);
  return made;
}
}  // namespace

GroupAlgebraPtr hyperoctahedral_algebra(int n, Field f) {
  std::string key = "W" + std::to_string(n) + "/" + f.name();
  return cached<GroupAlgebra>(key, [&] {
    return std::make_shared<const GroupAlgebra>(key, f, n, enumerate_group(n), generators(n));
  });
}

GroupAlgebraPtr product_subgroup_algebra(int a, int b, Field f) {
  std::string key = "W" + std::to_string(a) + "xW" + std::to_string(b) + "/" + f.name();
  return cached<GroupAlgebra>(key, [&] {
    const int n = a + b;
    std::vector<SignedPerm> el;
    for (const auto& x : enumerate_group(a))
      for (const auto& y : enumerate_group(b)) el.push_back(compose(x.embed(n, 0), y.embed(n, a)));
    std::sort(el.begin(), el.end());
    std::vector<SignedPerm> gens;
    for (const auto& g : generators(a)) gens.push_back(g.embed(n, 0));
    for (const auto& g : generators(b)) gens.push_back(g.embed(n, a));
    return std::make_shared<const GroupAlgebra>(key, f, n, el, gens);
  });
}

BrauerPtr brauer_c_algebra(int r, const FieldSpec& spec) {
  std::string key = "B(C" + std::to_string(r) + ")/" + spec.key();
  return cached<BrauerCAlgebra>(key, [&] { return std::make_shared<const BrauerCAlgebra>(r, spec, enumerate_basis(r)); });
}

}  // namespace brauerc
