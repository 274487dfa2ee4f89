// One line per acceptance criterion: PASS/FAIL, timing, and a short detail.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "brauerc/creps.hpp"
#include "brauerc/diagrams.hpp"
#include "brauerc/hom.hpp"
#include "brauerc/split.hpp"
#include "brauerc/verify.hpp"
#include "brauerc/wreps.hpp"

using namespace brauerc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Symmetric partial matchings of {-r..-1,1..r} with exactly l edges, by brute force
// over all partial matchings.
long long brute_dangles(int r, int l) {
  const int n = 2 * r;
  auto label = [r](int pos) { return pos < r ? pos - r : pos - r + 1; };
  auto pos_of = [r](int lab) { return lab < 0 ? lab + r : lab + r - 1; };
  long long count = 0;
  std::vector<int> p(n, -2);
  std::function<void(int, int)> rec = [&](int i, int edges) {
    if (i == n) {
      if (edges != l) return;
      for (int a = 0; a < n; ++a) {
        int m = pos_of(-label(a));
        int pa = p[a];
        int expect = pa < 0 ? -1 : pos_of(-label(pa));
        if (p[m] != expect) return;
      }
      ++count;
      return;
    }
    if (p[i] != -2) return rec(i + 1, edges);
    p[i] = -1;
    rec(i + 1, edges);
    for (int j = i + 1; j < n; ++j)
      if (p[j] == -2) {
        p[i] = j, p[j] = i;
        rec(i + 1, edges + 1);
        p[j] = -2;
      }
    p[i] = -2;
  };
  rec(0, 0);
  return count;
}

std::string failures(const SuiteResult& res, std::size_t limit = 3) {
  std::string out;
  std::size_t n = 0;
  for (const auto& rep : res.reports)
    for (const auto& in : rep.instances)
      if (in.pass && !*in.pass && n++ < limit) out += " [" + rep.claim + ": " + in.index + " -> " + in.computed + "]";
  return out;
}

std::size_t instance_count(const SuiteResult& res) {
  std::size_t n = 0;
  for (const auto& rep : res.reports) n += rep.instances.size();
  return n;
}

SuiteResult suite(const std::string& name, int r, std::uint32_t p, const char* delta) {
  SuiteConfig cfg;
  cfg.r = r;
  cfg.spec = FieldSpec::make(p, delta);
  return run_suite(name, cfg);
}

// Runs the suites, summing instances and collecting failures.
Outcome suites(const std::vector<std::tuple<std::string, int, std::uint32_t, const char*>>& runs) {
  bool ok = true;
  std::size_t total = 0;
  std::string bad;
  for (const auto& [name, r, p, delta] : runs) {
    SuiteResult res = suite(name, r, p, delta);
    ok = ok && res.all_pass();
    total += instance_count(res);
    bad += failures(res);
  }
  return {ok, std::to_string(total) + " instances" + bad};
}

Outcome diagram_calculus() {
  std::string detail;
  bool ok = true;
  for (int r = 1; r <= 4; ++r) {
    long long direct = static_cast<long long>(enumerate_basis(r).size());
    long long inflated = 0;
    for (int l = 0; l <= r; ++l) {
      long long v = brute_dangles(r, l);
      if (v != static_cast<long long>(enumerate_dangles(r, l).size())) ok = false;
      inflated += v * v * (1LL << (r - l)) * factorial(r - l);
    }
    ok = ok && direct == inflated;
    detail += "r=" + std::to_string(r) + ":" + std::to_string(direct) + "/" + std::to_string(inflated) + " ";
  }
  const auto basis = enumerate_basis(2);
  std::size_t checked = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto ab = multiply(a, b);
      auto ba = multiply(involution(b), involution(a));
      if (ab.loops != ba.loops || involution(ab.result) != ba.result) ok = false;
      for (int l = 0; l <= 2; ++l)
        if (a.top_arcs() >= l && (ab.result.top_arcs() < l || multiply(b, a).result.top_arcs() < l)) ok = false;
      ++checked;
    }
  for (int l = 0; l < 2; ++l) {
    auto big = ideal_basis(2, l), small = ideal_basis(2, l + 1);
    std::set<CDiagram> bs(big.begin(), big.end());
    for (const auto& d : small) ok = ok && bs.count(d);
    ok = ok && small.size() < big.size();
  }
  return {ok, detail + "pairs " + std::to_string(checked)};
}

Outcome idempotents() {
  bool ok = true;
  int n = 0;
  for (auto [p, d] : {std::pair<std::uint32_t, const char*>{0, "3"}, {5, "1"}}) {
    FieldSpec spec = FieldSpec::make(p, d);
    for (int r = 1; r <= 4; ++r)
      for (int l = 0; l <= r; ++l) {
        auto e = idempotent_e_l(l, r, spec);
        ok = ok && e * e == e;
        ++n;
      }
  }
  int refused = 0, attempts = 0;
  FieldSpec zero = FieldSpec::make(0, "0");
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= r; ++l) {
      ++attempts;
      try {
        idempotent_e_l(l, r, zero);
      } catch (const DeltaZeroError&) {
        ++refused;
      }
    }
  ok = ok && refused == attempts;
  return {ok, std::to_string(n) + " idempotents, delta=0 refused " + std::to_string(refused) + "/" +
                  std::to_string(attempts)};
}

Outcome convention() {
  const auto& o = convention_oracle();
  int unitri = 0;
  for (const auto& c : o.checks) unitri += c.unitriangular;
  SuiteResult res = suite("w-decomp", 2, 0, "1");
  std::size_t shapes = 0;
  for (const auto& rep : res.reports)
    if (rep.claim.rfind("M(lam)", 0) == 0) shapes = rep.instances.size();
  bool ok = unitri == 1 && o.chosen.has_value() && res.all_pass() && shapes == 5;
  return {ok, "unitriangular placements " + std::to_string(unitri) + ", chosen " +
                  (o.chosen ? to_string(*o.chosen) : std::string("none")) + ", shapes " + std::to_string(shapes) +
                  failures(res)};
}

Outcome functors() {
  const std::uint32_t p = 5;
  BrauerPtr b = brauer_c_algebra(2, FieldSpec::make(p, "1"));
  Field f = b->field();
  const SignPlacement pl = resolve_placement(std::nullopt);
  std::vector<std::vector<Module>> xs(2);
  for (const auto& lam : enumerate_bipartitions(2)) {
    xs[0].push_back(specht_module(lam, f, pl));
    xs[0].push_back(perm_module_W(lam, f, pl).module);
  }
  xs[0].push_back(direct_sum(trivial_module_W(2, f), sign_module_W(2, f)));
  xs[1] = {trivial_module_W(1, f), sign_module_W(1, f), direct_sum(trivial_module_W(1, f), sign_module_W(1, f)),
           Module::regular(hyperoctahedral_algebra(1, f))};
  std::vector<Module> ns;
  for (const auto& idx : cell_indices(2)) {
    ns.push_back(cell_module(idx, b, pl));
    ns.push_back(perm_module_B(idx, b, pl));
  }
  ns.push_back(direct_sum(ns[0], ns[3]));
  ns.push_back(Module::regular(b));

  bool ok = true;
  int iso = 0, iso_total = 0;
  for (int l = 0; l <= 1; ++l)
    for (const auto& x : xs[l]) {
      ++iso_total;
      if (is_isomorphic(Res_l(ind_l(x, l, b), l), x)) ++iso;
    }
  ok = ok && iso == iso_total;

  std::mt19937_64 rng(20261016);
  int pairs = 0, agree = 0;
  for (; pairs < 24; ++pairs) {
    int l = static_cast<int>(rng() % 2);
    const Module& x = xs[l][rng() % xs[l].size()];
    const Module& n = ns[rng() % ns.size()];
    if (hom_dim(Ind_l(x, l, b), n) == hom_dim(x, Res_l(n, l))) ++agree;
  }
  ok = ok && agree == pairs;
  return {ok, "Res.ind iso " + std::to_string(iso) + "/" + std::to_string(iso_total) + ", adjunction " +
                  std::to_string(agree) + "/" + std::to_string(pairs)};
}

// dim M(l,lam) = dim M(lam) (x)_G e_l B, G = W_{r-l}, by double-coset counting: G acts on
// the diagram basis of e_l B by permutations and on tabloids by signed permutations, so
// the tensor product has one basis vector per orbit of pairs whose stabilizer has no sign.
long long orbit_count_dim(const CellIndex& idx, int r, SignPlacement pl) {
  const int k = r - idx.l;
  Field q = Field::rationals();
  Dangle axis = layer_decompose(e_hat(r, idx.l)).top;
  std::vector<CDiagram> xs;
  for (const auto& d : enumerate_basis(r)) {
    bool has_axis = true;
    for (int i = 1; i <= idx.l; ++i) has_axis = has_axis && d.partner(d.encode({false, -i})) == d.encode({false, i});
    if (has_axis) xs.push_back(d);
  }
  if (k == 0) return static_cast<long long>(xs.size());
  std::map<CDiagram, std::size_t> xi;
  for (std::size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = i;
  auto group = enumerate_group(k);
  auto galg = hyperoctahedral_algebra(k, q);
  Module m = perm_module_W(idx.lam, q, pl).module;
  const std::size_t nt = m.dim(), nx = xs.size();
  // (tabloid, diagram) -> image and sign under g, acting as t.g (x) g^-1.x
  std::vector<std::vector<std::pair<std::size_t, int>>> act(group.size(), std::vector<std::pair<std::size_t, int>>(nt * nx));
  for (std::size_t gi = 0; gi < group.size(); ++gi) {
    Matrix rho = m.basis_action(galg->index_of(group[gi]));
    CDiagram ginv = recompose(axis, axis, group[gi].inverse());
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t t2 = nt;
      int sign = 0;
      for (std::size_t c = 0; c < nt; ++c) {
        Scalar v = rho.at(t, c);
        if (v.is_zero()) continue;
        if (t2 != nt) throw MathError("tabloid action is not monomial");
        t2 = c;
        sign = v == q.one() ? 1 : v == -q.one() ? -1 : 0;
      }
      if (sign == 0) throw MathError("tabloid action is not signed");
      for (std::size_t x = 0; x < nx; ++x) {
        auto pr = multiply(ginv, xs[x]);
        act[gi][t * nx + x] = {t2 * nx + xi.at(pr.result), sign};
      }
    }
  }
  std::vector<bool> seen(nt * nx, false);
  long long count = 0;
  for (std::size_t start = 0; start < nt * nx; ++start) {
    if (seen[start]) continue;
    bool clean = true;
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      auto [img, sign] = act[gi][start];
      seen[img] = true;
      if (img == start && sign < 0) clean = false;
    }
    count += clean;
  }
  return count;
}

Outcome perm_invariance() {
  const SignPlacement pl = resolve_placement(std::nullopt);
  std::vector<std::pair<std::uint32_t, const char*>> cfgs{{0, "3"}, {0, "5/2"}, {5, "1"}, {7, "2"}};
  bool ok = true;
  std::string detail;
  for (const auto& idx : cell_indices(2)) {
    std::set<std::size_t> dims;
    for (auto [p, d] : cfgs) dims.insert(perm_module_B(idx, brauer_c_algebra(2, FieldSpec::make(p, d)), pl).dim());
    long long expect = orbit_count_dim(idx, 2, pl);
    ok = ok && dims.size() == 1 && static_cast<long long>(*dims.begin()) == expect;
    detail += idx.to_string() + "=" + std::to_string(*dims.begin()) + "/" + std::to_string(expect) + " ";
  }
  return {ok, detail};
}

Outcome young_and_main() {
  SuiteResult y = suite("young", 2, 5, "1"), m = suite("main", 2, 5, "1");
  // The suite checks that no label has a smaller layer; labels from a larger layer are
  // allowed by the Λ-order and do occur, so they are only counted here.
  std::size_t lower = 0, higher = 0;
  TypeCContext ctx(2, FieldSpec::make(5, "1"), resolve_placement(std::nullopt));
  for (const auto& idx : ctx.indices())
    for (const auto& [lab, k] : ctx.decompose_perm(idx)) {
      lower += lab.l < idx.l;
      higher += lab.l > idx.l;
    }
  return {y.all_pass() && m.all_pass() && lower == 0,
          std::to_string(instance_count(y) + instance_count(m)) + " instances, labels with m<l: " +
              std::to_string(lower) + ", with m>l: " + std::to_string(higher) + failures(y) + failures(m)};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"diagram calculus", diagram_calculus},
      {"idempotents", idempotents},
      {"convention oracle and W decomposition", convention},
      {"W duality",
       [] {
         return suites({{"duality", 2, 0, "1"}, {"duality", 2, 5, "1"}, {"duality", 3, 0, "1"}, {"duality", 3, 5, "1"}});
       }},
      {"W cohomology vanishing", [] { return suites({{"hom-ext-w", 2, 5, "1"}, {"hom-ext-w", 2, 7, "1"}}); }},
      {"functor contracts", functors},
      {"permutation module invariance", perm_invariance},
      {"stratifying system", [] { return suites({{"stratify", 2, 5, "1"}}); }},
      {"cell filtration", [] { return suites({{"filtration", 2, 5, "1"}}); }},
      {"Young modules and M(l,lam) decomposition", young_and_main},
      {"Hom exactness and relative projectivity", [] { return suites({{"hom-exact", 2, 5, "1"}}); }},
      {"Littlewood-Richardson rule",
       [] { return suites({{"lr", 1, 0, "1"}, {"lr", 2, 0, "1"}, {"lr", 3, 0, "1"}}); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    char head[128];
    std::snprintf(head, sizeof head, "%s %2zu %-42s %8.2fs  ", o.pass ? "PASS" : "FAIL", i + 1,
                  criteria[i].first.c_str(), secs);
    std::cout << head << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
