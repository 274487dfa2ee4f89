#include "brauerc/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "brauerc/creps.hpp"
#include "brauerc/hom.hpp"
#include "brauerc/linalg.hpp"
#include "brauerc/wreps.hpp"

namespace brauerc {

namespace {

struct Ctx {
  const SuiteConfig& cfg;
  SignPlacement placement;
  bool in_hypothesis;

  Field field() const { return cfg.spec.field; }
  Report report(std::string claim) const {
    Report r;
    r.claim = std::move(claim);
    r.characteristic = cfg.spec.field.characteristic();
    r.delta = cfg.spec.delta.to_string();
    r.r = cfg.r;
    r.in_hypothesis = in_hypothesis;
    return r;
  }
};

template <class K>
std::string join_counts(const std::map<K, int>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : " ") + k.to_string() + "x" + std::to_string(v);
  return out.empty() ? "0" : out;
}

std::string join_counts(const std::map<CellIndex, long long>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : " ") + k.to_string() + "x" + std::to_string(v);
  return out.empty() ? "0" : out;
}

std::string pair_label(const std::string& a, const std::string& b) { return a + " ; " + b; }

// Evaluate one instance, turning a thrown error into a failing entry.
void guarded(Report& rep, const std::string& index, const std::string& expected,
             const std::function<std::pair<std::string, bool>()>& body) {
  try {
    auto [computed, pass] = body();
    rep.add(index, expected, computed, pass);
  } catch (const std::exception& e) {
    rep.add(index, expected, std::string("error: ") + e.what(), false);
  }
}

std::vector<Report> suite_w_decomp(const Ctx& c) {
  Report oracle = c.report("convention oracle: exactly one sign placement gives unitriangular M(lam)");
  const auto& o = convention_oracle();
  std::string seen;
  for (const auto& chk : o.checks)
    seen += to_string(chk.placement) + "=" + (chk.unitriangular ? "unitriangular" : "not-unitriangular") + " ";
  Report orc = oracle;
  orc.in_hypothesis = true;
  orc.add("placement", "unique", seen + "-> " + (o.chosen ? to_string(*o.chosen) : "none"), o.chosen.has_value());

  Report rep = c.report("M(lam) = Y(lam) + sum of Y(mu), mu strictly dominating lam");
  for (const auto& lam : enumerate_bipartitions(c.cfg.r))
    guarded(rep, lam.to_string(), "Y(" + lam.to_string() + ")x1, others dominate", [&] {
      auto dec = decompose_perm_W(lam, c.field(), c.placement, c.cfg.seed);
      bool ok = dec.count(lam) && dec.at(lam) == 1;
      for (const auto& [mu, k] : dec)
        if (mu != lam && !dominates(mu, lam)) ok = false;
      return std::pair{join_counts(dec), ok};
    });
  return {orc, rep};
}

std::vector<Report> suite_duality(const Ctx& c) {
  Report rep = c.report("S'(lam') is isomorphic to S(lam) (x) sgn");
  for (const auto& lam : enumerate_bipartitions(c.cfg.r))
    guarded(rep, lam.to_string(), "isomorphic", [&] {
      Module lhs = dual_specht(conjugate(lam), c.field(), c.placement);
      Module rhs = sign_twist(specht_module(lam, c.field(), c.placement));
      bool iso = is_isomorphic(lhs, rhs, c.cfg.seed);
      return std::pair{std::string(iso ? "isomorphic" : "not isomorphic"), iso};
    });
  Report labels = c.report("labels of the sign and trivial Specht modules under the active placement");
  for (int want : {-1, 1})
    guarded(labels, want < 0 ? "sgn" : "trivial", "exactly one label", [&] {
      Module target = want < 0 ? sign_module_W(c.cfg.r, c.field()) : trivial_module_W(c.cfg.r, c.field());
      std::vector<std::string> found;
      for (const auto& lam : enumerate_bipartitions(c.cfg.r)) {
        Module s = specht_module(lam, c.field(), c.placement);
        if (s.dim() == 1 && is_isomorphic(s, target, c.cfg.seed)) found.push_back(lam.to_string());
      }
      std::string text;
      for (const auto& f : found) text += (text.empty() ? "" : " ") + f;
      return std::pair{text.empty() ? std::string("none") : text, found.size() == 1};
    });
  return {rep, labels};
}

std::vector<Report> suite_hom_ext_w(const Ctx& c) {
  const auto all = enumerate_bipartitions(c.cfg.r);
  std::vector<Module> specht, duals;
  for (const auto& lam : all) {
    specht.push_back(specht_module(lam, c.field(), c.placement));
    duals.push_back(dual_module(specht.back()));
  }
  Module k = trivial_module_W(c.cfg.r, c.field());
  Report ext_k = c.report("Ext^1(k, S'(lam)) = 0");
  for (std::size_t i = 0; i < all.size(); ++i)
    guarded(ext_k, all[i].to_string(), "0", [&] {
      auto d = ext1_dim(k, duals[i]);
      return std::pair{std::to_string(d), d == 0};
    });
  Report hom = c.report("Hom(S(lam), S(mu)) = 0 unless lam dominates mu");
  Report ext = c.report("Ext^1(S(lam), S(mu)) = 0 unless lam strictly dominates mu");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      std::string idx = pair_label(all[i].to_string(), all[j].to_string());
      if (!dominates(all[i], all[j]))
        guarded(hom, idx, "0", [&] {
          auto d = hom_dim(specht[i], specht[j]);
          return std::pair{std::to_string(d), d == 0};
        });
      if (i == j || !dominates(all[i], all[j]))
        guarded(ext, idx, "0", [&] {
          auto d = ext1_dim(specht[i], specht[j]);
          return std::pair{std::to_string(d), d == 0};
        });
    }
  return {ext_k, hom, ext};
}

std::vector<Report> suite_stratify(const Ctx& c, TypeCContext& t) {
  Report hom = c.report("Hom(Theta(l,lam), Theta(m,mu)) = 0 when (m,mu) > (l,lam)");
  Report ext = c.report("Ext^1(Theta(l,lam), Theta(m,mu)) = 0 when (m,mu) >= (l,lam)");
  Report ind = c.report("Theta(l,lam) is indecomposable");
  for (const auto& a : t.indices()) {
    guarded(ind, a.to_string(), "indecomposable", [&] {
      bool ok = is_indecomposable(t.cell(a), c.cfg.seed);
      return std::pair{std::string(ok ? "indecomposable" : "decomposable"), ok};
    });
    for (const auto& b : t.indices()) {
      std::string idx = pair_label(a.to_string(), b.to_string());
      if (cell_gt(b, a))
        guarded(hom, idx, "0", [&] {
          auto d = hom_dim(t.cell(a), t.cell(b));
          return std::pair{std::to_string(d), d == 0};
        });
      if (cell_geq(b, a))
        guarded(ext, idx, "0", [&] {
          auto d = ext1_dim(t.cell(a), t.cell(b));
          return std::pair{std::to_string(d), d == 0};
        });
    }
  }
  return {hom, ext, ind};
}

std::vector<Report> suite_filtration(const Ctx& c, TypeCContext& t) {
  Report rep = c.report("M(l,lam) has a cell filtration; multiplicities agree across methods");
  for (const auto& idx : t.indices())
    guarded(rep, idx.to_string(), "equal nonnegative integral multisets", [&] {
      const Module& m = t.perm(idx);
      auto g = t.cell_filtration(m, FiltrationMethod::grothendieck);
      auto e = t.cell_filtration(m, FiltrationMethod::explicit_layers);
      std::size_t dim = 0;
      for (const auto& [j, k] : g.multiplicities) dim += static_cast<std::size_t>(k) * t.cell(j).dim();
      bool ok = g.ok && e.ok && g.multiplicities == e.multiplicities && dim == m.dim();
      std::string text = "grothendieck{" + (g.ok ? join_counts(g.multiplicities) : g.message) + "} explicit{" +
                         (e.ok ? join_counts(e.multiplicities) : e.message) + "} dim " + std::to_string(dim) + "/" +
                         std::to_string(m.dim());
      return std::pair{text, ok};
    });
  return {rep};
}

std::vector<Report> suite_young(const Ctx& c, TypeCContext& t) {
  Report uniq = c.report("unique summand of M(l,lam) surjecting onto ind_l Y(lam)");
  for (const auto& idx : t.indices())
    guarded(uniq, idx.to_string(), "exactly one", [&] {
      const Summand& y = t.young(idx);
      return std::pair{"one, dim " + std::to_string(y.module.dim()), true};
    });
  Report distinct = c.report("Y(l,lam) isomorphic to Y(m,mu) only when (l,lam) = (m,mu)");
  const auto& ix = t.indices();
  for (std::size_t i = 0; i < ix.size(); ++i)
    for (std::size_t j = i + 1; j < ix.size(); ++j)
      guarded(distinct, pair_label(ix[i].to_string(), ix[j].to_string()), "not isomorphic", [&] {
        bool iso = is_isomorphic(t.young(ix[i]).module, t.young(ix[j]).module, c.cfg.seed);
        return std::pair{std::string(iso ? "isomorphic" : "not isomorphic"), !iso};
      });
  Report same_layer = c.report("Y(l,lam) | M(l,mu) exactly when Y(lam) | M(mu)");
  for (const auto& a : ix)
    for (const auto& b : ix) {
      if (a.l != b.l) continue;
      guarded(same_layer, pair_label(a.to_string(), b.to_string()), "agree", [&] {
        auto w = decompose_perm_W(b.lam, c.field(), c.placement, c.cfg.seed);
        bool in_w = w.count(a.lam) > 0;
        bool in_b = t.decompose_perm(b).count(a) > 0;
        std::string text = std::string(in_b ? "summand" : "absent") + " / " + (in_w ? "summand" : "absent");
        return std::pair{text, in_b == in_w};
      });
    }
  return {uniq, distinct, same_layer};
}

std::vector<Report> suite_main(const Ctx& c, TypeCContext& t) {
  Report rep = c.report("M(l,lam) is a sum of Young modules; Y(l,lam) once; other labels below (l,lam)");
  Report layers = c.report("no Y(m,mu) with m < l inside M(l,lam)");
  for (const auto& idx : t.indices()) {
    std::map<CellIndex, int> dec;
    std::string err;
    try {
      dec = t.decompose_perm(idx);
    } catch (const std::exception& e) {
      err = std::string("error: ") + e.what();
    }
    if (!err.empty()) {
      rep.add(idx.to_string(), "decomposition", err, false);
      layers.add(idx.to_string(), "layers >= " + std::to_string(idx.l), err, false);
      continue;
    }
    bool ok = dec.count(idx) && dec.at(idx) == 1;
    bool low = true;
    for (const auto& [lab, k] : dec) {
      if (lab != idx && !cell_geq(idx, lab)) ok = false;
      if (lab.l < idx.l) low = false;
    }
    rep.add(idx.to_string(), "Y" + idx.to_string() + "x1, others <= index", join_counts(dec), ok);
    layers.add(idx.to_string(), "layers >= " + std::to_string(idx.l), join_counts(dec), low);
  }
  return {rep, layers};
}

std::vector<Report> suite_hom_exact(const Ctx& c, TypeCContext& t) {
  Report add = c.report("dim Hom(M(idx), -) is additive on J-layer sequences of M(jdx)");
  Report ext = c.report("Ext^1(M(idx), Theta(jdx)) = 0");
  for (const auto& jdx : t.indices()) {
    const Module& target = t.perm(jdx);
    auto chain = j_layer_chain(target);
    std::vector<Module> pieces;  // F_k, and F_k / F_{k+1}
    std::vector<std::pair<std::size_t, std::size_t>> seqs;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (chain[k].rows() == 0) continue;
      Module big = restrict_to(target, chain[k]);
      auto sub_coords = solve_left(chain[k], chain[k + 1]);
      Module sub = restrict_to(big, *sub_coords);
      Module quo = quotient(big, *sub_coords).module;
      pieces.push_back(big);
      pieces.push_back(sub);
      pieces.push_back(quo);
      seqs.push_back({pieces.size() - 3, k});
    }
    for (const auto& idx : t.indices()) {
      const Module& src = t.perm(idx);
      for (const auto& [p, k] : seqs)
        guarded(add, pair_label(idx.to_string(), jdx.to_string() + " layer " + std::to_string(k)), "additive", [&] {
          auto d = hom_dim(src, pieces[p]), c1 = hom_dim(src, pieces[p + 1]), e1 = hom_dim(src, pieces[p + 2]);
          std::string text = std::to_string(d) + " = " + std::to_string(c1) + " + " + std::to_string(e1);
          return std::pair{text, d == c1 + e1};
        });
      guarded(ext, pair_label(idx.to_string(), jdx.to_string()), "0", [&] {
        auto d = ext1_dim(src, t.cell(jdx));
        return std::pair{std::to_string(d), d == 0};
      });
    }
  }
  return {add, ext};
}

std::vector<Report> suite_lr(const Ctx& c) {
  Report rep = c.report("[Ind S'(lam) (x) S'(mu) : S'(nu)] = product of Littlewood-Richardson coefficients");
  const int r = c.cfg.r;
  for (int a = 0; a <= r; ++a)
    for (const auto& lam : enumerate_bipartitions(a))
      for (const auto& mu : enumerate_bipartitions(r - a)) {
        Module ind = induce_product(dual_specht(lam, c.field(), c.placement), dual_specht(mu, c.field(), c.placement));
        for (const auto& nu : enumerate_bipartitions(r)) {
          long long expect =
              lr_coefficient(lam.first, mu.first, nu.first) * lr_coefficient(lam.second, mu.second, nu.second);
          guarded(rep, lam.to_string() + " * " + mu.to_string() + " -> " + nu.to_string(), std::to_string(expect), [&] {
            Module s = dual_specht(nu, c.field(), c.placement);
            auto m = hom_dim(s, ind) / hom_dim(s, s);
            return std::pair{std::to_string(m), static_cast<long long>(m) == expect};
          });
        }
      }
  return {rep};
}

struct SuiteSpec {
  bool needs_char;   // char not 2 or 3
  bool needs_delta;  // delta != 0
  bool needs_char0;  // semisimple statement
  bool type_c;
};

const std::map<std::string, SuiteSpec>& suite_table() {
  static const std::map<std::string, SuiteSpec> t{
      {"w-decomp", {false, false, false, false}}, {"duality", {false, false, false, false}},
      {"hom-ext-w", {true, false, false, false}}, {"stratify", {true, true, false, true}},
      {"filtration", {true, true, false, true}},  {"young", {true, true, false, true}},
      {"main", {true, true, false, true}},        {"hom-exact", {true, true, false, true}},
      {"lr", {false, false, true, false}}};
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"w-decomp", "duality", "hom-ext-w", "stratify", "filtration",
                                              "young",    "main",    "hom-exact", "lr"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  auto it = suite_table().find(name);
  if (it == suite_table().end()) throw ParseError("unknown suite '" + name + "'");
  const SuiteSpec& s = it->second;
  const std::uint32_t p = config.spec.field.characteristic();
  std::string why;
  if (s.needs_char && (p == 2 || p == 3)) why = "characteristic must not be 2 or 3";
  if (s.needs_delta && config.spec.delta.is_zero()) why = "delta must be nonzero";
  if (s.needs_char0 && p != 0) why = "statement is about characteristic 0";
  if (config.r < 0) throw MathError("r must be nonnegative");
  if (!why.empty() && !config.allow_out_of_hypothesis)
    throw HypothesisError("suite " + name + " refused: " + why + " (use --allow-out-of-hypothesis)");

  SuiteResult res{name, config, resolve_placement(config.placement), {}};
  Ctx c{config, res.placement, why.empty()};
  if (s.type_c) {
    TypeCContext t(config.r, config.spec, res.placement, config.seed);
    if (name == "stratify") res.reports = suite_stratify(c, t);
    if (name == "filtration") res.reports = suite_filtration(c, t);
    if (name == "young") res.reports = suite_young(c, t);
    if (name == "main") res.reports = suite_main(c, t);
    if (name == "hom-exact") res.reports = suite_hom_exact(c, t);
  } else {
    if (name == "w-decomp") res.reports = suite_w_decomp(c);
    if (name == "duality") res.reports = suite_duality(c);
    if (name == "hom-ext-w") res.reports = suite_hom_ext_w(c);
    if (name == "lr") res.reports = suite_lr(c);
  }
  return res;
}

}  // namespace brauerc
