#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "brauerc/algebra.hpp"
#include "brauerc/diagrams.hpp"
#include "doctest.h"

using namespace brauerc;

namespace {

// Independent oracle: all perfect matchings on 4r points, filtered for mirror symmetry.
std::set<CDiagram> brute_force_basis(int r) {
  const int n = 4 * r;
  auto mirror = [r](int v) { return (v / (2 * r)) * 2 * r + (2 * r - 1 - v % (2 * r)); };
  std::set<CDiagram> out;
  std::vector<int> p(n, -1);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (p[i] < 0) { first = i; break; }
    if (first < 0) {
      for (int i = 0; i < n; ++i)
        if (mirror(p[i]) != p[mirror(i)]) return;
      std::vector<std::uint8_t> pp(p.begin(), p.end());
      out.insert(CDiagram(r, pp));
      return;
    }
    for (int j = first + 1; j < n; ++j)
      if (p[j] < 0) {
        p[first] = j;
        p[j] = first;
        rec();
        p[first] = p[j] = -1;
      }
  };
  if (r == 0) return {CDiagram::identity(0)};
  rec();
  return out;
}

// Oracle for V_l: subsets of symmetric edges, counted directly from label pairs.
long long brute_force_dangles(int r, int l) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = -r; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b)
      if (a && b) pairs.push_back({a, b});
  long long count = 0;
  std::vector<int> used(2 * r + 1, 0);
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == l) {
      std::set<std::pair<int, int>> s(chosen.begin(), chosen.end());
      for (auto [a, b] : chosen) {
        std::pair<int, int> m{std::min(-a, -b), std::max(-a, -b)};
        if (!s.count(m)) return;
      }
      ++count;
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (used[a + r] || used[b + r]) continue;
      used[a + r] = used[b + r] = 1;
      chosen.push_back(pairs[i]);
      rec(i + 1);
      chosen.pop_back();
      used[a + r] = used[b + r] = 0;
    }
  };
  rec(0);
  return count;
}

// Oracle multiplier: union-find over top(a), middle, bottom(b).
DiagramProduct stack_oracle(const CDiagram& a, const CDiagram& b) {
  const int r = a.rank(), w = 2 * r;
  std::vector<int> parent(3 * w);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  // a occupies levels 0 (top) and 1 (middle); b occupies 1 and 2.
  for (int v = 0; v < 2 * w; ++v) unite(v, a.partner(v));
  for (int v = 0; v < 2 * w; ++v) unite(v + w, b.partner(v) + w);
  std::set<int> outer_roots, all_roots;
  for (int v = 0; v < w; ++v) outer_roots.insert(find(v));
  for (int v = 2 * w; v < 3 * w; ++v) outer_roots.insert(find(v));
  for (int v = w; v < 2 * w; ++v) all_roots.insert(find(v));
  int loops = 0;
  for (int root : all_roots)
    if (!outer_roots.count(root)) ++loops;
  std::vector<std::uint8_t> p(2 * w);
  std::vector<int> outer;
  for (int v = 0; v < w; ++v) outer.push_back(v);
  for (int v = 2 * w; v < 3 * w; ++v) outer.push_back(v);
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = 0; j < outer.size(); ++j)
      if (i != j && find(outer[i]) == find(outer[j])) p[i] = static_cast<std::uint8_t>(j);
  return {loops, CDiagram(r, p)};
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

FieldSpec spec(char kind, const char* delta) { return FieldSpec::make(kind == 'Q' ? 0 : kind, delta); }

}  // namespace

TEST_CASE("basis counts agree with brute force and the inflation sum") {
  for (int r = 0; r <= 3; ++r) {
    auto basis = enumerate_basis(r);
    auto brute = brute_force_basis(r);
    CHECK(basis.size() == brute.size());
    CHECK(std::set<CDiagram>(basis.begin(), basis.end()) == brute);
    long long inflation = 0;
    for (int l = 0; l <= r; ++l) {
      long long v = static_cast<long long>(enumerate_dangles(r, l).size());
      CHECK(v == brute_force_dangles(r, l));
      inflation += v * v * (1LL << (r - l)) * factorial(r - l);
    }
    CHECK(static_cast<long long>(basis.size()) == inflation);
  }
  CHECK(enumerate_basis(1).size() == 3);
  CHECK(enumerate_basis(2).size() == 25);
  CHECK(enumerate_basis(3).size() == 331);
  CHECK(enumerate_basis(4).size() == 5937);
  CHECK(enumerate_dangles(1, 1).size() == 1);
  CHECK(enumerate_dangles(2, 1).size() == 2);
  CHECK(enumerate_dangles(2, 2).size() == 3);
  for (int l = 0; l <= 4; ++l)
    CHECK(static_cast<long long>(enumerate_dangles(4, l).size()) == brute_force_dangles(4, l));
}

TEST_CASE("multiply examples") {
  for (int k = 0; k < 3; ++k) {
    auto s = as_diagram(SignedPerm::generator(3, k));
    auto pr = multiply(s, s);
    CHECK(pr.loops == 0);
    CHECK(pr.result == CDiagram::identity(3));
  }
  auto e1 = CDiagram::parse("[t-1:t1, b-1:b1]");
  CHECK(e1.rank() == 1);
  CHECK(e1 == e_hat(1, 1));
  auto sq = multiply(e1, e1);
  CHECK(sq.loops == 1);
  CHECK(sq.result == e1);
  auto g = arc_generator(2, 1);
  CHECK(g.to_string() == "[t-2:t-1,t1:t2,b-2:b-1,b1:b2]");
  auto sq2 = multiply(g, g);
  CHECK(sq2.loops == 2);
  CHECK(sq2.result == g);
  CHECK(multiply(e_hat(2, 2), e_hat(2, 2)).loops == 2);
}

TEST_CASE("multiply agrees with a union-find oracle") {
  for (int r = 1; r <= 3; ++r) {
    auto basis = enumerate_basis(r);
    std::mt19937_64 rng(r);
    int trials = r == 3 ? 4000 : static_cast<int>(basis.size() * basis.size());
    for (int t = 0; t < trials; ++t) {
      const auto& a = r == 3 ? basis[rng() % basis.size()] : basis[t / basis.size()];
      const auto& b = r == 3 ? basis[rng() % basis.size()] : basis[t % basis.size()];
      auto mine = multiply(a, b), oracle = stack_oracle(a, b);
      CHECK(mine.loops == oracle.loops);
      CHECK(mine.result == oracle.result);
      CHECK(mine.result.top_arcs() >= a.top_arcs());
      CHECK(mine.result.top_arcs() >= b.top_arcs());
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution(CDiagram::identity(2)) == CDiagram::identity(2));
  for (const auto& s : enumerate_group(3)) CHECK(involution(as_diagram(s)) == as_diagram(s.inverse()));
  for (const auto& g : algebra_generators(3)) CHECK(involution(g) == g);
  auto basis = enumerate_basis(2);
  for (const auto& a : basis) {
    CHECK(involution(involution(a)) == a);
    for (const auto& b : basis) {
      auto ab = multiply(a, b), ba = multiply(involution(b), involution(a));
      CHECK(involution(ab.result) == ba.result);
      CHECK(ab.loops == ba.loops);
    }
  }
}

TEST_CASE("associativity of algebra elements") {
  std::mt19937_64 rng(5);
  for (const auto& sp : {spec('Q', "3"), spec(5, "1")}) {
    for (int r = 1; r <= 3; ++r) {
      auto basis = enumerate_basis(r);
      for (int t = 0; t < 60; ++t) {
        auto pick = [&] {
          AlgebraElement x(sp, r);
          for (int k = 0; k < 3; ++k) x.add(basis[rng() % basis.size()], sp.field.from_int(1 + rng() % 4));
          return x;
        };
        auto a = pick(), b = pick(), c = pick();
        CHECK((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("ideals") {
  CHECK(ideal_basis(2, 0).size() == 25);
  CHECK(ideal_basis(2, 2).size() == 9);
  CHECK(ideal_basis(1, 1).size() == 1);
  CHECK(ideal_basis(1, 1)[0] == e_hat(1, 1));
  auto basis = enumerate_basis(2);
  for (int l = 0; l <= 2; ++l) {
    auto j = ideal_basis(2, l);
    std::set<CDiagram> js(j.begin(), j.end());
    if (l < 2) {
      auto next = ideal_basis(2, l + 1);
      for (const auto& d : next) CHECK(js.count(d));
    }
    for (const auto& x : j)
      for (const auto& b : basis) {
        CHECK(js.count(multiply(x, b).result));
        CHECK(js.count(multiply(b, x).result));
      }
  }
}

TEST_CASE("idempotents") {
  auto q3 = spec('Q', "3");
  auto e0 = idempotent_e_l(0, 2, q3);
  CHECK(e0 == AlgebraElement::basis(q3, CDiagram::identity(2)));
  auto q2 = spec('Q', "2");
  auto e = idempotent_e_l(1, 1, q2);
  CHECK(e.coefficient(e_hat(1, 1)) == q2.field.parse("1/2"));
  CHECK(e * e == e);
  for (const auto& sp : {spec('Q', "5/2"), spec(5, "1"), spec(7, "3")})
    for (int r = 1; r <= 3; ++r)
      for (int l = 0; l <= r; ++l) {
        auto x = idempotent_e_l(l, r, sp);
        CHECK(x * x == x);
      }
  CHECK_THROWS_AS(idempotent_e_l(1, 2, spec(5, "0")), DeltaZeroError);
  CHECK_NOTHROW(idempotent_e_l(0, 2, spec(5, "0")));
}

TEST_CASE("layer decomposition") {
  for (const auto& s : enumerate_group(3)) {
    auto ld = layer_decompose(as_diagram(s));
    CHECK(ld.l == 0);
    CHECK(ld.top.edge_count() == 0);
    CHECK(ld.through == s);
  }
  for (int l = 0; l <= 3; ++l) {
    auto ld = layer_decompose(e_hat(3, l));
    CHECK(ld.l == l);
    CHECK(ld.top == ld.bottom);
    CHECK(ld.through.is_identity());
    CHECK(ld.through.rank() == 3 - l);
  }
  for (int r = 1; r <= 3; ++r)
    for (const auto& a : enumerate_basis(r)) {
      auto ld = layer_decompose(a);
      CHECK(ld.l == a.top_arcs());
      CHECK(recompose(ld.top, ld.bottom, ld.through) == a);
    }
}

TEST_CASE("corner algebra dimension") {
  for (int r = 1; r <= 3; ++r)
    for (int l = 0; l <= r; ++l) {
      std::set<CDiagram> found;
      auto eh = e_hat(r, l);
      for (const auto& b : enumerate_basis(r)) {
        auto x = multiply(multiply(eh, b).result, eh).result;
        if (x.top_arcs() == l) found.insert(x);
      }
      CHECK(static_cast<long long>(found.size()) == (1LL << (r - l)) * factorial(r - l));
    }
}

TEST_CASE("text syntax") {
  auto d = CDiagram::parse("[t-1:t1, b-1:b1]");
  CHECK(d.to_string() == "[t-1:t1,b-1:b1]");
  CHECK(CDiagram::parse(d.to_string()) == d);
  CHECK_THROWS(CDiagram::parse("[t-2:b-2, t-1:b-1, t1:b2, t2:b1]"));  // not mirror symmetric
  for (const auto& a : enumerate_basis(2)) CHECK(CDiagram::parse(a.to_string(), 2) == a);
}

TEST_CASE("generators produce every basis diagram") {
  for (int r = 1; r <= 3; ++r) {
    auto alg = brauer_c_algebra(r, spec(5, "1"));
    CHECK(alg->dimension() == enumerate_basis(r).size());
  }
}
