#include <random>
#include <set>

#include "brauerc/bicomb.hpp"
#include "doctest.h"

using namespace brauerc;

namespace {
BiPartition bp(const char* s) { return BiPartition::parse(s); }
long long partition_count(int n) { return static_cast<long long>(enumerate_partitions(n).size()); }
}  // namespace

TEST_CASE("bi-partition enumeration counts") {
  CHECK(enumerate_bipartitions(0).size() == 1);
  CHECK(enumerate_bipartitions(1).size() == 2);
  CHECK(enumerate_bipartitions(2).size() == 5);
  for (int r = 0; r <= 6; ++r) {
    long long expect = 0;
    for (int b = 0; b <= r; ++b) expect += partition_count(b) * partition_count(r - b);
    auto all = enumerate_bipartitions(r);
    CHECK(static_cast<long long>(all.size()) == expect);
    CHECK(std::set<BiPartition>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(partition_count(5) == 7);
}

TEST_CASE("dominance examples") {
  CHECK(dominates(bp("2|-"), bp("1|1")));
  CHECK(dominates(bp("1|1"), bp("-|2")));
  CHECK(!dominates(bp("-|2"), bp("1|1")));
  CHECK_THROWS(dominates(bp("2|-"), bp("1|-")));
}

TEST_CASE("dominance is a partial order and conjugation reverses it") {
  for (int r = 0; r <= 4; ++r) {
    auto all = enumerate_bipartitions(r);
    for (const auto& a : all) {
      CHECK(dominates(a, a));
      CHECK(conjugate(conjugate(a)) == a);
      for (const auto& b : all) {
        if (a != b && dominates(a, b)) CHECK(!dominates(b, a));
        CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
        for (const auto& c : all)
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(bp("2|1")) == bp("1|1,1"));
  CHECK(conjugate(bp("-|-")) == bp("-|-"));
}

TEST_CASE("p-regularity") {
  CHECK(!is_p_regular(bp("1,1,1|-"), 3));
  CHECK(is_p_regular(bp("1,1|-"), 3));
  CHECK(!is_p_regular(bp("1|1"), 2));
  CHECK(is_p_regular(bp("-|2"), 2));
  CHECK(!is_p_regular(bp("-|1,1"), 2));
  for (const auto& a : enumerate_bipartitions(3)) CHECK(is_p_regular(a, 0));
}

TEST_CASE("row and column groups") {
  auto t = BiTableau::initial(bp("2|-"));
  CHECK(row_group(t, SignPlacement::first).size() == 8);
  CHECK(column_group(t, SignPlacement::first).size() == 1);
  CHECK(row_group(t, SignPlacement::second).size() == 2);
  auto u = BiTableau::initial(bp("1|1"));
  CHECK(row_group(u, SignPlacement::first).size() == 2);
  CHECK(row_group(u, SignPlacement::second).size() == 2);
  auto v = BiTableau::initial(bp("-|1,1"));
  CHECK(column_group(v, SignPlacement::first).size() == 8);
  // C_t = R_{t'} and |R_t| = Young subgroup order
  for (auto pl : {SignPlacement::first, SignPlacement::second})
    for (const auto& lam : enumerate_bipartitions(3)) {
      auto t3 = BiTableau::initial(lam);
      CHECK(column_group(t3, pl) == row_group(t3.conjugate(), pl));
      BiComposition c{lam.first, lam.second};
      CHECK(row_group(t3, pl).size() == young_subgroup(c, pl).size());
    }
}

TEST_CASE("young subgroups") {
  CHECK(young_subgroup({{2}, {}}, SignPlacement::second).size() == 2);
  CHECK(young_subgroup({{}, {2}}, SignPlacement::second).size() == 8);
  auto g = young_subgroup({{1}, {1}}, SignPlacement::second);
  CHECK(g.size() == 2);
  CHECK(young_subgroup({{1}, {1}}, SignPlacement::first).size() == 2);
  CHECK(young_subgroup({{0, 2}, {1}}, SignPlacement::first).size() == 8 * 1);
}

TEST_CASE("tabloid canonical form is a fixed point") {
  auto t = BiTableau::initial(bp("2|1"));
  for (const auto& g : enumerate_group(3))
    for (auto pl : {SignPlacement::first, SignPlacement::second}) {
      auto a = BiTabloid::of(t.act(g), pl);
      BiTableau as_tableau{t.shape, a.rows};
      CHECK(BiTabloid::of(as_tableau, pl) == a);
      // row-equivalent tableaux share the tabloid
      for (const auto& h : row_group(t.act(g), pl)) CHECK(BiTabloid::of(t.act(g).act(h), pl) == a);
    }
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient({2}, {1}, {3}) == 1);
  CHECK(lr_coefficient({2}, {1}, {2, 1}) == 1);
  CHECK(lr_coefficient({2}, {1}, {1, 1, 1}) == 0);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({1}, {1}, {3}) == 0);
  // symmetry in alpha, beta
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : enumerate_partitions(n))
      for (int a = 0; a <= n; ++a)
        for (const auto& al : enumerate_partitions(a))
          for (const auto& be : enumerate_partitions(n - a)) {
            if (rng() % 3) continue;
            CHECK(lr_coefficient(al, be, g) == lr_coefficient(be, al, g));
          }
  // sum over gamma of c * f^gamma = binom * f^alpha f^beta, via dimension count at n=4
}

TEST_CASE("cell indices and the Lambda order") {
  auto idx = cell_indices(2);
  CHECK(idx.size() == 8);
  int per[3] = {0, 0, 0};
  for (const auto& c : idx) ++per[c.l];
  CHECK(per[0] == 5);
  CHECK(per[1] == 2);
  CHECK(per[2] == 1);
  CellIndex a{0, bp("2|-")}, b{1, bp("1|-")}, c{0, bp("1|1")};
  CHECK(cell_geq(a, b));
  CHECK(!cell_geq(b, a));
  CHECK(cell_geq(c, a));  // equal layer: 2|- dominates 1|1
  CHECK(!cell_geq(a, c));
  // the listing is a linear extension in decreasing order
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) CHECK(!cell_gt(idx[j], idx[i]));
  CHECK(CellIndex::parse("(1,1|-)") == b);
  CHECK(b.to_string() == "(1,1|-)");
}

TEST_CASE("text syntax") {
  CHECK(bp("2,1|1").first == Partition{2, 1});
  CHECK(bp("-|2").first.empty());
  CHECK(bp("2,1|1").to_string() == "2,1|1");
  CHECK_THROWS_AS(bp("1,2|-"), ParseError);
  CHECK_THROWS_AS(bp("2"), ParseError);
}
