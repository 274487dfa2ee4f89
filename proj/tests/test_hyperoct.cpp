#include <set>

#include "brauerc/diagrams.hpp"
#include "brauerc/hyperoct.hpp"
#include "doctest.h"

using namespace brauerc;

namespace {
SignedPerm pw(const SignedPerm& a, int e) {
  SignedPerm acc = SignedPerm::identity(a.rank());
  for (int i = 0; i < e; ++i) acc = acc * a;
  return acc;
}
}  // namespace

TEST_CASE("compose examples") {
  auto s0 = SignedPerm::generator(2, 0), s1 = SignedPerm::generator(2, 1);
  CHECK((s0 * s0).is_identity());
  CHECK(pw(s0 * s1, 4).is_identity());
  CHECK(!pw(s0 * s1, 2).is_identity());
  CHECK(s1 * s0 * s1 == SignedPerm::flip(2, 2));
  CHECK_THROWS(compose(SignedPerm::identity(2), SignedPerm::identity(3)));
}

TEST_CASE("compose reads left to right") {
  auto a = SignedPerm::parse("[-2,1]"), b = SignedPerm::parse("[2,-1]");
  for (int x : {1, 2, -1, -2}) CHECK((a * b)(x) == b(a(x)));
}

TEST_CASE("generator relations") {
  for (int r = 2; r <= 4; ++r) {
    auto g = generators(r);
    for (int i = 0; i < r; ++i) {
      CHECK((g[i] * g[i]).is_identity());
      for (int j = i + 1; j < r; ++j) {
        int m = j - i >= 2 ? 2 : (i == 0 ? 4 : 3);
        CHECK(pw(g[i] * g[j], m).is_identity());
        CHECK(!pw(g[i] * g[j], m - 1).is_identity());
      }
    }
  }
}

TEST_CASE("sign character") {
  Field q = Field::rationals();
  CHECK(sgn_of(SignedPerm::identity(3), q).is_one());
  CHECK(sgn_of(SignedPerm::generator(2, 0), q) == q.from_int(-1));
  // xi_1 xi_2 and the transposition 1<->2
  auto x = SignedPerm::flip(2, 1) * SignedPerm::flip(2, 2) * SignedPerm::generator(2, 1);
  CHECK(x.sign() == -1);
  for (int r = 1; r <= 3; ++r) {
    auto el = enumerate_group(r);
    for (const auto& g : generators(r)) CHECK(g.sign() == -1);
    for (const auto& a : el)
      for (const auto& b : el) CHECK((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_group(0).size() == 1);
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(3).size() == 48);
  CHECK(enumerate_group(4).size() == 384);
  auto el = enumerate_group(3);
  CHECK(std::set<SignedPerm>(el.begin(), el.end()).size() == 48);
}

TEST_CASE("text form") {
  auto s = SignedPerm::parse("[-2,1]");
  CHECK(s(1) == -2);
  CHECK(s(2) == 1);
  CHECK(s.to_string() == "[-2,1]");
  CHECK_THROWS_AS(SignedPerm::parse("[1,1]"), MathError);
  CHECK_THROWS_AS(SignedPerm::parse("1,2"), ParseError);
}

TEST_CASE("as_diagram") {
  CHECK(as_diagram(SignedPerm::identity(3)) == CDiagram::identity(3));
  CHECK(as_diagram(SignedPerm::generator(1, 0)).to_string() == "[t-1:b1,t1:b-1]");
  auto el = enumerate_group(3);
  for (std::size_t i = 0; i < el.size(); i += 5)
    for (std::size_t j = 0; j < el.size(); j += 7) {
      auto pr = multiply(as_diagram(el[i]), as_diagram(el[j]));
      CHECK(pr.loops == 0);
      CHECK(pr.result == as_diagram(el[i] * el[j]));
    }
  std::set<CDiagram> images;
  for (const auto& s : enumerate_group(2)) {
    CHECK(as_diagram(s).top_arcs() == 0);
    images.insert(as_diagram(s));
  }
  CHECK(images.size() == 8);
}
