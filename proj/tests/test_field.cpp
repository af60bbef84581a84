#include <random>
#include <set>

#include "doctest.h"

#include "chevkit/field.hpp"

using namespace chevkit;

TEST_CASE("prime field basics") {
  Field F = Field::prime(5);
  CHECK(F.order() == 5u);
  CHECK(F.characteristic() == 5u);
  CHECK(F.from_int(2) * F.from_int(3) == F.one());
  CHECK(F.from_int(3).inv() == F.from_int(2));
  CHECK(F.from_int(-1) == F.from_int(4));
  CHECK_THROWS_AS(F.zero().inv(), ZeroDivisor);
}

TEST_CASE("GF(4) from Y^2+Y+1") {
  Field F = Field::extension(2, 2, {1, 1, 1});
  CHECK(F.order() == 4u);
  FieldElem g = F.gen();
  CHECK(g * g == g + F.one());
  CHECK(g.pow(3) == F.one());
  CHECK(Field::parse("gf 4").order() == 4u);
  CHECK_THROWS(Field::extension(2, 2, {0, 1, 1}));  // Y^2+Y = Y(Y+1)
}

TEST_CASE("finite field index round trip") {
  for (auto desc : {"f7", "gf 4", "gf 9"}) {
    Field F = Field::parse(desc);
    auto all = F.elements();
    CHECK(all.size() == *F.order());
    for (uint64_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].index() == i);
      CHECK(F.element(i) == all[i]);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (auto desc : {"q", "f101", "gf 8", "fun f2: l1,l2"}) {
    Field F = Field::parse(desc);
    for (int k = 0; k < 30; ++k) {
      FieldElem a = F.random(rng), b = F.random(rng), c = F.random(rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == F.zero());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("rational functions in characteristic 2") {
  Field F = Field::parse("fun f2: l1,l2");
  FieldElem l1 = F.var(0), l2 = F.var(1);
  CHECK(F.characteristic() == 2u);
  CHECK((l1 + l2) * (l1 + l2) == l1 * l1 + l2 * l2);
  CHECK((l1 / (l1 + l2)) * (l1 + l2) == l1);
  CHECK_FALSE(sqrt_of(l1).has_value());
}

TEST_CASE("degree cap") {
  Field F = Field::parse("fun f2: l1,l2");
  CHECK(F.degree_cap() == 8);
  CHECK_THROWS_AS(F.var(0).pow(9), BudgetError);
  Field G = Field::parse("fun f2 cap 32: l1,l2");
  CHECK(G.degree_cap() == 32);
  CHECK_NOTHROW(G.var(0).pow(9));
}

TEST_CASE("quadratic roots") {
  Field Q = Field::rationals();
  auto r = quadratic_roots(Q.from_int(-3), Q.from_int(2));
  REQUIRE(r.size() == 2);
  std::set<std::string> got{r[0].first.str(), r[1].first.str()};
  CHECK(got == std::set<std::string>{"1", "2"});
  Field F2 = Field::prime(2);
  CHECK(quadratic_roots(F2.one(), F2.one()).empty());
  Field F5 = Field::prime(5);
  auto s = quadratic_roots(F5.zero(), F5.from_int(4));
  REQUIRE(s.size() == 2);
  std::set<uint64_t> idx{s[0].first.index(), s[1].first.index()};
  CHECK(idx == std::set<uint64_t>{1, 4});
}

TEST_CASE("scalar text round trip") {
  std::mt19937_64 rng(3);
  for (auto desc : {"f5", "gf 4", "q", "fun f2: l1,l2"}) {
    Field F = Field::parse(desc);
    for (int k = 0; k < 20; ++k) {
      FieldElem a = F.random(rng);
      CHECK(parse_scalar(a.text()) == a);
      CHECK(parse_in(F, a.str()) == a);
    }
  }
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(Field::prime(5).one() + Field::prime(7).one(), FieldMismatch);
}
