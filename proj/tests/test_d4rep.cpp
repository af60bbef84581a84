#include <random>
#include <tuple>

#include "doctest.h"

#include "chevkit/d4rep.hpp"

using namespace chevkit;

namespace {

ThetaParams random_params(const Field& F, std::mt19937_64& rng) {
  return {F.random(rng),         F.random(rng),         F.random(rng),        F.random_nonzero(rng),
          F.random_nonzero(rng), F.random_nonzero(rng), F.random_nonzero(rng)};
}

UPoly linear(const FieldElem& r) { return {-r, r.field().one()}; }

}  // namespace

TEST_CASE("generator matrices") {
  Field F = Field::prime(7);
  const RootSystem& rs = d4_system();
  FieldElem a = F.from_int(3);
  Mat I = Mat::identity(F, 8);
  int e12 = rs.index_of({1, 0, 0, 0});
  int e34 = rs.index_of({0, 0, 0, 1});
  CHECK(d4_matrix(e12, a) == I + Mat::unit(F, 8, 2, 1).scaled(a) - Mat::unit(F, 8, 8, 7).scaled(a));
  CHECK(d4_matrix(e34, a) == I + Mat::unit(F, 8, 5, 3).scaled(a) - Mat::unit(F, 8, 6, 4).scaled(a));
  CHECK(d4_matrix(rs.neg(e12), a) == d4_matrix(e12, a).transpose());
  for (int r = 0; r < rs.num_roots(); ++r) CHECK(form_preserved(d4_matrix(r, a)));
  for (int i = 1; i <= 4; ++i) CHECK(form_preserved(d4_n(F, i)));
  CHECK(form_preserved(I));
  CHECK_FALSE(form_preserved(I + Mat::unit(F, 8, 1, 1)));
}

TEST_CASE("commutator signs agree with the group") {
  Field F = Field::prime(7);
  const RootSystem& rs = d4_system();
  GroupPtr G = ChevGroup::create(rs, F);
  FieldElem a = F.from_int(2), b = F.from_int(5);
  int pairs = 0;
  for (int r = 0; r < rs.num_positive(); ++r)
    for (int s = 0; s < rs.num_positive(); ++s) {
      if (rs.sum(r, s) < 0) continue;
      Mat xr = d4_matrix(r, a), xs = d4_matrix(s, b);
      Mat comm = xr.inverse() * xs.inverse() * xr * xs;
      GroupElt gr = GroupElt::x(G, r, a), gs = GroupElt::x(G, s, b);
      GroupElt gc = gr.inverse() * gs.inverse() * gr * gs;
      auto m = d4_matrix_of(gc);
      REQUIRE(m);
      CHECK(*m == comm);
      ++pairs;
    }
  CHECK(pairs > 0);
}

TEST_CASE("characteristic polynomial") {
  std::mt19937_64 rng(11);
  for (uint64_t p : {101, 5}) {
    Field F = Field::prime(p);
    for (int k = 0; k < (p == 101 ? 100 : 20); ++k) {
      ThetaParams tp = random_params(F, rng);
      Mat th = build_theta_E74(tp);
      CHECK(form_preserved(th));
      CHECK(upoly_eq(char_poly(th), theta_expected_charpoly(tp)));
    }
  }
  Field F = Field::prime(101);
  UPoly x1 = linear(F.one());
  UPoly id = {F.one()};
  for (int i = 0; i < 8; ++i) id = upoly_mul(id, x1);
  CHECK(upoly_eq(char_poly(Mat::identity(F, 8)), id));
  FieldElem z = F.from_int(7), zi = z.inv(), o = F.one();
  UPoly want = {o};
  for (int i = 0; i < 4; ++i) want = upoly_mul(want, x1);
  for (int i = 0; i < 2; ++i) want = upoly_mul(upoly_mul(want, linear(z)), linear(zi));
  CHECK(upoly_eq(char_poly(Mat::diag({o, zi, o, z, zi, o, z, o})), want));
}

TEST_CASE("theta at the base point is the longest element") {
  for (uint64_t p : {5, 7}) {
    Field F = Field::prime(p);
    FieldElem o = F.one(), z = F.zero();
    CHECK(build_theta_E74({z, z, z, o, o, o, o}) == d4_n_longest(F));
  }
}

TEST_CASE("classification samples") {
  Field F7 = Field::prime(7);
  FieldElem o = F7.one(), z = F7.zero();
  // z = -1 with a = 0 forces t2 b^2 + c^2 = 0; theta is an involution exactly when b = c = 0
  for (auto [b, c, t2] : {std::tuple{0, 0, 3}, {1, 1, 6}, {2, 3, 3}}) {
    ThetaParams tp{z, F7.from_int(b), F7.from_int(c), o, F7.from_int(t2), F7.from_int(2), F7.from_int(3)};
    REQUIRE(theta_p(tp)[1] == F7.from_int(2));
    Mat th = build_theta_E74(tp);
    Classification cl = classify_theta(tp);
    CHECK(cl.verified);
    if ((th * th).is_identity()) {
      CHECK(cl.cls == 3);
      REQUIRE(cl.param);
      CHECK(*cl.param == -o);
    } else {
      CHECK(cl.cls == 4);
    }
  }

  // generic split p: form (3) with parameter z or 1/z
  std::mt19937_64 rng(5);
  int seen = 0;
  for (int k = 0; k < 200 && seen < 10; ++k) {
    ThetaParams t = random_params(F7, rng);
    Classification c = classify_theta(t);
    CHECK(c.cls >= 0);
    if (c.cls == 0) continue;
    CHECK(c.verified);
    if (c.cls == 3 && c.z && !c.z->is_one() && *c.z != -o) {
      REQUIRE(c.param);
      CHECK((*c.param == *c.z || *c.param == c.z->inv()));
      ++seen;
    }
  }
  CHECK(seen == 10);
}
