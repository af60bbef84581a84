#include <random>

#include "doctest.h"

#include "chevkit/algebras.hpp"

using namespace chevkit;

namespace {

void composition_laws(const CompAlg& A, std::mt19937_64& rng, int n) {
  for (int k = 0; k < n; ++k) {
    AlgElem x = A.random(rng), y = A.random(rng);
    CHECK(A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y));
    CHECK(A.eq(A.conj(A.conj(x)), x));
    CHECK(A.is_scalar(A.mul(x, A.conj(x))));
    CHECK(A.is_scalar(A.add(x, A.conj(x))));
    CHECK(A.eq(A.mul(x, A.mul(x, y)), A.mul(A.mul(x, x), y)));
    CHECK(A.eq(A.mul(A.mul(y, x), x), A.mul(y, A.mul(x, x))));
  }
}

// small random element of F2(l1,l2): a sum of a few low-degree monomials
FieldElem small(const Field& F, std::mt19937_64& rng) {
  FieldElem l1 = F.var(0), l2 = F.var(1);
  FieldElem r = F.zero();
  if (rng() & 1) r += F.one();
  if (rng() & 1) r += l1;
  if (rng() & 1) r += l2;
  return r;
}

}  // namespace

TEST_CASE("Cayley-Dickson doubling") {
  Field Q = Field::rationals();
  CompAlg H = CompAlg::cayley_dickson(CompAlg::cayley_dickson(CompAlg::base(Q), -Q.one()), -Q.one());
  CHECK(H.dim() == 4);
  CHECK(H.norm({Q.one(), Q.one(), Q.one(), Q.one()}) == Q.from_int(4));
  std::mt19937_64 rng(1);
  composition_laws(H, rng, 200);

  Field F = Field::prime(7);
  CompAlg Hs = CompAlg::cayley_dickson(CompAlg::cayley_dickson(CompAlg::base(F), F.one()), F.one());
  CompAlg O = CompAlg::cayley_dickson(Hs, F.one());
  CHECK(O.dim() == 8);
  AlgElem iso = O.zero();
  iso[0] = F.one();
  iso[1] = F.one();
  CHECK(O.norm(iso).is_zero());
  composition_laws(O, rng, 1000);
  CHECK_THROWS(CompAlg::cayley_dickson(O, F.one()));
}

TEST_CASE("Zorn octonions") {
  Field F = Field::prime(5);
  CompAlg O = CompAlg::zorn(F);
  std::mt19937_64 rng(2);
  composition_laws(O, rng, 1000);
  for (int k = 0; k < 100; ++k) {
    AlgElem x = O.random(rng);
    CHECK(O.eq(O.mul(x, O.conj(x)), O.scalar(O.norm(x))));
  }
  // non-associative
  bool assoc = true;
  for (int k = 0; k < 50 && assoc; ++k) {
    AlgElem x = O.random(rng), y = O.random(rng), z = O.random(rng);
    assoc = O.eq(O.mul(O.mul(x, y), z), O.mul(x, O.mul(y, z)));
  }
  CHECK_FALSE(assoc);
}

TEST_CASE("inseparable quaternions") {
  Field F = Field::parse("fun f2 cap 16: l1,l2");
  FieldElem l1 = F.var(0), l2 = F.var(1);
  CHECK(inseparable_parameters_ok(l1, l2));
  CHECK_FALSE(inseparable_parameters_ok(l1, l1 * l1));
  CompAlg H = CompAlg::inseparable(l1, l2);
  CompAlg O = CompAlg::zorn(F);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    AlgElem x = {small(F, rng), small(F, rng), small(F, rng), small(F, rng)};
    AlgElem y = {small(F, rng), small(F, rng), small(F, rng), small(F, rng)};
    AlgElem z = {small(F, rng), small(F, rng), small(F, rng), small(F, rng)};
    CHECK(H.eq(H.conj(x), x));
    CHECK(H.eq(H.mul(x, x), H.scalar(H.norm(x))));
    CHECK(H.eq(H.mul(x, y), H.mul(y, x)));
    CHECK(H.eq(H.mul(H.mul(x, y), z), H.mul(x, H.mul(y, z))));
    if (!H.eq(x, H.zero())) CHECK(H.eq(H.mul(x, H.inverse(x)), H.one()));
    // the embedding into the Zorn octonions is multiplicative
    CHECK(O.eq(inseparable_to_zorn(H, O, H.mul(x, y)),
               O.mul(inseparable_to_zorn(H, O, x), inseparable_to_zorn(H, O, y))));
  }
}

TEST_CASE("Veronese maps") {
  Field F = Field::prime(5);
  CompAlg K = CompAlg::base(F);
  ProjPoint p = veronese(K, {F.one()}, {F.zero()}, {F.zero()});
  std::vector<FieldElem> want(6, F.zero());
  want[0] = F.one();
  CHECK(p.c == want);
  CHECK_THROWS(veronese(K, {F.zero()}, {F.zero()}, {F.zero()}));

  CompAlg H = CompAlg::cayley_dickson(CompAlg::cayley_dickson(K, F.one()), F.from_int(2));
  CompAlg O = CompAlg::zorn(F);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    CHECK(veronese_violations(H, veronese(H, H.random(rng), H.random(rng), H.random(rng)).c) == 0);
    auto v = veronese_affine(O, O.random(rng), O.random(rng)).c;
    CHECK(v.size() == 27);
    CHECK(e6_equations(O, v));
    CHECK(e6_join(e6_split(O, v)) == v);
  }
  // a perturbed point fails
  auto v = veronese_affine(O, O.random(rng), O.random(rng)).c;
  v[0] += F.one();
  CHECK(e6_violations(O, v) > 0);
}

TEST_CASE("cubic form on secant lines") {
  Field F = Field::prime(7);
  CompAlg O = CompAlg::zorn(F);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    auto v = veronese_affine(O, O.random(rng), O.random(rng)).c;
    auto w = veronese_affine(O, O.random(rng), O.random(rng)).c;
    FieldElem s = F.random(rng), t = F.random(rng);
    std::vector<FieldElem> line(27);
    for (int i = 0; i < 27; ++i) line[i] = s * v[i] + t * w[i];
    CHECK(cubic_C(O, line).is_zero());
  }
  // diag(1,1,1) is off the cubic
  std::vector<FieldElem> e(27, F.zero());
  e[0] = e[1] = e[2] = F.one();
  CHECK(cubic_C(O, e) == F.one());
}

TEST_CASE("automorphisms A(a,b,c,d)") {
  Field F = Field::parse("fun f2 cap 32: l1,l2");
  FieldElem l1 = F.var(0), l2 = F.var(1), z = F.zero(), o = F.one();
  CompAlg O = CompAlg::zorn(F);
  CompAlg H = CompAlg::inseparable(l1, l2);
  CHECK(aut_A(l1, l2, z, z, z, z).is_identity());
  CHECK(is_admissible(l1, l2, z, z, z, z));
  CHECK(is_admissible(l1, l2, o, z, z, z));
  CHECK_FALSE(is_admissible(l1, l2, z, o, z, z));
  std::mt19937_64 rng(6);
  for (int k = 0; k < 5; ++k) {
    AlgElem u = H.inverse({o, small(F, rng), small(F, rng), small(F, rng)});
    AlgElem v = H.inverse({o, small(F, rng), small(F, rng), small(F, rng)});
    CHECK(is_admissible(l1, l2, u[0], u[1], u[2], u[3]));
    Mat A = aut_A(l1, l2, u[0], u[1], u[2], u[3]);
    Mat B = aut_A(l1, l2, v[0], v[1], v[2], v[3]);
    AlgElem s = H.add(u, v);
    CHECK(A * B == aut_A(l1, l2, s[0], s[1], s[2], s[3]));
    if (k < 2) {
      CHECK(is_automorphism(O, A));
      // fixes the embedded quaternions
      AlgElem h = {small(F, rng), small(F, rng), small(F, rng), small(F, rng)};
      AlgElem e = inseparable_to_zorn(H, O, h);
      CHECK(O.eq(apply_row(A, e), e));
      // blockwise action commutes with the dual polar map
      AlgElem X1 = inseparable_to_zorn(H, O, {o, l1, z, z}), X2 = O.one(), X3 = O.zero();
      X2[1] = o;
      auto lhs = dpv_blockwise(O, A, dpv_nu(O, o, l2, z, X1, X2, X3));
      auto rhs = dpv_nu(O, o, l2, z, apply_row(A, X1), apply_row(A, X2), apply_row(A, X3));
      CHECK(lhs == rhs);
    }
  }
  CHECK_FALSE(is_automorphism(O, aut_A(l1, l2, z, o, z, z)));
}

TEST_CASE("dual polar affine map") {
  Field F = Field::prime(3);
  CompAlg O = CompAlg::zorn(F);
  auto v = dpv_nu(O, F.zero(), F.zero(), F.zero(), O.zero(), O.zero(), O.zero());
  REQUIRE(v.size() == 56);
  CHECK(v[0].is_one());
  for (size_t i = 1; i < v.size(); ++i) CHECK(v[i].is_zero());
}
