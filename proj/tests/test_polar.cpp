#include <random>

#include "doctest.h"

#include "chevkit/polar.hpp"

using namespace chevkit;

namespace {

Collineation from_rows(int d, const std::vector<std::vector<uint8_t>>& rows) {
  Collineation c = Collineation::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c.m[i * d + j] = rows[i][j];
  return c;
}

}  // namespace

TEST_CASE("point counts and generators") {
  CHECK(HyperbolicSpace::build(2, 3).points.size() == 16);
  CHECK(HyperbolicSpace::build(3, 2).points.size() == 35);
  CHECK(HyperbolicSpace::build(2, 2).points.size() == 9);
  for (auto [n, q] : {std::pair{2, 4}, {3, 3}, {4, 2}}) {
    HyperbolicSpace sp = HyperbolicSpace::build(n, q);
    size_t qn1 = 1, qn = 1;
    for (int i = 0; i < n - 1; ++i) qn1 *= q;
    qn = qn1 * q;
    CHECK(sp.points.size() == (qn1 + 1) * (qn - 1) / (q - 1));
    // each submaximal singular subspace lies in exactly two generators
    const auto& gens = sp.generators();
    for (const auto& s : sp.subs[n - 2]) {
      int in = 0;
      for (const auto& g : gens) {
        bool sub = true;
        for (size_t w = 0; w < s.bits.size(); ++w) sub = sub && (s.bits[w] & ~g.bits[w]) == 0;
        in += sub;
      }
      CHECK(in == 2);
    }
  }
}

TEST_CASE("identity and non-collineations") {
  HyperbolicSpace sp = HyperbolicSpace::build(3, 2);
  auto perm = point_permutation(sp, Collineation::identity(6));
  CHECK_FALSE(is_kangaroo(sp, perm).kangaroo);
  auto eq = kangaroo_equivalences(sp, perm);
  CHECK(eq.agree());
  CHECK(eq.holds[0]);
  Collineation bad = Collineation::identity(6);
  bad.m[0 * 6 + 1] = 1;
  CHECK_THROWS_AS(point_permutation(sp, bad), NotCollineation);
}

TEST_CASE("transvection on D3(2) is a lazy kangaroo") {
  HyperbolicSpace sp = HyperbolicSpace::build(3, 2);
  Collineation r = reflection(sp, PVec{1, 0, 0, 0, 0, 1});
  auto perm = point_permutation(sp, r);
  auto v = is_kangaroo(sp, perm);
  CHECK(v.kangaroo);
  CHECK(v.lazy);
  auto eq = kangaroo_equivalences(sp, perm);
  CHECK(eq.agree());
  for (bool b : eq.holds) CHECK(b);
}

TEST_CASE("root elation on D3(2) is not a kangaroo") {
  HyperbolicSpace sp = HyperbolicSpace::build(3, 2);
  Collineation x = Collineation::identity(6);
  x.m[1 * 6 + 0] = 1;
  x.m[5 * 6 + 4] = 1;
  auto perm = point_permutation(sp, x);
  CHECK_FALSE(is_kangaroo(sp, perm).kangaroo);
  auto eq = kangaroo_equivalences(sp, perm);
  CHECK(eq.agree());
  for (bool b : eq.holds) CHECK_FALSE(b);
  CHECK_THROWS_AS(fixed_structure(sp, x), std::invalid_argument);
}

TEST_CASE("exhaustive D3(2)") {
  HyperbolicSpace sp = HyperbolicSpace::build(3, 2);
  auto group = isometry_group(sp);
  CHECK(group.size() == 40320);
  size_t agree = 0, diligent = 0, ovoids = 0;
  for (const auto& c : group) {
    auto perm = point_permutation(sp, c);
    agree += kangaroo_equivalences(sp, perm).agree();
    auto v = is_kangaroo(sp, perm);
    if (v.diligent) {
      ++diligent;
      FixedStructure fs = fixed_structure(sp, c);
      ovoids += fs.ovoid;
      CHECK(fs.skeleton == -1);
    }
  }
  CHECK(agree == group.size());
  CHECK(diligent > 0);
  CHECK(ovoids == diligent);
}

TEST_CASE("random D3(3) elements") {
  HyperbolicSpace sp = HyperbolicSpace::build(3, 3);
  std::mt19937_64 rng(3);
  int found = 0;
  for (int k = 0; k < 5000; ++k) {
    Collineation c = random_isometry(sp, rng);
    auto perm = point_permutation(sp, c);
    CHECK(kangaroo_equivalences(sp, perm).agree());
    auto v = is_kangaroo(sp, perm);
    if (v.diligent) {
      FixedStructure fs = fixed_structure(sp, c);
      CHECK(fs.ovoid);
      CHECK(fs.skeleton == 1);
      ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("linear diligent kangaroo on D2(3)") {
  HyperbolicSpace sp = HyperbolicSpace::build(2, 3);
  Collineation r = reflection(sp, PVec{0, 1, 1, 0});
  auto v = is_kangaroo(sp, point_permutation(sp, r));
  CHECK(v.kangaroo);
  CHECK(v.diligent);
  FixedStructure fs = fixed_structure(sp, r);
  CHECK(fs.fixed.size() == 4);
  CHECK(fs.ovoid);
  CHECK(fs.linear);
  CHECK(fs.span_dim == 2);
  CHECK(fs.span_cap_quadric);
  CHECK(fs.skeleton == 1);
}

TEST_CASE("Baer kangaroo on D2(4)") {
  HyperbolicSpace sp = HyperbolicSpace::build(2, 4);
  CHECK(sp.points.size() == 25);
  Collineation b = baer_involution_d2q4();
  auto v = is_kangaroo(sp, point_permutation(sp, b));
  CHECK(v.kangaroo);
  CHECK(v.diligent);
  FixedStructure fs = fixed_structure(sp, b);
  CHECK(fs.fixed.size() == 5);
  CHECK(fs.ovoid);
  CHECK_FALSE(fs.linear);
  CHECK(fs.involution);
  CHECK(fs.span_dim == 3);
}

TEST_CASE("lazy kangaroo on D4(3)") {
  HyperbolicSpace sp = HyperbolicSpace::build(4, 3);
  // identity on the perp of <e4+e5, e3+e6>, a quarter turn on that anisotropic plane
  Collineation g = from_rows(8, {{1, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 2, 1, 1, 1, 0, 0},
                                 {0, 0, 2, 2, 1, 2, 0, 0},
                                 {0, 0, 2, 1, 2, 2, 0, 0},
                                 {0, 0, 1, 1, 1, 2, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 1}});
  auto v = is_kangaroo(sp, point_permutation(sp, g));
  CHECK(v.kangaroo);
  CHECK(v.lazy);
  FixedStructure fs = fixed_structure(sp, g);
  CHECK(fs.rank == 2);
  CHECK(fs.span_dim == 5);
  CHECK(fs.span_cap_quadric);
}
