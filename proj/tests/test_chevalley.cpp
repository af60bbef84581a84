#include <random>

#include "doctest.h"

#include "chevkit/chevalley.hpp"
#include "chevkit/group_text.hpp"

using namespace chevkit;

namespace {

// dense adjoint matrix of a normal form, built factor by factor
AdjMat to_matrix(const GroupElt& g, uint64_t p) {
  const auto& G = g.group();
  const auto& rs = G.rs;
  AdjMat m = AdjMat::identity(adjoint_dim(rs), p);
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!g.u1()[r].is_zero()) m = m * adjoint_x(G.sc, r, g.u1()[r].index(), p);
  for (int i : g.w().reduced_word()) m = m * adjoint_n(G.sc, i, p);
  std::vector<uint64_t> chi;
  for (auto& t : g.h()) chi.push_back(t.index());
  m = m * adjoint_h(G.sc, chi, p);
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!g.u2()[r].is_zero()) m = m * adjoint_x(G.sc, r, g.u2()[r].index(), p);
  return m;
}

GroupElt random_word(GroupPtr G, std::mt19937_64& rng, AdjMat* M, uint64_t p) {
  const auto& rs = G->rs;
  GroupElt g = GroupElt::identity(G);
  if (M) *M = AdjMat::identity(adjoint_dim(rs), p);
  for (int k = 0; k < 10; ++k) {
    int kind = rng() % 3;
    if (kind == 0) {
      int r = rng() % rs.num_roots();
      FieldElem t = G->F.random(rng);
      g.rmul_x(r, t);
      if (M) *M = *M * adjoint_x(G->sc, r, t.index(), p);
    } else if (kind == 1) {
      int i = 1 + rng() % rs.rank();
      g.rmul_n(i);
      if (M) *M = *M * adjoint_n(G->sc, i, p);
    } else {
      std::vector<FieldElem> chi;
      std::vector<uint64_t> c;
      for (int j = 0; j < rs.rank(); ++j) {
        chi.push_back(G->F.random_nonzero(rng));
        c.push_back(chi.back().index());
      }
      g.rmul_h(chi);
      if (M) *M = *M * adjoint_h(G->sc, c, p);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("structure constants") {
  for (auto name : {"A3", "D4", "E6", "E7"}) {
    const RootSystem& rs = RootSystem::get(name);
    StructConsts sc = StructConsts::build(rs);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        CHECK((sc.N(a, b) != 0) == (rs.sum(a, b) >= 0));
        CHECK(sc.N(a, b) == -sc.N(b, a));
      }
    if (rs.rank() <= 6) CHECK(check_jacobi(sc));
  }
}

TEST_CASE("normal form agrees with the adjoint representation") {
  for (auto name : {"A3", "D4", "E6"}) {
    GroupPtr G = ChevGroup::create(RootSystem::get(name), Field::prime(5));
    std::mt19937_64 rng(11);
    for (int k = 0; k < (name[0] == 'E' ? 4 : 25); ++k) {
      AdjMat M;
      GroupElt g = random_word(G, rng, &M, 5);
      CHECK(to_matrix(g, 5) == M);
      CHECK((g * g.inverse()).is_identity());
      GroupElt a = random_word(G, rng, nullptr, 5), b = random_word(G, rng, nullptr, 5);
      CHECK((g * a) * b == g * (a * b));
    }
  }
}

TEST_CASE("root subgroup relations") {
  const RootSystem& rs = RootSystem::get("E7");
  GroupPtr G = ChevGroup::create(rs, Field::prime(7));
  const Field& F = G->F;
  std::mt19937_64 rng(5);
  int r = rs.parse("(0112100)");
  FieldElem a = F.random(rng), b = F.random(rng);
  CHECK(GroupElt::x(G, r, a) * GroupElt::x(G, r, b) == GroupElt::x(G, r, a + b));
  CHECK(GroupElt::x(G, r, F.zero()).is_identity());
  CHECK(GroupElt::s(G, r, F.one()).w() == WeylElt::reflection(rs, r));
  // the highest root group is central in U+
  GroupElt u = GroupElt::identity(G);
  for (int k = 0; k < 6; ++k) u = u * GroupElt::x(G, rng() % rs.num_positive(), F.random(rng));
  GroupElt xphi = GroupElt::x(G, rs.highest(), F.random_nonzero(rng));
  CHECK(xphi * u == u * xphi);
}

TEST_CASE("torus action on root groups") {
  const RootSystem& rs = RootSystem::get("E7");
  GroupPtr G = ChevGroup::create(rs, Field::prime(11));
  const Field& F = G->F;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    int j = 1 + rng() % 7;
    int r = rng() % rs.num_roots();
    FieldElem t = F.random_nonzero(rng), a = F.random(rng);
    GroupElt h = GroupElt::h_coweight(G, rs.fundamental_coweight(j), t);
    int e = rs.eval(r, rs.fundamental_coweight(j));
    CHECK(h * GroupElt::x(G, r, a) * h.inverse() == GroupElt::x(G, r, t.pow(e) * a));
  }
}

TEST_CASE("rank one rewriting") {
  const RootSystem& rs = RootSystem::get("A1");
  GroupPtr G = ChevGroup::create(rs, Field::prime(5));
  const Field& F = G->F;
  int a = rs.simple(1);
  CHECK(sl2_rewrite(G, a, F.from_int(2), F.zero()) == GroupElt::x(G, a, F.from_int(2)));
  CHECK(sl2_rewrite(G, a, F.zero(), F.from_int(3)) == GroupElt::x(G, rs.neg(a), F.from_int(3)));
  GroupElt rhs = GroupElt::x(G, rs.neg(a), F.from_int(3)) * GroupElt::x(G, a, F.from_int(2)) *
                 GroupElt::h_coroot(G, a, F.from_int(3));
  CHECK(sl2_rewrite(G, a, F.one(), F.one()) == rhs);
  CHECK(GroupElt::x(G, a, F.one()) * GroupElt::x(G, rs.neg(a), F.one()) == rhs);
  CHECK_THROWS_AS(sl2_rewrite(G, a, F.one(), F.from_int(4)), CellWall);
}

TEST_CASE("cells") {
  const RootSystem& rs = RootSystem::get("E7");
  GroupPtr G = ChevGroup::create(rs, Field::prime(5));
  const Field& F = G->F;
  for (int j = 1; j <= 7; ++j) CHECK(GroupElt::x(G, rs.neg(rs.simple(j)), F.from_int(2)).w() == WeylElt::simple(rs, j));
  GroupElt theta = GroupElt::x(G, rs.neg(rs.highest()), F.one());
  CHECK(displacement(theta, GroupElt::identity(G)) == WeylElt::reflection(rs, rs.highest()));
  GroupElt b = GroupElt::x(G, 3, F.one()) * GroupElt::h_coweight(G, rs.fundamental_coweight(2), F.from_int(3));
  CHECK(displacement(b, GroupElt::identity(G)).is_identity());
}

TEST_CASE("element text") {
  const RootSystem& rs = RootSystem::get("E7");
  GroupPtr G = ChevGroup::create(rs, Field::prime(5));
  GroupElt one = parse_element(G, "x[(0000001)](1)");
  CHECK(one == GroupElt::x(G, rs.simple(7), G->F.one()));
  GroupElt g = parse_element(G, "x[(2234321)](1) h[w7](3)");
  CHECK(g == GroupElt::x(G, rs.highest(), G->F.one()) *
                 GroupElt::h_coweight(G, rs.fundamental_coweight(7), G->F.from_int(3)));
  // s[1]^2 = h_{alpha_1}(-1), trivial only in characteristic 2
  GroupElt ss = parse_element(G, "s[1] s[1]");
  CHECK(ss == GroupElt::h_coroot(G, rs.simple(1), G->F.from_int(-1)));
  GroupPtr G2 = ChevGroup::create(rs, Field::prime(2));
  CHECK(parse_element(G2, "s[1] s[1]").is_identity());
  CHECK_THROWS_AS(parse_element(G, "x[(1100000)](1)"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "h[w_2](0)"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "x[(0000001)](1"), ParseError);
}

TEST_CASE("print and parse round trip") {
  for (auto [name, field] : {std::pair<const char*, const char*>{"E7", "f5"}, {"D4", "gf 4"}, {"A3", "f7"}}) {
    GroupPtr G = ChevGroup::create(RootSystem::get(name), Field::parse(field));
    std::mt19937_64 rng(17);
    int n = 1000;
    for (int k = 0; k < n; ++k) {
      GroupElt g = GroupElt::identity(G);
      const auto& rs = G->rs;
      for (int s = 0; s < 6; ++s) {
        switch (rng() % 3) {
          case 0: g.rmul_x(rng() % rs.num_roots(), G->F.random(rng)); break;
          case 1: g.rmul_n(1 + rng() % rs.rank()); break;
          default: {
            std::vector<FieldElem> chi;
            for (int j = 0; j < rs.rank(); ++j) chi.push_back(G->F.random_nonzero(rng));
            g.rmul_h(chi);
          }
        }
      }
      REQUIRE(parse_element(G, print_element(g)) == g);
    }
  }
}
