#include <random>

#include "doctest.h"

#include "chevkit/group_text.hpp"
#include "chevkit/report.hpp"

using namespace chevkit;

namespace {

GroupElt random_elt(GroupPtr G, std::mt19937_64& rng) {
  const auto& rs = G->rs;
  GroupElt g = GroupElt::identity(G);
  for (int k = 0; k < 8; ++k) {
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
  return g;
}

}  // namespace

TEST_CASE("element text round trip") {
  std::mt19937_64 rng(12);
  for (auto [type, field] : {std::pair{"A3", "f5"}, {"D4", "f7"}, {"E6", "f3"}, {"E7", "gf 4"}}) {
    GroupPtr G = ChevGroup::create(RootSystem::get(type), Field::parse(field));
    for (int k = 0; k < 1000; ++k) {
      GroupElt g = random_elt(G, rng);
      CHECK(parse_element(G, print_element(g)) == g);
    }
  }
}

TEST_CASE("element syntax") {
  GroupPtr G = ChevGroup::create(RootSystem::get("D4"), Field::prime(5));
  const RootSystem& rs = G->rs;
  CHECK(parse_element(G, "1") == GroupElt::identity(G));
  CHECK(parse_element(G, "x[(1211)](2)") == GroupElt::x(G, rs.highest(), G->F.from_int(2)));
  CHECK(parse_element(G, "x[-(1211)](2)") == GroupElt::x(G, rs.neg(rs.highest()), G->F.from_int(2)));
  CHECK(parse_element(G, "h[w2](3)") == parse_element(G, "h[w_2](3)"));
  CHECK(parse_element(G, "s[1]s[2]") == GroupElt::n_word(G, {1, 2}));
  CHECK(parse_element(G, "n[w 1 2]") == GroupElt::n_word(G, {1, 2}));
  CHECK_THROWS_AS(parse_element(G, "x[(1211)](2"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "x[(9999)](1)"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "h[w9](1)"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "q"), ParseError);
  try {
    parse_element(G, "1 x[(1000)](1) ?");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("Weyl word text") {
  const RootSystem& rs = RootSystem::get("E7");
  WeylElt w = WeylElt::from_word(rs, {1, 3, 4});
  CHECK(WeylElt::parse(rs, w.str()) == w);
  CHECK_THROWS_AS(WeylElt::parse(rs, "w1 2"), RootError);
}

TEST_CASE("report records") {
  CheckRecord r{"x.id", "title", "anchor"};
  r.seed = 5;
  r.verdict = Verdict::Finding;
  r.notes.push_back("note");
  nlohmann::json j = to_json(r);
  CHECK(j["verdict"] == "finding");
  CHECK(j["seed"] == 5);
  CHECK(j["notes"][0] == "note");
  CHECK(to_text(r).find("finding") != std::string::npos);
  Report rep{"s", {r}};
  CHECK(rep.has(Verdict::Finding));
  CHECK_FALSE(rep.has(Verdict::Fail));
  CHECK(rep.exit_code() == 2);
  CHECK(to_json(rep)["schema_version"] == 1);
}
