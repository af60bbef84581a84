#include "doctest.h"

#include "chevkit/group_text.hpp"
#include "chevkit/opposition.hpp"

using namespace chevkit;

TEST_CASE("perpendicular subsystems") {
  const RootSystem& e7 = RootSystem::get("E7");
  PsiSystem a = psi_J(e7, {1, 6, 7});
  CHECK(a.type == "A1xA1xA1");
  CHECK(a.simple == std::vector<int>{e7.highest(), e7.index_of({0, 1, 1, 2, 2, 2, 1}), e7.simple(7)});
  PsiSystem d = psi_J(e7, {1, 3, 4, 6});
  CHECK(d.type == "D4");
  CHECK(d.positive.size() == 12);
  CHECK(psi_J(e7, {1}).type == "A1");
  CHECK(psi_J(e7, {1}).simple == std::vector<int>{e7.highest()});
  CHECK(psi_J(RootSystem::get("E8"), {8}).type == "A1");
  CHECK(psi_J(RootSystem::get("A5"), {1, 5}).type == "A1");
  CHECK(psi_J(RootSystem::get("A5"), {2}).type == "");
  const RootSystem& d6 = RootSystem::get("D6");
  CHECK(subsystem_type(d6, {d6.simple(1), d6.simple(2), d6.simple(3)}) == "A3");
  CHECK(subsystem_type(e7, {e7.simple(1), e7.simple(7)}) == "A1xA1");
}

TEST_CASE("opposition involution and diagrams") {
  CHECK(opposition_involution(RootSystem::get("E7")) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  auto e6 = opposition_involution(RootSystem::get("E6"));
  CHECK(e6[1] == 6);
  CHECK(e6[3] == 5);
  CHECK(e6[2] == 2);
  auto a3 = opposition_involution(RootSystem::get("A3"));
  CHECK(a3[1] == 3);
  CHECK(a3[2] == 2);

  const RootSystem& e7 = RootSystem::get("E7");
  for (auto name : {"E7;1", "E7;2", "E7;3", "E7;4"}) {
    OppDiagram od = opp_diagram(name);
    INFO(name);
    CHECK(od.J_stable);
    CHECK(od.perpendicular);
    CHECK(od.product_matches);
    WeylElt w = complement_times_longest(e7, od.J);
    CHECK(w.length() == od.M);
    CHECK(diagram_of(e7, w) == std::optional<std::set<int>>(od.J));
  }
  CHECK(opp_diagram("E7;4").M == 60);
  CHECK_FALSE(diagram_of(e7, WeylElt::simple(e7, 3)).has_value());
}

TEST_CASE("chamber counts and representatives") {
  const RootSystem& a3 = RootSystem::get("A3");
  CHECK(chamber_count(a3, 2) == 315);
  CHECK(chamber_count(a3, 3) == 2080);
  CHECK(chamber_count(RootSystem::get("D4"), 3) == 2329600);
  GroupPtr G = ChevGroup::create(a3, Field::prime(3));
  WeylElt w = WeylElt::from_word(a3, {1, 2, 1});
  for (uint64_t i = 0; i < 27; ++i) CHECK(chamber_rep(G, w, i).w() == w);
  CHECK(chamber_rep(G, w, 0) == GroupElt::n_word(G, w.reduced_word()));
}

TEST_CASE("displacement of a negative root element") {
  const RootSystem& rs = RootSystem::get("D4");
  GroupPtr G = ChevGroup::create(rs, Field::prime(5));
  GroupElt th = GroupElt::x(G, rs.neg(rs.highest()), G->F.one());
  CHECK(displacement_of(th, GroupElt::identity(G)) == WeylElt::reflection(rs, rs.highest()));
}

TEST_CASE("A3(F2) root elation is domestic") {
  const RootSystem& rs = RootSystem::get("A3");
  GroupPtr G = ChevGroup::create(rs, Field::prime(2));
  GroupElt th = parse_element(G, "x[111](1)");
  SpectrumReport r1 = spectrum_bruteforce(th, 1);
  CHECK(r1.total == 315);
  CHECK(r1.expected_total == 315);
  CHECK(r1.domestic);
  CHECK(r1.max_length == 5);
  CHECK(r1.opposed_nodes == std::set<int>{1, 3});
  CHECK(r1.uncapped_risk);
  CHECK(r1.fixed == r1.counts[WeylElt::identity(rs)]);
  uint64_t sum = 0;
  for (auto& [w, n] : r1.counts) sum += n;
  CHECK(sum == r1.total);
  SpectrumReport r2 = spectrum_bruteforce(th, 2);
  CHECK(r2.counts == r1.counts);
  CHECK(r2.opposed_nodes == r1.opposed_nodes);
  CHECK_THROWS_AS(spectrum_bruteforce(th, 1, 10), SpectrumBudget);
}

TEST_CASE("A3(F3) elation times homology is not domestic") {
  const RootSystem& rs = RootSystem::get("A3");
  GroupPtr G = ChevGroup::create(rs, Field::prime(3));
  GroupElt th = GroupElt::x(G, rs.highest(), G->F.one()) *
                GroupElt::h_coroot(G, rs.highest(), -G->F.one());
  SpectrumReport r = spectrum_bruteforce(th, 2);
  CHECK(r.total == 2080);
  CHECK_FALSE(r.domestic);
  CHECK(r.max_length == 6);
  CHECK(r.opposed_nodes == std::set<int>{1, 2, 3});
}

TEST_CASE("identity fixes everything") {
  const RootSystem& rs = RootSystem::get("A2");
  GroupPtr G = ChevGroup::create(rs, Field::prime(3));
  SpectrumReport r = spectrum_bruteforce(GroupElt::identity(G));
  CHECK(r.total == 52);
  CHECK(r.fixed == 52);
  CHECK(r.domestic);
  CHECK(r.opposed_nodes.empty());
}
