#include "doctest.h"

#include "chevkit/rootsys.hpp"

using namespace chevkit;

TEST_CASE("root counts") {
  CHECK(RootSystem::get("A2").num_positive() == 3);
  CHECK(RootSystem::get("A2").num_roots() == 6);
  CHECK(RootSystem::get("D4").num_roots() == 24);
  CHECK(RootSystem::get("E6").num_positive() == 36);
  CHECK(RootSystem::get("E7").num_roots() == 126);
  CHECK(RootSystem::get("E8").num_positive() == 120);
}

TEST_CASE("order puts simple roots first and the highest root last") {
  const RootSystem& rs = RootSystem::get("E7");
  for (int i = 1; i <= 7; ++i) CHECK(rs.height(rs.simple(i)) == 1);
  CHECK(rs.format(rs.highest()) == "(2234321)");
  CHECK(rs.highest() == rs.num_positive() - 1);
  for (int r = 1; r < rs.num_positive(); ++r) CHECK(rs.height(r - 1) <= rs.height(r));
}

TEST_CASE("highest root is the unique maximal root") {
  for (auto name : {"A3", "D4", "E6", "E7", "E8"}) {
    const RootSystem& rs = RootSystem::get(name);
    int maximal = 0;
    for (int r = 0; r < rs.num_positive(); ++r) {
      bool top = true;
      for (int i = 1; i <= rs.rank(); ++i) top = top && rs.sum(r, rs.simple(i)) < 0;
      maximal += top;
      if (top) CHECK(r == rs.highest());
    }
    CHECK(maximal == 1);
  }
}

TEST_CASE("pairings") {
  const RootSystem& rs = RootSystem::get("E7");
  for (int i = 1; i <= 7; ++i) CHECK(rs.pairing(rs.simple(i), rs.simple(i)) == 2);
  int phi = rs.highest();
  CHECK(rs.pairing(rs.simple(1), phi) != 0);
  for (int i = 2; i <= 7; ++i) CHECK(rs.pairing(rs.simple(i), phi) == 0);
  for (int r = 0; r < rs.num_positive(); ++r) {
    int v = rs.pairing(r, phi);
    CHECK(v >= 0);
    CHECK(v <= 2);
    CHECK((v == 2) == (r == phi));
  }
}

TEST_CASE("polar type") {
  CHECK(RootSystem::get("E7").polar_type() == std::set<int>{1});
  CHECK(RootSystem::get("E8").polar_type() == std::set<int>{8});
  CHECK(RootSystem::get("A5").polar_type() == std::set<int>{1, 5});
  CHECK(RootSystem::get("D4").polar_type() == std::set<int>{2});
}

TEST_CASE("parse and format") {
  const RootSystem& rs = RootSystem::get("E7");
  for (int r = 0; r < rs.num_roots(); ++r) CHECK(rs.parse(rs.format(r)) == r);
  CHECK(rs.format(rs.parse("-(0100000)")) == "-(0100000)");
  CHECK_THROWS_AS(rs.parse("(1100000)") , RootError);
  CHECK_THROWS_AS(rs.parse("(011)"), RootError);
}

TEST_CASE("highest root sequences") {
  const RootSystem& rs = RootSystem::get("E7");
  auto fmt = [&](const std::vector<int>& v) {
    std::vector<std::string> out;
    for (int r : v) out.push_back(rs.format(r));
    return out;
  };
  CHECK(fmt(highest_root_sequence(rs, "E7;1").roots) == std::vector<std::string>{"(2234321)"});
  CHECK(fmt(highest_root_sequence(rs, "E7;3").roots) ==
        std::vector<std::string>{"(2234321)", "(0112221)", "(0000001)"});
  CHECK(fmt(highest_root_sequence(rs, "E7;4").roots) ==
        std::vector<std::string>{"(2234321)", "(0112221)", "(0112100)", "(0010000)"});
  CHECK(highest_root_sequence(rs, "E7;3").J == std::set<int>{1, 6, 7});
  CHECK(highest_root_sequence(rs, "E7;4").J == std::set<int>{1, 3, 4, 6});
}

TEST_CASE("removal algorithm representatives") {
  const RootSystem& rs = RootSystem::get("E7");
  CHECK(perp_set_orbit_reps(rs, 1).size() == 1);
  auto three = perp_set_orbit_reps(rs, 3);
  CHECK(three.size() == 2);
  auto four = perp_set_orbit_reps(rs, 4);
  CHECK(four.size() == 4);
  // {phi_E7, phi_D6, phi_D4, alpha_j} for j in {2,3,5,7}
  std::set<std::set<int>> want;
  for (int j : {2, 3, 5, 7})
    want.insert({rs.highest(), rs.parse("(0112221)"), rs.parse("(0112100)"), rs.simple(j)});
  std::set<std::set<int>> got;
  for (auto& s : four) got.insert(std::set<int>(s.begin(), s.end()));
  CHECK(got == want);
}

TEST_CASE("components") {
  const RootSystem& rs = RootSystem::get("E7");
  auto c = rs.components({2, 5, 7});
  CHECK(c.size() == 3);
  CHECK(rs.components({2, 3, 4, 5, 6, 7}).size() == 1);
  CHECK(rs.highest_on({2, 3, 4, 5, 6, 7}) == rs.parse("(0112221)"));
}
