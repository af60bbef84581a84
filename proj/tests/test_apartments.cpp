#include <set>

#include "doctest.h"

#include "chevkit/apartments.hpp"

using namespace chevkit;

TEST_CASE("Gosset graph") {
  ThinModel g = build_gosset();
  CHECK(g.size() == 56);
  for (int v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 27);
  CHECK(g.diameter() == 3);
  for (int v = 0; v < g.size(); ++v) CHECK(g.antipodes(v).size() == 1);
  CHECK(g.symps.size() == 126);
  int twelve = 0;
  for (auto& s : g.symps) twelve += s.size() == 12;
  CHECK(twelve == 126);
  std::map<std::string, int> kinds;
  for (auto& l : g.symp_labels) ++kinds[l.substr(0, 1)];
  CHECK(kinds.size() == 2);
  std::multiset<int> sizes;
  for (auto& [k, n] : kinds) sizes.insert(n);
  CHECK(sizes == std::multiset<int>{56, 70});
  auto derived = symps_from_distance_two(g);
  CHECK(std::set<std::vector<int>>(derived.begin(), derived.end()) ==
        std::set<std::vector<int>>(g.symps.begin(), g.symps.end()));
  CHECK(g.find(g.labels[7]) == 7);
}

TEST_CASE("Gosset census") {
  ThinModel g = build_gosset();
  GossetCensus c = gosset_census(g);
  CHECK(c.unclassified == 0);
  long ps = 0, ss = 0;
  for (auto& [k, n] : c.point_symp) ps += n;
  for (auto& [k, n] : c.symp_symp) ss += n;
  CHECK(ps == 56 * 126 - 126 * 12);
  CHECK(ss == 126 + 126 * 125 / 2);
  CHECK(c.symp_symp["equal"] == 126);
  CHECK(c.symp_symp["opposite"] == 63);
  CHECK(c.opposite_matching);
  CHECK(c.imaginary_partition);
  CHECK(c.point_symp.size() == 2);
  CHECK(c.symp_symp.size() == 5);
}

TEST_CASE("point-symp and symp-symp cases") {
  ThinModel g = build_gosset();
  const auto& s = g.symps[0];
  CHECK_THROWS_AS(thin_point_symp(g, s[0], s), IncidenceError);
  for (int v = 0; v < g.size(); ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    int k = neighbours_in(g, v, s);
    PointSymp c = thin_point_symp(g, v, s);
    CHECK((c == PointSymp::Far ? k == 1 : k == 6));
  }
  CHECK(thin_symp_symp(g, s, s) == SympSymp::Equal);
  for (size_t j = 1; j < g.symps.size(); ++j) {
    SympSymp c = thin_symp_symp(g, s, g.symps[j]);
    int m = intersection_size(s, g.symps[j]);
    if (c == SympSymp::Adjacent) CHECK(m == 6);
    if (c == SympSymp::Symplectic) CHECK(m == 2);
    if (c == SympSymp::Special || c == SympSymp::Opposite) CHECK(m == 0);
    if (c == SympSymp::Special) CHECK_FALSE(bridging_symps(g, s, g.symps[j]).empty());
    if (c == SympSymp::Opposite) CHECK(bridging_symps(g, s, g.symps[j]).empty());
  }
}

TEST_CASE("E6 apartment") {
  ThinModel e = build_e6_apartment();
  CHECK(e.size() == 27);
  for (int v = 0; v < e.size(); ++v) CHECK(e.degree(v) == 16);
  CHECK(e.diameter() == 2);
  CHECK(e.symps.size() == 27);
  for (auto& s : e.symps) CHECK(s.size() == 10);
  CHECK(e.spaces.size() == 72);
  CHECK(cliques_of_size(e, 6).size() == 72);
  CHECK(cliques_of_size(e, 7).empty());
  for (auto& ch : e6_fact_checks(e)) {
    INFO(ch.item);
    CHECK(ch.holds);
  }
  const auto& sp = e.spaces[0];
  CHECK(thin_point_space(e, sp[0], sp) == "inside");
  for (int v = 0; v < e.size(); ++v) {
    std::string r = thin_point_space(e, v, sp);
    int k = neighbours_in(e, v, sp);
    if (r == "three-space") CHECK(k == 4);
    if (r == "unique-point") CHECK(k == 1);
  }
}

TEST_CASE("edge list") {
  ThinModel g = build_gosset();
  std::string edges = g.edge_list();
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 56 * 27 / 2);
}
