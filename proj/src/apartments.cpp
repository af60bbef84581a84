#include "chevkit/apartments.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace chevkit {

namespace {

void finish(ThinModel& m, const std::function<bool(int, int)>& edge) {
  int n = m.size();
  m.adj.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && edge(a, b)) m.adj[a].push_back(b);
  m.dist.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    m.dist[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : m.adj[v])
        if (m.dist[s][w] < 0) {
          m.dist[s][w] = m.dist[s][v] + 1;
          q.push_back(w);
        }
    }
  }
}

std::string pair_label(int a, int b, bool primed) {
  std::string p = primed ? "'" : "";
  return "{" + std::to_string(a + 1) + p + "," + std::to_string(b + 1) + p + "}";
}

}  // namespace

int ThinModel::diameter() const {
  int d = 0;
  for (auto& row : dist)
    for (int x : row) {
      if (x < 0) return -1;
      d = std::max(d, x);
    }
  return d;
}

std::vector<int> ThinModel::antipodes(int v) const {
  int d = *std::max_element(dist[v].begin(), dist[v].end());
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (dist[v][w] == d) out.push_back(w);
  return out;
}

std::string ThinModel::edge_list() const {
  std::ostringstream os;
  for (int a = 0; a < size(); ++a)
    for (int b : adj[a])
      if (a < b) os << labels[a] << ' ' << labels[b] << '\n';
  return os.str();
}

int ThinModel::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

ThinModel build_gosset() {
  ThinModel m;
  m.name = "gosset";
  std::vector<std::array<int, 3>> v;  // a, b, primed
  for (int primed = 0; primed < 2; ++primed)
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b) {
        v.push_back({a, b, primed});
        m.labels.push_back(pair_label(a, b, primed));
      }
  auto common = [&](int x, int y) {
    int c = 0;
    for (int s : {v[x][0], v[x][1]})
      if (s == v[y][0] || s == v[y][1]) ++c;
    return c;
  };
  finish(m, [&](int x, int y) { return v[x][2] == v[y][2] ? common(x, y) == 1 : common(x, y) == 0; });
  auto idx = [&](int a, int b, int primed) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < (int)v.size(); ++i)
      if (v[i][0] == a && v[i][1] == b && v[i][2] == primed) return i;
    return -1;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      std::vector<int> s;
      for (int k = 0; k < 8; ++k) {
        if (k == i || k == j) continue;
        s.push_back(idx(i, k, 0));
        s.push_back(idx(j, k, 1));
      }
      std::sort(s.begin(), s.end());
      m.symps.push_back(s);
      m.symp_labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::vector<int> s;
    std::string lab = "{";
    for (int a = 0; a < 8; ++a) {
      if (mask >> a & 1) lab += (lab.size() > 1 ? "," : "") + std::to_string(a + 1);
      for (int b = a + 1; b < 8; ++b) {
        bool in = (mask >> a & 1) && (mask >> b & 1), out = !(mask >> a & 1) && !(mask >> b & 1);
        if (in) s.push_back(idx(a, b, 0));
        if (out) s.push_back(idx(a, b, 1));
      }
    }
    std::sort(s.begin(), s.end());
    m.symps.push_back(s);
    m.symp_labels.push_back(lab + "}");
  }
  return m;
}

ThinModel build_e6_apartment() {
  ThinModel m;
  m.name = "e6";
  // kind 0: i, kind 1: {i,j}, kind 2: i'
  std::vector<std::array<int, 3>> v;
  for (int i = 0; i < 6; ++i) {
    v.push_back({0, i, -1});
    m.labels.push_back(std::to_string(i + 1));
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      v.push_back({1, i, j});
      m.labels.push_back(pair_label(i, j, false));
    }
  for (int i = 0; i < 6; ++i) {
    v.push_back({2, i, -1});
    m.labels.push_back(std::to_string(i + 1) + "'");
  }
  finish(m, [&](int x, int y) {
    auto a = v[x], b = v[y];
    if (a[0] > b[0]) std::swap(a, b);
    if (a[0] == 1 && b[0] == 1) return std::set<int>{a[1], a[2], b[1], b[2]}.size() == 3;
    if (a[0] == 1 || b[0] == 1) {
      auto& s = a[0] == 1 ? a : b;
      auto& t = a[0] == 1 ? b : a;
      return t[1] != s[1] && t[1] != s[2];
    }
    if (a[0] == 0 && b[0] == 2) return a[1] == b[1];
    return a[1] != b[1];
  });
  m.symps = symps_from_distance_two(m);
  for (auto& s : m.symps) {
    std::string lab = "{";
    for (int x : s) lab += (lab.size() > 1 ? " " : "") + m.labels[x];
    m.symp_labels.push_back(lab + "}");
  }
  m.spaces = cliques_of_size(m, 6);
  return m;
}

std::vector<std::vector<int>> symps_from_distance_two(const ThinModel& m) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < m.size(); ++x)
    for (int y = x + 1; y < m.size(); ++y) {
      if (m.dist[x][y] != 2) continue;
      std::vector<int> s{x, y};
      for (int z = 0; z < m.size(); ++z)
        if (m.adjacent(x, z) && m.adjacent(y, z)) s.push_back(z);
      std::sort(s.begin(), s.end());
      seen.insert(s);
    }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> cliques_of_size(const ThinModel& m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < m.size(); ++v) {
      bool ok = true;
      for (int c : cur) ok = ok && m.adjacent(c, v);
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int neighbours_in(const ThinModel& m, int v, const std::vector<int>& s) {
  int c = 0;
  for (int x : s) c += m.adjacent(v, x);
  return c;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a) c += std::find(b.begin(), b.end(), x) != b.end();
  return c;
}

const char* tag(PointSymp c) { return c == PointSymp::Far ? "far" : "close"; }

const char* tag(SympSymp c) {
  switch (c) {
    case SympSymp::Equal:
      return "equal";
    case SympSymp::Adjacent:
      return "adjacent";
    case SympSymp::Symplectic:
      return "symplectic";
    case SympSymp::Special:
      return "special";
    default:
      return "opposite";
  }
}

namespace {

bool contains(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

}  // namespace

PointSymp thin_point_symp(const ThinModel& m, int v, const std::vector<int>& symp) {
  if (contains(symp, v)) throw IncidenceError("point lies in the symp");
  int c = neighbours_in(m, v, symp);
  if (c == 1) {
    int q = -1;
    for (int x : symp)
      if (m.adjacent(v, x)) q = x;
    for (int x : symp) {
      if (x == q) continue;
      int want = m.adjacent(q, x) ? 2 : 3;
      if (m.dist[v][x] != want) throw IncidenceError("far point with wrong distances");
    }
    return PointSymp::Far;
  }
  if (c == 6) {
    for (int x : symp)
      if (!m.adjacent(v, x) && m.dist[v][x] != 2) throw IncidenceError("close point with a non-symplectic vertex");
    return PointSymp::Close;
  }
  throw IncidenceError("point adjacent to " + std::to_string(c) + " symp vertices");
}

std::vector<int> bridging_symps(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2) {
  std::vector<int> out;
  for (int i = 0; i < (int)m.symps.size(); ++i) {
    const auto& t = m.symps[i];
    std::vector<int> u, w;
    for (int x : t) {
      if (contains(s1, x)) u.push_back(x);
      if (contains(s2, x)) w.push_back(x);
    }
    if (u.size() != 6 || w.size() != 6) continue;
    bool opp = true;
    for (int x : u) opp = opp && neighbours_in(m, x, w) == 5;
    if (opp) out.push_back(i);
  }
  return out;
}

SympSymp thin_symp_symp(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2,
                        long* collinear_outside) {
  int k = intersection_size(s1, s2);
  if (k == (int)s1.size() && k == (int)s2.size()) return SympSymp::Equal;
  if (k == 6) return SympSymp::Adjacent;
  if (k == 2) {
    std::vector<int> L;
    for (int x : s1)
      if (contains(s2, x)) L.push_back(x);
    for (int x : s1) {
      if (contains(L, x)) continue;
      for (int y : s2) {
        if (contains(L, y)) continue;
        if (m.adjacent(x, y)) {
          if (neighbours_in(m, x, L) != 2 || neighbours_in(m, y, L) != 2)
            throw IncidenceError("symplectic pair with collinear outside points off the line perp");
          if (collinear_outside) ++*collinear_outside;
        }
        bool disjoint = true;
        for (int l : L) disjoint = disjoint && !((m.adjacent(x, l)) && (m.adjacent(y, l)));
        if ((m.dist[x][y] == 3) != disjoint) throw IncidenceError("symplectic pair distance rule fails");
      }
    }
    return SympSymp::Symplectic;
  }
  if (k != 0) throw IncidenceError("symps meet in " + std::to_string(k) + " vertices");
  auto br = bridging_symps(m, s1, s2);
  if (br.size() > 1) throw IncidenceError("more than one bridging symp");
  if (br.size() == 1) {
    const auto& t = m.symps[br[0]];
    for (int x : s1) {
      PointSymp c = thin_point_symp(m, x, s2);
      if ((c == PointSymp::Close) != contains(t, x)) throw IncidenceError("special pair with wrong far/close split");
    }
    for (int x : s1)
      for (int y : s2)
        if (m.adjacent(x, y) && !contains(t, x) && !contains(t, y))
          throw IncidenceError("special pair edge avoiding the bridge");
    return SympSymp::Special;
  }
  for (int x : s1) {
    if (neighbours_in(m, x, s2) != 1) throw IncidenceError("disjoint symps neither special nor opposite");
    if (thin_point_symp(m, x, s2) != PointSymp::Far) throw IncidenceError("opposite pair with a close point");
  }
  return SympSymp::Opposite;
}

bool imaginary_partition(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2) {
  std::vector<std::array<int, 2>> lines;
  for (int x : s1)
    for (int y : s2)
      if (m.adjacent(x, y)) lines.push_back({x, y});
  std::vector<int> uni;
  for (auto& l : lines) uni.insert(uni.end(), l.begin(), l.end());
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  std::vector<int> cover(m.size(), 0);
  for (const auto& t : m.symps) {
    bool inside = std::all_of(t.begin(), t.end(), [&](int x) { return std::binary_search(uni.begin(), uni.end(), x); });
    if (!inside) continue;
    bool meets = true;
    for (auto& l : lines) meets = meets && (contains(t, l[0]) != contains(t, l[1]));
    if (!meets) continue;
    for (int x : t) ++cover[x];
  }
  for (int x : uni)
    if (cover[x] != 1) return false;
  return true;
}

GossetCensus gosset_census(const ThinModel& g) {
  GossetCensus c;
  auto kind = [&](int i) { return i < 56 ? "pair" : "quad"; };
  for (int v = 0; v < g.size(); ++v)
    for (const auto& s : g.symps) {
      if (contains(s, v)) continue;
      try {
        ++c.point_symp[tag(thin_point_symp(g, v, s))];
      } catch (const IncidenceError&) {
        ++c.unclassified;
      }
    }
  int n = (int)g.symps.size();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      try {
        SympSymp r = thin_symp_symp(g, g.symps[i], g.symps[j], &c.symplectic_collinear);
        ++c.symp_symp[tag(r)];
        ++c.by_kind[std::string(kind(i)) + "-" + kind(j)][tag(r)];
        if (r == SympSymp::Opposite) {
          for (int x : g.symps[i]) c.opposite_matching = c.opposite_matching && neighbours_in(g, x, g.symps[j]) == 1;
          c.imaginary_partition = c.imaginary_partition && imaginary_partition(g, g.symps[i], g.symps[j]);
        }
      } catch (const IncidenceError&) {
        ++c.unclassified;
      }
    }
  return c;
}

std::string thin_point_space(const ThinModel& m, int v, const std::vector<int>& space) {
  if (contains(space, v)) return "inside";
  int c = neighbours_in(m, v, space);
  if (c == 4) return "three-space";
  if (c == 1) return "unique-point";
  throw IncidenceError("point adjacent to " + std::to_string(c) + " vertices of a 5-space");
}

std::vector<E6Check> e6_fact_checks(const ThinModel& e6) {
  std::vector<E6Check> out;
  {
    E6Check c{"strong-diameter-2", e6.diameter() == 2, {}};
    for (int x = 0; x < e6.size(); ++x)
      for (int y = x + 1; y < e6.size(); ++y) {
        if (e6.dist[x][y] != 2) continue;
        int in = 0;
        for (auto& s : e6.symps) in += contains(s, x) && contains(s, y);
        ++c.cases[in == 1 ? "unique-symp" : "bad"];
        c.holds = c.holds && in == 1;
      }
    out.push_back(c);
  }
  {
    E6Check c{"point-symp", true, {}};
    for (int v = 0; v < e6.size(); ++v)
      for (auto& s : e6.symps) {
        if (contains(s, v)) continue;
        int k = neighbours_in(e6, v, s);
        std::string t = k == 0 ? "far" : k == 5 ? "close" : "bad";
        ++c.cases[t];
        c.holds = c.holds && t != "bad";
      }
    out.push_back(c);
  }
  {
    E6Check c{"point-5-space", true, {}};
    for (int v = 0; v < e6.size(); ++v)
      for (auto& s : e6.spaces) {
        if (contains(s, v)) continue;
        try {
          ++c.cases[thin_point_space(e6, v, s)];
        } catch (const IncidenceError&) {
          ++c.cases["bad"];
          c.holds = false;
        }
      }
    out.push_back(c);
  }
  {
    E6Check c{"symp-5-space", true, {}};
    for (auto& s : e6.symps)
      for (auto& w : e6.spaces) {
        int k = intersection_size(s, w);
        std::string t = k == 5 ? "four'-space" : k == 2 ? "line" : k == 0 ? "empty" : "bad";
        ++c.cases[t];
        c.holds = c.holds && t != "bad";
      }
    out.push_back(c);
  }
  {
    E6Check c{"5-space-5-space", true, {}};
    for (size_t i = 0; i < e6.spaces.size(); ++i)
      for (size_t j = i + 1; j < e6.spaces.size(); ++j) {
        int k = intersection_size(e6.spaces[i], e6.spaces[j]);
        std::string t = k == 0 ? "disjoint" : k == 1 ? "point" : k == 3 ? "plane" : "bad";
        ++c.cases[t];
        c.holds = c.holds && t != "bad";
      }
    out.push_back(c);
  }
  return out;
}

}  // namespace chevkit
