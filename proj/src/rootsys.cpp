#include "chevkit/rootsys.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace chevkit {

namespace {

std::vector<std::vector<int>> gram_matrix(char t, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  switch (t) {
    case 'A':
      if (n < 1) break;
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      return g;
    case 'B':
      if (n < 2) break;
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = i < n ? 4 : 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      return g;
    case 'C':
      if (n < 2) break;
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = i < n ? 2 : 4;
      for (int i = 1; i < n; ++i) link(i, i + 1, i + 1 < n ? -1 : -2);
      return g;
    case 'D':
      if (n < 3) break;
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      return g;
    case 'E':
      if (n < 6 || n > 8) break;
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      return g;
    case 'F':
      if (n != 4) break;
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      return g;
    case 'G':
      if (n != 2) break;
      g[0][0] = 2;
      g[1][1] = 6;
      link(1, 2, -3);
      return g;
  }
  throw RootError(std::string("unsupported root system ") + t + std::to_string(n));
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), n_(rank) {
  gram_ = gram_matrix(type, rank);
  cartan_.assign(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

  // closure by simple-root strings, height by height
  std::vector<RootVec> pos;
  std::map<RootVec, int> seen;
  for (int i = 0; i < n_; ++i) {
    RootVec v(n_, 0);
    v[i] = 1;
    seen[v] = 1;
    pos.push_back(v);
  }
  auto ip = [&](const RootVec& a, int j) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += a[i] * gram_[i][j];
    return s;
  };
  for (size_t idx = 0; idx < pos.size(); ++idx) {
    RootVec b = pos[idx];
    for (int i = 0; i < n_; ++i) {
      RootVec c = b;
      int p = 0;
      while (true) {
        c[i] -= 1;
        if (!seen.count(c)) break;
        ++p;
      }
      int q = p - 2 * ip(b, i) / gram_[i][i];
      if (q > 0) {
        RootVec d = b;
        d[i] += 1;
        if (!seen.count(d)) {
          seen[d] = 1;
          pos.push_back(d);
        }
      }
    }
  }
  auto ht = [](const RootVec& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  N_ = (int)pos.size();
  roots_ = pos;
  for (auto& v : pos) {
    RootVec m(v);
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  for (int r = 0; r < 2 * N_; ++r) {
    index_[roots_[r]] = r;
    height_.push_back(ht(roots_[r]));
  }
  highest_ = N_ - 1;
  int M = 2 * N_;
  sum_.assign(M * M, -1);
  pair_.assign(M * M, 0);
  refl_.assign(M * M, -1);
  auto form = [&](int a, int b) {
    int s = 0;
    for (int i = 0; i < n_; ++i)
      if (roots_[a][i]) s += roots_[a][i] * ip(roots_[b], i);
    return s;
  };
  for (int r = 0; r < M; ++r) {
    int rr = form(r, r);
    for (int s = 0; s < M; ++s) {
      int pr = 2 * form(s, r) / rr;
      pair_[r * M + s] = pr;
      RootVec v(n_);
      for (int i = 0; i < n_; ++i) v[i] = roots_[s][i] - pr * roots_[r][i];
      refl_[r * M + s] = index_.at(v);
      for (int i = 0; i < n_; ++i) v[i] = roots_[s][i] + roots_[r][i];
      auto it = index_.find(v);
      if (it != index_.end()) sum_[r * M + s] = it->second;
    }
  }
}

const RootSystem& RootSystem::get(char type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto* rs = new RootSystem(type, rank);
  cache[key].reset(rs);
  return *rs;
}

const RootSystem& RootSystem::get(const std::string& name) {
  if (name.size() < 2 || !std::isupper((unsigned char)name[0])) throw RootError("bad root system name '" + name + "'");
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit((unsigned char)name[i])) throw RootError("bad root system name '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
  }
  return get(name[0], rank);
}

bool RootSystem::simply_laced() const { return type_ == 'A' || type_ == 'D' || type_ == 'E'; }

int RootSystem::find(const RootVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::index_of(const RootVec& v) const {
  int r = find(v);
  if (r < 0) {
    std::string s;
    for (int x : v) s += std::to_string(x) + " ";
    throw RootError("not a root of " + name() + ": " + s);
  }
  return r;
}

int RootSystem::eval(int r, const Coweight& lam) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += roots_[r][i] * lam[i];
  return s;
}

Coweight RootSystem::coroot(int r) const {
  Coweight c(n_);
  for (int i = 0; i < n_; ++i) c[i] = pairing(simple(i + 1), r);
  return c;
}

Coweight RootSystem::fundamental_coweight(int j) const {
  Coweight c(n_, 0);
  c[j - 1] = 1;
  return c;
}

std::set<int> RootSystem::polar_type() const {
  std::set<int> out;
  for (int i = 1; i <= n_; ++i)
    if (pairing(simple(i), highest_) != 0) out.insert(i);
  return out;
}

std::vector<int> RootSystem::positive_roots_on(const std::set<int>& nodes) const {
  std::vector<int> out;
  for (int r = 0; r < N_; ++r) {
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i)
      if (roots_[r][i] && !nodes.count(i + 1)) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

int RootSystem::highest_on(const std::set<int>& nodes) const {
  auto rs = positive_roots_on(nodes);
  if (rs.empty()) throw RootError("empty node set");
  return rs.back();
}

std::vector<std::set<int>> RootSystem::components(const std::set<int>& nodes) const {
  std::vector<std::set<int>> out;
  std::set<int> left = nodes;
  while (!left.empty()) {
    std::set<int> comp{*left.begin()};
    std::vector<int> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto it = left.begin(); it != left.end();) {
        if (adjacent(a, *it)) {
          comp.insert(*it);
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

std::string RootSystem::format(int r) const {
  std::string s = r < N_ ? "(" : "-(";
  for (int x : roots_[abs(r)]) s += std::to_string(x);
  return s + ")";
}

int RootSystem::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  bool negate = false;
  if (!s.empty() && s[0] == '-') {
    negate = true;
    s = s.substr(1);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if ((int)s.size() != n_) throw RootError("root literal '" + text + "' needs " + std::to_string(n_) + " digits");
  RootVec v(n_);
  for (int i = 0; i < n_; ++i) {
    if (!std::isdigit((unsigned char)s[i])) throw RootError("bad root literal '" + text + "'");
    v[i] = s[i] - '0';
  }
  int r = index_of(v);
  return negate ? neg(r) : r;
}

// ---------------------------------------------------------------- diagrams

namespace {

const std::vector<DiagramSpec>& all_diagrams() {
  static const std::vector<DiagramSpec> specs = {
      {"E7;1", "E7", {1}},
      {"E7;2", "E7", {1, 2}},
      {"E7;3", "E7", {1, 2, 7}},
      {"E7;4", "E7", {1, 2, 2, 3}},
      {"E8;1", "E8", {1}},
      {"E6;1", "E6", {1}},
      {"D4;1", "D4", {1}},
      {"A3;1", "A3", {1}},
  };
  return specs;
}

}  // namespace

const DiagramSpec& diagram_spec(const std::string& name) {
  for (auto& d : all_diagrams())
    if (d.name == name) return d;
  throw RootError("unknown diagram '" + name + "'");
}

std::vector<std::string> diagram_names() {
  std::vector<std::string> out;
  for (auto& d : all_diagrams()) out.push_back(d.name);
  return out;
}

HighestRootSequence highest_root_sequence(const RootSystem& rs, const std::vector<int>& choices) {
  std::set<int> nodes;
  for (int i = 1; i <= rs.rank(); ++i) nodes.insert(i);
  HighestRootSequence out;
  for (int c : choices) {
    std::set<int> comp;
    for (auto& k : rs.components(nodes))
      if (k.count(c)) comp = k;
    if (comp.empty()) throw RootError("no remaining component contains node " + std::to_string(c));
    int phi = rs.highest_on(comp);
    out.roots.push_back(phi);
    for (int i : comp)
      if (rs.pairing(rs.simple(i), phi) != 0) {
        out.J.insert(i);
        nodes.erase(i);
      }
  }
  return out;
}

HighestRootSequence highest_root_sequence(const RootSystem& rs, const std::string& diagram) {
  const DiagramSpec& d = diagram_spec(diagram);
  if (d.system != rs.name()) throw RootError("diagram " + diagram + " is not of type " + rs.name());
  return highest_root_sequence(rs, d.choices);
}

std::vector<std::vector<int>> perp_set_orbit_reps(const RootSystem& rs, int k) {
  std::set<std::vector<int>> found;
  std::set<int> all;
  for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
  std::vector<int> acc;
  auto rec = [&](auto&& self, const std::set<int>& nodes, int depth) -> void {
    if (depth == k) {
      std::vector<int> s(acc);
      std::sort(s.begin(), s.end());
      found.insert(s);
      return;
    }
    for (auto& comp : rs.components(nodes)) {
      int phi = rs.highest_on(comp);
      std::set<int> rest = nodes;
      for (int i : comp)
        if (rs.pairing(rs.simple(i), phi) != 0) rest.erase(i);
      acc.push_back(phi);
      self(self, rest, depth + 1);
      acc.pop_back();
    }
  };
  rec(rec, all, 0);
  return {found.begin(), found.end()};
}

}  // namespace chevkit
