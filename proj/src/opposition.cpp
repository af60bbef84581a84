#include "chevkit/opposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace chevkit {

PsiSystem psi_J(const RootSystem& rs, const std::set<int>& J) {
  PsiSystem out;
  out.J = J;
  for (int r = 0; r < rs.num_positive(); ++r) {
    bool perp = true;
    for (int i = 1; i <= rs.rank() && perp; ++i)
      if (!J.count(i)) perp = rs.pairing(r, rs.simple(i)) == 0;
    if (perp) out.positive.push_back(r);
  }
  std::set<int> pos(out.positive.begin(), out.positive.end());
  for (int r : out.positive) {
    bool decomposable = false;
    for (int a : out.positive) {
      int b = rs.sum(r, rs.neg(a));
      if (b >= 0 && rs.positive(b) && pos.count(b)) decomposable = true;
    }
    if (!decomposable) out.simple.push_back(r);
  }
  std::stable_sort(out.simple.begin(), out.simple.end(),
                   [&](int a, int b) { return rs.height(a) > rs.height(b); });
  out.type = subsystem_type(rs, out.simple);
  return out;
}

std::string subsystem_type(const RootSystem& rs, const std::vector<int>& simple) {
  int n = (int)simple.size();
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rs.pairing(simple[i], simple[j]) != 0) nb[i].push_back(j);
  std::vector<int> comp(n, -1);
  std::string out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::deque<int> q{s};
    comp[s] = s;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      members.push_back(v);
      for (int w : nb[v])
        if (comp[w] < 0) {
          comp[w] = s;
          q.push_back(w);
        }
    }
    int m = (int)members.size(), branch = -1;
    for (int v : members)
      if (nb[v].size() == 3) branch = v;
    std::string t;
    if (branch < 0) {
      t = "A" + std::to_string(m);
    } else {
      std::vector<int> arms;
      for (int start : nb[branch]) {
        int len = 0, prev = branch, cur = start;
        while (true) {
          ++len;
          int next = -1;
          for (int w : nb[cur])
            if (w != prev) next = w;
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        t = "D" + std::to_string(m);
      else
        t = "E" + std::to_string(m);
    }
    out += (out.empty() ? "" : "x") + t;
  }
  return out;
}

std::vector<int> opposition_involution(const RootSystem& rs) {
  WeylElt w0 = WeylElt::longest(rs);
  std::vector<int> sigma(rs.rank() + 1, 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    int img = rs.neg(w0.act(rs.simple(i)));
    sigma[i] = img + 1;
  }
  return sigma;
}

WeylElt complement_times_longest(const RootSystem& rs, const std::set<int>& J) {
  std::set<int> rest;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!J.count(i)) rest.insert(i);
  return WeylElt::longest(rs, rest) * WeylElt::longest(rs);
}

WeylElt reflection_product(const RootSystem& rs, const std::vector<int>& roots) {
  WeylElt w = WeylElt::identity(rs);
  for (int r : roots) w = w * WeylElt::reflection(rs, r);
  return w;
}

OppDiagram opp_diagram(const std::string& name) {
  const DiagramSpec& spec = diagram_spec(name);
  const RootSystem& rs = RootSystem::get(spec.system);
  HighestRootSequence hs = highest_root_sequence(rs, name);
  OppDiagram d;
  d.name = name;
  d.J = hs.J;
  d.sequence = hs.roots;
  WeylElt target = complement_times_longest(rs, d.J);
  d.M = target.length();
  auto sigma = opposition_involution(rs);
  d.J_stable = true;
  for (int j : d.J) d.J_stable = d.J_stable && d.J.count(sigma[j]);
  d.perpendicular = true;
  for (size_t i = 0; i < d.sequence.size(); ++i)
    for (size_t j = i + 1; j < d.sequence.size(); ++j)
      d.perpendicular = d.perpendicular && rs.pairing(d.sequence[i], d.sequence[j]) == 0;
  d.product_matches = reflection_product(rs, d.sequence) == target;
  return d;
}

namespace {

std::vector<WeylElt> subgroup_elements(const RootSystem& rs, const std::set<int>& nodes) {
  std::vector<WeylElt> out{WeylElt::identity(rs)};
  std::set<WeylElt> seen{out[0]};
  for (size_t k = 0; k < out.size(); ++k)
    for (int i : nodes) {
      WeylElt w = out[k] * WeylElt::simple(rs, i);
      if (seen.insert(w).second) out.push_back(w);
    }
  return out;
}

std::vector<int> inversion_roots(const WeylElt& w) {
  const RootSystem& rs = w.system();
  WeylElt wi = w.inverse();
  std::vector<int> out;
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!rs.positive(wi.act(r))) out.push_back(r);
  return out;
}

uint64_t ipow(uint64_t q, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace

uint64_t chamber_count(const RootSystem& rs, uint64_t q) {
  uint64_t total = 0;
  for (const WeylElt& w : subgroup_elements(rs, [&] {
         std::set<int> all;
         for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
         return all;
       }()))
    total += ipow(q, w.length());
  return total;
}

GroupElt chamber_rep(GroupPtr G, const WeylElt& w, uint64_t idx) {
  const Field& F = G->F;
  uint64_t q = *F.order();
  GroupElt g = GroupElt::identity(G);
  for (int r : inversion_roots(w)) {
    uint64_t d = idx % q;
    idx /= q;
    if (d) g = g * GroupElt::x(G, r, F.element(d));
  }
  return g * GroupElt::n_word(G, w.reduced_word());
}

std::set<int> opposed_nodes(const RootSystem& rs, const std::vector<WeylElt>& displacements) {
  auto sigma = opposition_involution(rs);
  WeylElt w0 = WeylElt::longest(rs);
  std::set<int> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    std::set<int> rest;
    for (int j = 1; j <= rs.rank(); ++j)
      if (j != i && j != sigma[i]) rest.insert(j);
    auto sub = subgroup_elements(rs, rest);
    std::set<WeylElt> coset;
    for (auto& a : sub)
      for (auto& b : sub) coset.insert(a * w0 * b);
    for (auto& w : displacements)
      if (coset.count(w)) {
        out.insert(i);
        break;
      }
  }
  return out;
}

std::optional<std::set<int>> diagram_of(const RootSystem& rs, const WeylElt& w) {
  int n = rs.rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::set<int> J;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) J.insert(i + 1);
    if (complement_times_longest(rs, J) == w) return J;
  }
  return std::nullopt;
}

SpectrumReport spectrum_bruteforce(const GroupElt& theta, int jobs, uint64_t budget) {
  GroupPtr G = theta.group_ptr();
  const RootSystem& rs = G->rs;
  auto order = G->F.order();
  if (!order) throw std::invalid_argument("spectrum needs a finite field");
  uint64_t q = *order;
  SpectrumReport rep;
  rep.type = rs.name();
  rep.q = q;
  rep.expected_total = chamber_count(rs, q);
  if (rep.expected_total > budget)
    throw SpectrumBudget(std::to_string(rep.expected_total) + " chambers exceed the budget " + std::to_string(budget));
  std::set<int> all;
  for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
  std::vector<WeylElt> cells = subgroup_elements(rs, all);
  std::sort(cells.begin(), cells.end(), [](const WeylElt& a, const WeylElt& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  jobs = std::max(1, jobs);
  std::vector<std::map<WeylElt, uint64_t>> partial(jobs);
  auto work = [&](int k) {
    for (size_t c = k; c < cells.size(); c += jobs) {
      const WeylElt& w = cells[c];
      uint64_t n = ipow(q, w.length());
      for (uint64_t idx = 0; idx < n; ++idx) ++partial[k][displacement(theta, chamber_rep(G, w, idx))];
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(work, k);
    for (auto& t : pool) t.join();
  }
  for (auto& m : partial)
    for (auto& [w, c] : m) rep.counts[w] += c;
  WeylElt w0 = WeylElt::longest(rs);
  std::vector<WeylElt> seen;
  for (auto& [w, c] : rep.counts) {
    rep.total += c;
    seen.push_back(w);
    if (w.is_identity()) rep.fixed = c;
    rep.max_length = std::max(rep.max_length, w.length());
  }
  for (auto& w : seen)
    if (w.length() == rep.max_length) rep.maximal.push_back(w);
  rep.domestic = !rep.counts.count(w0);
  rep.opposed_nodes = opposed_nodes(rs, seen);
  rep.uncapped_risk = q == 2;
  if (q >= 3 && rep.maximal.size() == 1) rep.inferred = diagram_of(rs, rep.maximal[0]);
  return rep;
}

std::string SpectrumReport::str() const {
  std::ostringstream os;
  os << type << "(F" << q << ") chambers " << total << "/" << expected_total << (domestic ? " domestic" : " not domestic")
     << " fixed " << fixed << " max length " << max_length;
  os << " maximal";
  for (auto& w : maximal) os << ' ' << w.str();
  os << " opposed {";
  bool first = true;
  for (int i : opposed_nodes) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  if (inferred) {
    os << " inferred {";
    first = true;
    for (int i : *inferred) {
      os << (first ? "" : ",") << i;
      first = false;
    }
    os << "}";
  }
  if (uncapped_risk) os << " uncapped-risk";
  return os.str();
}

}  // namespace chevkit
