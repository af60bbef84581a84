#include "chevkit/chevalley.hpp"

#include <map>
#include <mutex>

#include "chevkit/d4rep.hpp"

namespace chevkit {

ChevGroup::ChevGroup(const RootSystem& r, Field f, StructConsts s) : rs(r), F(f), sc(std::move(s)) {
  int N = rs.num_positive();
  pred.assign(N, -1);
  step.assign(N, -1);
  descent.assign(N, {});
  base.assign(N, -1);
  for (int g = 0; g < N; ++g) {
    if (rs.height(g) > 1)
      for (int j = 1; j <= rs.rank(); ++j) {
        int p = rs.sum(g, rs.neg(rs.simple(j)));
        if (p >= 0 && rs.positive(p)) {
          pred[g] = p;
          step[g] = j;
          break;
        }
      }
    int b = g;
    while (rs.height(b) > 1) {
      int i = 1;
      while (rs.pairing(b, rs.simple(i)) <= 0) ++i;
      descent[g].push_back(i);
      b = rs.reflect(rs.simple(i), b);
    }
    base[g] = b + 1;
  }
}

GroupPtr ChevGroup::create_untwisted(const RootSystem& rs, Field f) {
  return std::make_shared<const ChevGroup>(rs, f, StructConsts::build(rs));
}

GroupPtr ChevGroup::create(const RootSystem& rs, Field f, const std::vector<int>& twist) {
  if (!twist.empty()) return std::make_shared<const ChevGroup>(rs, f, StructConsts::build(rs, twist));
  static std::mutex mu;
  static std::map<const RootSystem*, std::vector<int>> cache;
  std::vector<int> eps;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&rs);
    if (it == cache.end()) it = cache.emplace(&rs, default_sign_twist(rs)).first;
    eps = it->second;
  }
  return std::make_shared<const ChevGroup>(rs, f, StructConsts::build(rs, eps));
}

std::vector<FieldElem> ChevGroup::characters(const std::vector<FieldElem>& chi) const {
  int N = rs.num_positive();
  std::vector<FieldElem> out(N);
  for (int g = 0; g < N; ++g) out[g] = rs.height(g) == 1 ? chi[g] : out[pred[g]] * chi[step[g] - 1];
  return out;
}

int ChevGroup::conj_sign(const std::vector<int>& word, int root) const {
  int s = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    s *= sc.eta(*it, root);
    root = rs.reflect(rs.simple(*it), root);
  }
  return s;
}

void unip_rmul(const ChevGroup& G, std::vector<FieldElem>& u, int r, const FieldElem& t) {
  const RootSystem& rs = G.rs;
  std::vector<std::pair<int, FieldElem>> todo{{r, t}};
  while (!todo.empty()) {
    auto [b, s] = todo.back();
    todo.pop_back();
    if (s.is_zero()) continue;
    int k = (int)u.size() - 1;
    while (k > b && u[k].is_zero()) --k;
    if (k <= b) {
      u[b] += s;
      continue;
    }
    FieldElem c = u[k];
    u[k] = G.F.zero();
    int g = rs.sum(k, b);
    if (g >= 0) todo.emplace_back(g, G.sc.N(k, b) == 1 ? c * s : -(c * s));
    todo.emplace_back(k, c);
    todo.emplace_back(b, s);
  }
}

void unip_lmul(const ChevGroup& G, int r, const FieldElem& t, std::vector<FieldElem>& u) {
  const RootSystem& rs = G.rs;
  std::vector<std::pair<int, FieldElem>> todo{{r, t}};
  while (!todo.empty()) {
    auto [b, s] = todo.back();
    todo.pop_back();
    if (s.is_zero()) continue;
    int k = 0;
    while (k < b && u[k].is_zero()) ++k;
    if (k >= b) {
      u[b] += s;
      continue;
    }
    FieldElem c = u[k];
    u[k] = G.F.zero();
    todo.emplace_back(k, c);
    todo.emplace_back(b, s);
    int g = rs.sum(b, k);
    if (g >= 0) todo.emplace_back(g, G.sc.N(b, k) == 1 ? s * c : -(s * c));
  }
}

namespace {

FieldElem sgn(int s, const FieldElem& x) { return s > 0 ? x : -x; }

std::vector<FieldElem> coroot_chi(const ChevGroup& G, int r, const FieldElem& t) {
  std::vector<FieldElem> chi;
  for (int j = 1; j <= G.rs.rank(); ++j) chi.push_back(t.pow(G.rs.pairing(G.rs.simple(j), r)));
  return chi;
}

}  // namespace

GroupElt GroupElt::identity(GroupPtr G) {
  GroupElt g;
  int N = G->rs.num_positive();
  g.u1_.assign(N, G->F.zero());
  g.u2_ = g.u1_;
  g.h_.assign(G->rs.rank(), G->F.one());
  g.w_ = WeylElt::identity(G->rs);
  g.G_ = std::move(G);
  return g;
}

GroupElt GroupElt::x(GroupPtr G, int root, const FieldElem& t) {
  GroupElt g = identity(std::move(G));
  g.rmul_x(root, t);
  return g;
}

GroupElt GroupElt::h_chi(GroupPtr G, const std::vector<FieldElem>& chi) {
  for (auto& c : chi)
    if (c.is_zero()) throw FieldError("zero torus parameter");
  GroupElt g = identity(std::move(G));
  g.h_ = chi;
  return g;
}

GroupElt GroupElt::h_coweight(GroupPtr G, const Coweight& lam, const FieldElem& t) {
  if (t.is_zero()) throw FieldError("zero torus parameter");
  std::vector<FieldElem> chi;
  for (int j = 0; j < G->rs.rank(); ++j) chi.push_back(t.pow(lam[j]));
  return h_chi(std::move(G), chi);
}

GroupElt GroupElt::h_coroot(GroupPtr G, int root, const FieldElem& t) {
  if (t.is_zero()) throw FieldError("zero torus parameter");
  auto chi = coroot_chi(*G, root, t);
  return h_chi(std::move(G), chi);
}

GroupElt GroupElt::s(GroupPtr G, int root, const FieldElem& t) {
  if (t.is_zero()) throw FieldError("zero torus parameter");
  GroupElt g = identity(std::move(G));
  g.rmul_x(root, t);
  g.rmul_x(g.G_->rs.neg(root), -t.inv());
  g.rmul_x(root, t);
  return g;
}

GroupElt GroupElt::n_word(GroupPtr G, const std::vector<int>& word) {
  GroupElt g = identity(std::move(G));
  for (int i : word) {
    if (i < 1 || i > g.G_->rs.rank()) throw RootError("invalid node " + std::to_string(i));
    g.rmul_n(i);
  }
  return g;
}

GroupElt& GroupElt::rmul_h(const std::vector<FieldElem>& chi) {
  auto all = G_->characters(chi);
  for (size_t b = 0; b < u2_.size(); ++b)
    if (!u2_[b].is_zero()) u2_[b] /= all[b];
  for (size_t j = 0; j < h_.size(); ++j) h_[j] *= chi[j];
  return *this;
}

GroupElt& GroupElt::rmul_x(int root, const FieldElem& t) {
  if (t.is_zero()) return *this;
  const RootSystem& rs = G_->rs;
  if (rs.positive(root)) {
    unip_rmul(*G_, u2_, root, t);
    return *this;
  }
  int b = rs.abs(root);
  std::vector<int> word = G_->descent[b];
  int j = G_->base[b];
  word.push_back(j);
  int sigma = G_->conj_sign(word, rs.simple(j));
  for (int i : word) rmul_n(i);
  rmul_x(rs.simple(j), sgn(sigma, t));
  for (auto it = word.rbegin(); it != word.rend(); ++it) rmul_ninv(*it);
  return *this;
}

GroupElt& GroupElt::rmul_n(int i) {
  const ChevGroup& G = *G_;
  const RootSystem& rs = G.rs;
  const StructConsts& sc = G.sc;
  int N = rs.num_positive(), ai = rs.simple(i);
  // split u2 = x_i(c) u'
  FieldElem c = u2_[ai];
  if (!c.is_zero()) unip_lmul(G, ai, -c, u2_);
  // u'' = n_i^{-1} u' n_i
  std::vector<FieldElem> u(N, G.F.zero());
  for (int b = 0; b < N; ++b) {
    if (u2_[b].is_zero()) continue;
    int sb = rs.reflect(ai, b);
    unip_rmul(G, u, sb, sgn(sc.eta(i, sb), u2_[b]));
  }
  FieldElem cp = h_[i - 1] * c;
  // h' = n_i^{-1} h n_i
  std::vector<FieldElem> hp(h_.size());
  for (int j = 1; j <= rs.rank(); ++j) hp[j - 1] = h_[j - 1] * h_[i - 1].pow(-rs.cartan(j, i));
  int wa = w_.act(ai);
  if (rs.positive(wa)) {
    if (!cp.is_zero()) unip_rmul(G, u1_, wa, sgn(G.conj_sign(w_.reduced_word(), ai), cp));
    w_ = w_ * WeylElt::simple(rs, i);
    h_ = hp;
    u2_ = std::move(u);
    return *this;
  }
  WeylElt wp = w_ * WeylElt::simple(rs, i);
  int gam = wp.act(ai);
  int s_wp = G.conj_sign(wp.reduced_word(), ai);
  int e = sc.eta(i, ai);
  if (cp.is_zero()) {
    FieldElem d = u1_[gam];
    if (!d.is_zero()) unip_rmul(G, u1_, gam, -d);
    w_ = wp;
    for (int j = 1; j <= rs.rank(); ++j)
      if (rs.cartan(j, i) % 2) hp[j - 1] = -hp[j - 1];
    h_ = hp;
    if (!d.is_zero()) unip_lmul(G, ai, sgn(s_wp, d) / h_[i - 1], u);
    u2_ = std::move(u);
    return *this;
  }
  FieldElem b = sgn(e, cp);
  FieldElem binv = b.inv();
  unip_rmul(G, u1_, gam, sgn(s_wp, binv));
  FieldElem chi_i = hp[i - 1];
  for (int j = 1; j <= rs.rank(); ++j) hp[j - 1] *= b.pow(rs.cartan(j, i));
  h_ = hp;
  unip_lmul(G, ai, binv / chi_i, u);
  u2_ = std::move(u);
  return *this;
}

GroupElt& GroupElt::rmul_ninv(int i) {
  rmul_n(i);
  return rmul_h(coroot_chi(*G_, G_->rs.simple(i), -G_->F.one()));
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
  if (G_ != o.G_ && (&G_->rs != &o.G_->rs || G_->F != o.G_->F)) throw FieldMismatch("group elements from different groups");
  GroupElt g = *this;
  for (size_t b = 0; b < o.u1_.size(); ++b) g.rmul_x((int)b, o.u1_[b]);
  for (int i : o.w_.reduced_word()) g.rmul_n(i);
  bool triv = true;
  for (auto& t : o.h_) triv = triv && t.is_one();
  if (!triv) g.rmul_h(o.h_);
  for (size_t b = 0; b < o.u2_.size(); ++b) g.rmul_x((int)b, o.u2_[b]);
  return g;
}

GroupElt GroupElt::inverse() const {
  GroupElt g = identity(G_);
  for (int b = (int)u2_.size() - 1; b >= 0; --b) g.rmul_x(b, -u2_[b]);
  std::vector<FieldElem> hi;
  for (auto& t : h_) hi.push_back(t.inv());
  g.rmul_h(hi);
  auto word = w_.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) g.rmul_ninv(*it);
  for (int b = (int)u1_.size() - 1; b >= 0; --b) g.rmul_x(b, -u1_[b]);
  return g;
}

GroupElt GroupElt::conjugate(const GroupElt& x) const { return x.inverse() * *this * x; }

bool GroupElt::operator==(const GroupElt& o) const {
  return w_ == o.w_ && u1_ == o.u1_ && h_ == o.h_ && u2_ == o.u2_;
}

bool GroupElt::is_identity() const {
  if (!w_.is_identity()) return false;
  for (auto& t : h_)
    if (!t.is_one()) return false;
  for (size_t b = 0; b < u1_.size(); ++b)
    if (!u1_[b].is_zero() || !u2_[b].is_zero()) return false;
  return true;
}

std::string GroupElt::str() const {
  const RootSystem& rs = G_->rs;
  std::string s;
  auto put = [&](const std::string& a) { s += (s.empty() ? "" : " ") + a; };
  auto xs = [&](const std::vector<FieldElem>& u) {
    for (size_t b = 0; b < u.size(); ++b)
      if (!u[b].is_zero()) put("x[" + rs.format((int)b) + "](" + u[b].str() + ")");
  };
  xs(u1_);
  if (!w_.is_identity()) {
    std::string n = "n[w";
    for (int i : w_.reduced_word()) n += " " + std::to_string(i);
    put(n + "]");
  }
  for (size_t j = 0; j < h_.size(); ++j)
    if (!h_[j].is_one()) put("h[w_" + std::to_string(j + 1) + "](" + h_[j].str() + ")");
  xs(u2_);
  return s.empty() ? "1" : s;
}

GroupElt sl2_rewrite(GroupPtr G, int root, const FieldElem& a, const FieldElem& b) {
  FieldElem d = G->F.one() + a * b;
  if (d.is_zero()) throw CellWall("1+ab = 0: the product crosses the cell wall");
  const RootSystem& rs = G->rs;
  GroupElt g = GroupElt::x(G, rs.neg(root), b / d);
  g.rmul_x(root, a * d);
  g.rmul_h(coroot_chi(*G, root, d.inv()));
  return g;
}

WeylElt displacement(const GroupElt& theta, const GroupElt& g) { return theta.conjugate(g).bruhat_cell(); }

}  // namespace chevkit
