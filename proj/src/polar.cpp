#include "chevkit/polar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "chevkit/field.hpp"
#include "chevkit/kernels.hpp"

namespace chevkit {

namespace {

std::string key_of(const Bits& b) { return std::string((const char*)b.data(), b.size() * sizeof(uint64_t)); }

void set_bit(Bits& b, int i) { b[i >> 6] |= uint64_t(1) << (i & 63); }
bool get_bit(const Bits& b, int i) { return b[i >> 6] >> (i & 63) & 1; }

size_t popcount(const Bits& a) {
  size_t c = 0;
  for (uint64_t w : a) c += __builtin_popcountll(w);
  return c;
}

std::vector<int> members(const Bits& b) {
  std::vector<int> out;
  for (size_t w = 0; w < b.size(); ++w)
    for (uint64_t x = b[w]; x; x &= x - 1) out.push_back(int(w * 64 + __builtin_ctzll(x)));
  return out;
}

// row echelon form over a small field; returns the nonzero rows
std::vector<PVec> echelon(const SmallField& F, int dim, std::vector<PVec> rows) {
  std::vector<PVec> out;
  int r = 0;
  for (int col = 0; col < dim && r < (int)rows.size(); ++col) {
    int piv = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    uint8_t iv = F.inv[rows[r][col]];
    for (int j = 0; j < dim; ++j) rows[r][j] = F.mul[rows[r][j]][iv];
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || !rows[i][col]) continue;
      uint8_t f = rows[i][col];
      for (int j = 0; j < dim; ++j) rows[i][j] = F.sub(rows[i][j], F.mul[f][rows[r][j]]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_span(const SmallField& F, int dim, const std::vector<PVec>& ech, PVec v) {
  for (const PVec& row : ech) {
    int col = 0;
    while (!row[col]) ++col;
    if (!v[col]) continue;
    uint8_t f = v[col];
    for (int j = 0; j < dim; ++j) v[j] = F.sub(v[j], F.mul[f][row[j]]);
  }
  for (int j = 0; j < dim; ++j)
    if (v[j]) return false;
  return true;
}

Bits image(const HyperbolicSpace& sp, const std::vector<int>& perm, const std::vector<int>& pts) {
  Bits b = sp.empty_bits();
  for (int p : pts) set_bit(b, perm[p]);
  return b;
}

Bits fixed_bits(const HyperbolicSpace& sp, const std::vector<int>& perm) {
  Bits b = sp.empty_bits();
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == (int)i) set_bit(b, (int)i);
  return b;
}

}  // namespace

SmallField SmallField::make(int q) {
  SmallField F;
  F.q = q;
  if (q == 4) {
    F.p = 2;
    F.e = 2;
    auto mulp = [](int a, int b) {
      // (a0 + a1 w)(b0 + b1 w), w^2 = w + 1
      int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
      int c0 = (a0 * b0) ^ (a1 * b1);
      int c1 = (a0 * b1) ^ (a1 * b0) ^ (a1 * b1);
      return c0 | (c1 << 1);
    };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        F.add[a][b] = uint8_t(a ^ b);
        F.mul[a][b] = (uint8_t)mulp(a, b);
      }
    for (int a = 0; a < 4; ++a) {
      F.neg[a] = (uint8_t)a;
      F.frob[a] = F.mul[a][a];
      for (int b = 1; b < 4; ++b)
        if (F.mul[a][b] == 1) F.inv[a] = (uint8_t)b;
    }
    return F;
  }
  if (q != 2 && q != 3 && q != 5 && q != 7) throw std::invalid_argument("small field order must be 2, 3, 4, 5 or 7");
  F.p = q;
  for (int a = 0; a < q; ++a) {
    F.neg[a] = uint8_t((q - a) % q);
    F.frob[a] = (uint8_t)a;
    for (int b = 0; b < q; ++b) {
      F.add[a][b] = uint8_t((a + b) % q);
      F.mul[a][b] = uint8_t(a * b % q);
      if (a * b % q == 1) F.inv[a] = (uint8_t)b;
    }
  }
  return F;
}

size_t HyperbolicSpace::code(const PVec& v) const {
  size_t c = 0;
  for (int i = dim - 1; i >= 0; --i) c = c * q + v[i];
  return c;
}

PVec HyperbolicSpace::normalize(PVec v) const {
  for (int i = 0; i < dim; ++i)
    if (v[i]) {
      uint8_t iv = F.inv[v[i]];
      for (int j = i; j < dim; ++j) v[j] = F.mul[v[j]][iv];
      break;
    }
  return v;
}

int HyperbolicSpace::find_point(const PVec& v) const { return lookup_[code(normalize(v))]; }

uint8_t HyperbolicSpace::quad(const PVec& v) const {
  uint8_t s = 0;
  for (int i = 0; i < n; ++i) s = F.add[s][F.mul[v[i]][v[dim - 1 - i]]];
  return s;
}

uint8_t HyperbolicSpace::bilinear(const PVec& x, const PVec& y) const {
  uint8_t s = 0;
  for (int i = 0; i < dim; ++i) s = F.add[s][F.mul[x[i]][y[dim - 1 - i]]];
  return s;
}

size_t HyperbolicSpace::proj_count(int d) const {
  size_t c = 0, pw = 1;
  for (int i = 0; i <= d; ++i, pw *= q) c += pw;
  return c;
}

int HyperbolicSpace::proj_dim(size_t count) const {
  for (int d = -1; d < dim; ++d)
    if (proj_count(d) == count) return d;
  return -2;
}

Subspace HyperbolicSpace::span(const std::vector<PVec>& basis) const {
  Subspace s;
  s.basis = basis;
  s.bits = empty_bits();
  int k = (int)basis.size();
  std::vector<uint8_t> c(k, 0);
  size_t total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  for (size_t t = 1; t < total; ++t) {
    size_t x = t;
    for (int i = 0; i < k; ++i, x /= q) c[i] = uint8_t(x % q);
    int lead = 0;
    while (!c[lead]) ++lead;
    if (c[lead] != 1) continue;
    PVec v{};
    for (int i = 0; i < k; ++i)
      if (c[i])
        for (int j = 0; j < dim; ++j) v[j] = F.add[v[j]][F.mul[c[i]][basis[i][j]]];
    int pt = find_point(v);
    if (pt < 0) throw std::logic_error("span of a singular subspace left the quadric");
    s.pts.push_back(pt);
    set_bit(s.bits, pt);
  }
  std::sort(s.pts.begin(), s.pts.end());
  return s;
}

int HyperbolicSpace::rank_dim(const std::vector<PVec>& vs) const { return (int)echelon(F, dim, vs).size() - 1; }

HyperbolicSpace HyperbolicSpace::build(int n, int q, int max_dim) {
  if (n < 1 || n > 4) throw std::invalid_argument("rank must be in 1..4");
  HyperbolicSpace sp;
  sp.n = n;
  sp.q = q;
  sp.dim = 2 * n;
  sp.F = SmallField::make(q);
  size_t total = 1;
  for (int i = 0; i < sp.dim; ++i) total *= q;
  if (total > (size_t(1) << 20)) throw BudgetError("polar space too large");
  sp.lookup_.assign(total, -1);
  for (size_t t = 1; t < total; ++t) {
    PVec v{};
    size_t x = t;
    for (int i = 0; i < sp.dim; ++i, x /= q) v[i] = uint8_t(x % q);
    if (sp.normalize(v) != v || sp.quad(v)) continue;
    sp.lookup_[t] = (int)sp.points.size();
    sp.points.push_back(v);
  }
  size_t P = sp.points.size();
  sp.words = int((P + 63) / 64);
  sp.perp.assign(P, sp.empty_bits());
  for (size_t a = 0; a < P; ++a)
    for (size_t b = a; b < P; ++b)
      if (!sp.bilinear(sp.points[a], sp.points[b])) {
        set_bit(sp.perp[a], (int)b);
        set_bit(sp.perp[b], (int)a);
      }
  sp.coord_major.assign(sp.dim * P, 0);
  for (size_t k = 0; k < P; ++k)
    for (int i = 0; i < sp.dim; ++i) sp.coord_major[i * P + k] = sp.points[k][i];

  int top = max_dim < 0 ? n - 1 : std::min(max_dim, n - 1);
  sp.subs.resize(top + 1);
  for (size_t p = 0; p < P; ++p) {
    Subspace s;
    s.basis = {sp.points[p]};
    s.pts = {(int)p};
    s.bits = sp.empty_bits();
    set_bit(s.bits, (int)p);
    sp.subs[0].push_back(std::move(s));
  }
  for (int d = 1; d <= top; ++d) {
    std::unordered_set<std::string> seen;
    for (const Subspace& S : sp.subs[d - 1]) {
      Bits common = sp.perp[S.pts[0]];
      for (int p : S.pts)
        for (int w = 0; w < sp.words; ++w) common[w] &= sp.perp[p][w];
      Bits covered = S.bits;
      for (int c : members(common)) {
        if (get_bit(covered, c)) continue;
        auto basis = S.basis;
        basis.push_back(sp.points[c]);
        Subspace T = sp.span(basis);
        for (int w = 0; w < sp.words; ++w) covered[w] |= T.bits[w];
        if (seen.insert(key_of(T.bits)).second) sp.subs[d].push_back(std::move(T));
      }
    }
  }
  if (top == n - 1) {
    const auto& G = sp.generators();
    for (const Subspace& M : G) {
      int dd = sp.proj_dim(kernels::and_popcount(M.bits.data(), G[0].bits.data(), sp.words));
      sp.gen_class.push_back(((n - 1 - dd) % 2 + 2) % 2);
    }
  }
  return sp;
}

Collineation Collineation::identity(int d) {
  Collineation c;
  c.d = d;
  c.m.assign(d * d, 0);
  for (int i = 0; i < d; ++i) c.m[i * d + i] = 1;
  return c;
}

PVec Collineation::apply(const SmallField& F, const PVec& v) const {
  PVec w = v;
  for (int k = 0; k < frob; ++k)
    for (int i = 0; i < d; ++i) w[i] = F.frob[w[i]];
  PVec out{};
  for (int i = 0; i < d; ++i)
    if (w[i])
      for (int j = 0; j < d; ++j) out[j] = F.add[out[j]][F.mul[w[i]][m[i * d + j]]];
  return out;
}

Collineation Collineation::then(const SmallField& F, const Collineation& o) const {
  Collineation c;
  c.d = d;
  c.frob = (frob + o.frob) % F.e;
  std::vector<uint8_t> a = m;
  for (int k = 0; k < o.frob; ++k)
    for (auto& x : a) x = F.frob[x];
  c.m.assign(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      uint8_t x = a[i * d + k];
      if (!x) continue;
      for (int j = 0; j < d; ++j) c.m[i * d + j] = F.add[c.m[i * d + j]][F.mul[x][o.m[k * d + j]]];
    }
  return c;
}

std::string Collineation::str() const {
  std::ostringstream os;
  for (int i = 0; i < d; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < d; ++j) os << (j ? " " : "") << int(m[i * d + j]);
  }
  if (frob) os << " | frob " << frob;
  return os.str();
}

std::vector<int> point_permutation(const HyperbolicSpace& sp, const Collineation& c) {
  if (c.d != sp.dim) throw NotCollineation("matrix size does not match the space");
  const SmallField& F = sp.F;
  int d = sp.dim;
  // similarity test on the standard basis: Q(e_i M) = 0, B(e_i M, e_j M) = lambda B(e_i, e_j)
  std::vector<PVec> rows(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rows[i][j] = c.m[i * d + j];
  if ((int)echelon(F, d, rows).size() != d) throw NotCollineation("singular matrix");
  uint8_t lam = sp.bilinear(rows[0], rows[d - 1]);
  if (!lam) throw NotCollineation("form not preserved");
  for (int i = 0; i < d; ++i) {
    if (sp.quad(rows[i])) throw NotCollineation("quadric not preserved");
    for (int j = i + 1; j < d; ++j) {
      uint8_t want = (i + j == d - 1) ? lam : 0;
      if (sp.bilinear(rows[i], rows[j]) != want) throw NotCollineation("form not preserved up to a scalar");
    }
  }
  size_t P = sp.points.size();
  std::vector<int> perm(P);
  if (F.e == 1) {
    std::vector<uint8_t> out(sp.coord_major.size());
    kernels::matvec_mod(sp.coord_major.data(), P, d, c.m.data(), (uint8_t)F.p, out.data());
    for (size_t k = 0; k < P; ++k) {
      PVec v{};
      for (int i = 0; i < d; ++i) v[i] = out[i * P + k];
      perm[k] = sp.find_point(v);
    }
  } else {
    for (size_t k = 0; k < P; ++k) perm[k] = sp.find_point(c.apply(F, sp.points[k]));
  }
  std::vector<char> hit(P, 0);
  for (int x : perm) {
    if (x < 0 || hit[x]) throw NotCollineation("point set not preserved");
    hit[x] = 1;
  }
  return perm;
}

Collineation reflection(const HyperbolicSpace& sp, const PVec& v) {
  const SmallField& F = sp.F;
  uint8_t qv = sp.quad(v);
  if (!qv) throw std::invalid_argument("reflection needs a non-singular vector");
  uint8_t iq = F.inv[qv];
  Collineation c = Collineation::identity(sp.dim);
  for (int i = 0; i < sp.dim; ++i) {
    PVec e{};
    e[i] = 1;
    uint8_t f = F.mul[sp.bilinear(e, v)][iq];
    for (int j = 0; j < sp.dim; ++j) c.m[i * sp.dim + j] = F.sub(c.m[i * sp.dim + j], F.mul[f][v[j]]);
  }
  return c;
}

namespace {
PVec random_nonsingular(const HyperbolicSpace& sp, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> U(0, sp.q - 1);
  for (;;) {
    PVec v{};
    for (int i = 0; i < sp.dim; ++i) v[i] = (uint8_t)U(rng);
    if (sp.quad(v)) return v;
  }
}
}  // namespace

Collineation random_isometry(const HyperbolicSpace& sp, std::mt19937_64& rng, int length) {
  Collineation c = Collineation::identity(sp.dim);
  for (int k = 0; k < length; ++k) c = c.then(sp.F, reflection(sp, random_nonsingular(sp, rng)));
  return c;
}

std::vector<Collineation> isometry_group(const HyperbolicSpace& sp, size_t budget) {
  std::vector<Collineation> gens;
  {
    std::unordered_set<std::string> seen;
    size_t total = 1;
    for (int i = 0; i < sp.dim; ++i) total *= sp.q;
    for (size_t t = 1; t < total; ++t) {
      PVec v{};
      size_t x = t;
      for (int i = 0; i < sp.dim; ++i, x /= sp.q) v[i] = uint8_t(x % sp.q);
      if (sp.normalize(v) != v || !sp.quad(v)) continue;
      Collineation r = reflection(sp, v);
      auto perm = point_permutation(sp, r);
      if (seen.insert(std::string((const char*)perm.data(), perm.size() * sizeof(int))).second) gens.push_back(r);
    }
  }
  std::vector<Collineation> group{Collineation::identity(sp.dim)};
  std::unordered_set<std::string> seen;
  auto key = [&](const Collineation& c) {
    auto perm = point_permutation(sp, c);
    return std::string((const char*)perm.data(), perm.size() * sizeof(int));
  };
  seen.insert(key(group[0]));
  for (size_t i = 0; i < group.size(); ++i)
    for (const Collineation& r : gens) {
      Collineation h = group[i].then(sp.F, r);
      if (seen.insert(key(h)).second) {
        if (group.size() >= budget) throw BudgetError("isometry group exceeds budget");
        group.push_back(std::move(h));
      }
    }
  return group;
}

KangarooVerdict is_kangaroo(const HyperbolicSpace& sp, const std::vector<int>& perm) {
  KangarooVerdict v;
  std::vector<int> fixed;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == (int)i) {
      fixed.push_back((int)i);
      continue;
    }
    v.nontrivial = true;
    if (sp.collinear((int)i, perm[i])) v.moves_to_collinear = true;
  }
  v.fixed_points = fixed.size();
  v.kangaroo = v.nontrivial && !fixed.empty() && !v.moves_to_collinear;
  for (size_t a = 0; a < fixed.size() && !v.lazy; ++a)
    for (size_t b = a + 1; b < fixed.size() && !v.lazy; ++b) {
      if (!sp.collinear(fixed[a], fixed[b])) continue;
      Subspace L = sp.span({sp.points[fixed[a]], sp.points[fixed[b]]});
      bool all = true;
      for (int p : L.pts) all = all && perm[p] == p;
      v.lazy = all;
    }
  v.diligent = v.kangaroo && !v.lazy;
  return v;
}

bool KangarooEquivalences::agree() const {
  return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

std::string KangarooEquivalences::str() const {
  std::string s;
  for (int i = 0; i < 6; ++i) s += holds[i] ? '1' : '0';
  return s + " k=" + std::to_string(k_global) + "/" + std::to_string(k_pointwise) + "/" + std::to_string(k_large);
}

KangarooEquivalences kangaroo_equivalences(const HyperbolicSpace& sp, const std::vector<int>& perm) {
  if (sp.n < 3) throw std::invalid_argument("the characterisation needs rank at least 3");
  if (!sp.has_subspaces(sp.n - 1)) throw std::invalid_argument("space built without generators");
  KangarooEquivalences R;
  int n = sp.n, W = sp.words;
  KangarooVerdict kv = is_kangaroo(sp, perm);
  R.holds[0] = kv.kangaroo || !kv.nontrivial;

  // (ii), (iii)
  bool glob = true, point = true;
  int k = -3;
  for (const Subspace& M : sp.generators()) {
    Bits img = image(sp, perm, M.pts);
    Bits in = M.bits;
    for (int w = 0; w < W; ++w) in[w] &= img[w];
    int dd = sp.proj_dim(popcount(in));
    R.per_generator.push_back(dd);
    if (k == -3) k = dd;
    if (dd != k || dd < 0) {
      glob = point = false;
      continue;
    }
    for (int p : members(in)) {
      if (!get_bit(in, perm[p])) glob = false;
      if (perm[p] != p) point = false;
    }
  }
  R.holds[1] = glob;
  R.holds[2] = point;
  if (glob) R.k_global = k;
  if (point) R.k_pointwise = k;

  // (iv)
  Bits F = fixed_bits(sp, perm);
  bool iv = kv.fixed_points > 0;
  for (const Subspace& L : sp.subs[1]) {
    if (!iv) break;
    Bits img = image(sp, perm, L.pts);
    if (img == L.bits) continue;
    size_t meet = kernels::and_popcount(L.bits.data(), img.data(), W);
    size_t perp_count = 0;
    for (int x : L.pts)
      if (kernels::is_subset(img.data(), sp.perp[x].data(), W)) ++perp_count;
    if (meet == 1 && perp_count == L.pts.size()) iv = false;           // coplanar
    if (meet == 0 && perp_count > 0 && perp_count < L.pts.size()) iv = false;  // special
  }
  R.holds[3] = iv;

  // shared data for (v), (vi)
  bool closed = true;
  for (const Subspace& L : sp.subs[1]) {
    size_t c = kernels::and_popcount(L.bits.data(), F.data(), W);
    if (c >= 2 && c < L.pts.size()) closed = false;
  }
  int top = -1;
  for (int d = 0; d < n; ++d)
    for (const Subspace& S : sp.subs[d])
      if (kernels::is_subset(S.bits.data(), F.data(), W)) {
        top = d;
        break;
      }
  bool nondeg = true;
  for (int x : members(F))
    if (kernels::is_subset(F.data(), sp.perp[x].data(), W)) nondeg = false;

  // (v)
  bool large = closed && top >= 0 && nondeg;
  if (large) {
    int i = n - top - 1;
    for (const Subspace& S : sp.subs[i])
      if (!kernels::intersects(S.bits.data(), F.data(), W)) large = false;
    if (large && i > 0) {
      bool disjoint = false;
      for (const Subspace& S : sp.subs[i - 1])
        if (!kernels::intersects(S.bits.data(), F.data(), W)) {
          disjoint = true;
          break;
        }
      large = disjoint;
    }
  }
  R.holds[4] = large;
  if (large) R.k_large = top;

  // (vi)
  bool ideal = closed && top >= 0;
  if (ideal) {
    size_t want = sp.proj_count(top);
    auto check = [&](const Bits* S) {
      for (const Subspace& M : sp.generators()) {
        if (S && !kernels::is_subset(S->data(), M.bits.data(), W)) continue;
        if (kernels::and_popcount(M.bits.data(), F.data(), W) != want) return false;
      }
      return true;
    };
    if (top == 0) {
      ideal = check(nullptr);
    } else {
      for (const Subspace& S : sp.subs[top - 1]) {
        if (!kernels::is_subset(S.bits.data(), F.data(), W)) continue;
        if (!check(&S.bits)) {
          ideal = false;
          break;
        }
      }
    }
  }
  R.holds[5] = ideal;
  return R;
}

int contains_skeleton(const HyperbolicSpace& sp, const std::vector<int>& pts, size_t budget) {
  std::vector<PVec> vs;
  for (int p : pts) vs.push_back(sp.points[p]);
  int d = sp.rank_dim(vs);
  int need = d + 2;
  if ((int)pts.size() < need) return 0;
  std::vector<int> pick;
  size_t steps = 0;
  bool over = false;
  // every d+1 of the chosen points independent
  auto general = [&](const std::vector<int>& c) {
    int m = (int)c.size();
    if (m <= d + 1) {
      std::vector<PVec> w;
      for (int i : c) w.push_back(vs[i]);
      return sp.rank_dim(w) == m - 1;
    }
    for (int skip = 0; skip < m; ++skip) {
      std::vector<PVec> w;
      for (int i = 0; i < m; ++i)
        if (i != skip) w.push_back(vs[c[i]]);
      if (sp.rank_dim(w) != d) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int start) -> bool {
    if ((int)pick.size() == need) return true;
    for (int i = start; i < (int)vs.size(); ++i) {
      if (++steps > budget) {
        over = true;
        return false;
      }
      pick.push_back(i);
      if (general(pick) && rec(i + 1)) return true;
      pick.pop_back();
      if (over) return false;
    }
    return false;
  };
  bool found = rec(0);
  if (found) return 1;
  return over ? -1 : 0;
}

std::string FixedStructure::str() const {
  std::ostringstream os;
  os << "fixed=" << fixed.size() << " span_dim=" << span_dim << " rank=" << rank << (lazy ? " lazy" : " diligent")
     << " ovoid=" << ovoid << " involution=" << involution << (linear ? " linear" : " semilinear")
     << (type_preserving ? " type-preserving" : " type-interchanging") << " span_cap_quadric=" << span_cap_quadric
     << " skeleton=" << (skeleton < 0 ? std::string("n/a") : std::to_string(skeleton));
  return os.str();
}

FixedStructure fixed_structure(const HyperbolicSpace& sp, const Collineation& c) {
  auto perm = point_permutation(sp, c);
  KangarooVerdict kv = is_kangaroo(sp, perm);
  if (!kv.kangaroo) throw std::invalid_argument("not a kangaroo");
  FixedStructure fs;
  Bits F = fixed_bits(sp, perm);
  fs.fixed = members(F);
  fs.lazy = kv.lazy;
  fs.linear = c.frob == 0;
  std::vector<PVec> vs;
  for (int p : fs.fixed) vs.push_back(sp.points[p]);
  auto ech = echelon(sp.F, sp.dim, vs);
  fs.span_dim = (int)ech.size() - 1;
  fs.span_cap_quadric = true;
  for (size_t x = 0; x < sp.points.size(); ++x)
    if (in_span(sp.F, sp.dim, ech, sp.points[x]) != get_bit(F, (int)x)) fs.span_cap_quadric = false;
  fs.involution = true;
  for (size_t x = 0; x < perm.size(); ++x)
    if (perm[perm[x]] != (int)x) fs.involution = false;
  for (int d = 0; d < (int)sp.subs.size(); ++d)
    for (const Subspace& S : sp.subs[d])
      if (kernels::is_subset(S.bits.data(), F.data(), sp.words)) {
        fs.rank = d + 1;
        break;
      }
  if (sp.has_subspaces(sp.n - 1)) {
    fs.ovoid = true;
    for (const Subspace& M : sp.generators())
      if (kernels::and_popcount(M.bits.data(), F.data(), sp.words) != 1) fs.ovoid = false;
    const Subspace& M0 = sp.generators()[0];
    Bits img = image(sp, perm, M0.pts);
    int dd = sp.proj_dim(kernels::and_popcount(M0.bits.data(), img.data(), sp.words));
    fs.type_preserving = ((sp.n - 1 - dd) % 2 + 2) % 2 == 0;
  }
  if (sp.q > 2 && !fs.lazy) fs.skeleton = contains_skeleton(sp, fs.fixed);
  return fs;
}

Collineation baer_involution_d2q4() {
  Collineation c = Collineation::identity(4);
  c.m = {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  c.frob = 1;
  return c;
}

}  // namespace chevkit
