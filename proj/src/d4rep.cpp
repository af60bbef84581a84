#include "chevkit/d4rep.hpp"

#include <array>
#include <functional>
#include <map>

namespace chevkit {

namespace {

struct Entry {
  int s1, i, j, s2, k, l;
};

// x_r(a) = I + s1 a E_ij + s2 a E_kl, keyed by D4 coefficient vector
const std::map<RootVec, Entry>& table() {
  static const std::map<RootVec, Entry> t = {
      {{1, 0, 0, 0}, {1, 2, 1, -1, 8, 7}},  {{1, 2, 1, 1}, {1, 7, 1, -1, 8, 2}},
      {{0, 1, 0, 0}, {1, 3, 2, -1, 7, 6}},  {{0, 1, 1, 1}, {1, 6, 2, -1, 7, 3}},
      {{0, 0, 1, 0}, {1, 4, 3, -1, 6, 5}},  {{0, 0, 0, 1}, {1, 5, 3, -1, 6, 4}},
      {{1, 1, 0, 0}, {-1, 3, 1, 1, 8, 6}},  {{1, 1, 1, 1}, {-1, 6, 1, 1, 8, 3}},
      {{1, 1, 1, 0}, {-1, 4, 1, 1, 8, 5}},  {{1, 1, 0, 1}, {1, 5, 1, -1, 8, 4}},
      {{0, 1, 1, 0}, {1, 4, 2, -1, 7, 5}},  {{0, 1, 0, 1}, {-1, 5, 2, 1, 7, 4}},
  };
  return t;
}

const Entry& entry(int root) {
  const RootSystem& d4 = d4_system();
  return table().at(d4.coeffs(d4.abs(root)));
}

int D(const char* label) { return d4_system().parse(label); }

}  // namespace

const RootSystem& d4_system() { return RootSystem::get('D', 4); }

std::vector<int> d4_embedding_nodes(const RootSystem& rs) {
  if (rs.type() == 'D' && rs.rank() == 4) return {1, 2, 3, 4};
  if (rs.type() == 'E') return {2, 4, 3, 5};
  return {};
}

int embed_d4_root(const RootSystem& rs, int d4root) {
  auto nodes = d4_embedding_nodes(rs);
  if (nodes.empty()) throw RootError(rs.name() + " has no embedded D4");
  const RootSystem& d4 = d4_system();
  RootVec v(rs.rank(), 0);
  for (int k = 0; k < 4; ++k) v[nodes[k] - 1] = d4.coeffs(d4root)[k];
  return rs.index_of(v);
}

Mat d4_matrix(int root, const FieldElem& a) {
  Field F = a.field();
  const Entry& e = entry(root);
  Mat m = Mat::identity(F, 8);
  m(e.i - 1, e.j - 1) = e.s1 > 0 ? a : -a;
  m(e.k - 1, e.l - 1) = e.s2 > 0 ? a : -a;
  return d4_system().positive(root) ? m : m.transpose();
}

Mat d4_n(Field F, int node) {
  int r = d4_system().simple(node);
  Mat x = d4_matrix(r, F.one());
  return x * d4_matrix(d4_system().neg(r), -F.one()) * x;
}

Mat d4_n_word(Field F, const std::vector<int>& word) {
  Mat m = Mat::identity(F, 8);
  for (int i : word) m = m * d4_n(F, i);
  return m;
}

Mat d4_h_coroot(int root, const FieldElem& t) {
  const RootSystem& d4 = d4_system();
  Field F = t.field();
  auto s = [&](const FieldElem& u) {
    return d4_matrix(root, u) * d4_matrix(d4.neg(root), -u.inv()) * d4_matrix(root, u);
  };
  return s(t) * s(F.one()).inverse();
}

Mat d4_n_longest(Field F) { return d4_n_word(F, WeylElt::longest(d4_system()).reduced_word()); }

std::vector<int> default_sign_twist(const RootSystem& rs) {
  std::vector<int> eps(rs.num_positive(), 1);
  auto nodes = d4_embedding_nodes(rs);
  if (nodes.empty()) return eps;
  StructConsts sc = StructConsts::build(rs);
  const RootSystem& d4 = d4_system();
  Field Q = Field::rationals();
  auto msign = [&](int a, int b) {
    Mat one = d4_matrix(a, Q.one()), two = d4_matrix(b, Q.one());
    Mat c = one * two * d4_matrix(a, -Q.one()) * d4_matrix(b, -Q.one());
    int s = d4.sum(a, b);
    if (c == d4_matrix(s, Q.one())) return 1;
    if (c == d4_matrix(s, -Q.one())) return -1;
    throw std::logic_error("D4 matrix commutator is not a root element");
  };
  auto E = [&](int r) { return embed_d4_root(rs, r); };
  for (int g = 0; g < d4.num_positive(); ++g) {
    if (d4.height(g) == 1) continue;
    for (int a = 0; a < g; ++a) {
      int b = d4.sum(g, d4.neg(a));
      if (b < 0 || !d4.positive(b)) continue;
      eps[E(g)] = msign(a, b) * sc.N(E(a), E(b)) * eps[E(a)] * eps[E(b)];
      break;
    }
  }
  for (int a = 0; a < d4.num_positive(); ++a)
    for (int b = 0; b < d4.num_positive(); ++b) {
      int s = d4.sum(a, b);
      if (s >= 0 && eps[E(a)] * eps[E(b)] * eps[E(s)] * sc.N(E(a), E(b)) != msign(a, b))
        throw std::logic_error("D4 matrix signs are not a Chevalley sign system");
    }
  return eps;
}

FieldElem d4_form(const Vec& x, const Vec& y) {
  FieldElem s = x[0].field().zero();
  for (int i = 0; i < 8; ++i) s += x[i] * y[7 - i];
  return s;
}

FieldElem d4_quad(const Vec& x) {
  FieldElem s = x[0].field().zero();
  for (int i = 0; i < 4; ++i) s += x[i] * x[7 - i];
  return s;
}

bool form_preserved(const Mat& m) {
  // M J M^T = J with J the antidiagonal Gram matrix
  Mat J(m.field(), 8);
  for (int i = 0; i < 8; ++i) J(i, 7 - i) = m.field().one();
  return m * J * m.transpose() == J;
}

bool is_standard_basis(const std::vector<Vec>& v) {
  if (v.size() != 8) return false;
  for (int i = 0; i < 8; ++i) {
    if (!d4_quad(v[i]).is_zero()) return false;
    for (int j = 0; j < 8; ++j) {
      FieldElem p = d4_form(v[i], v[j]);
      if (i + j == 7 ? !p.is_one() : !p.is_zero()) return false;
    }
  }
  return true;
}

Mat from_rows(const std::vector<Vec>& rows) {
  Mat m(rows[0][0].field(), (int)rows.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

FieldElem d4_coeff(const Mat& m, int root) {
  const Entry& e = entry(root);
  const FieldElem& x = m(e.i - 1, e.j - 1);
  return e.s1 > 0 ? x : -x;
}

GroupElt d4_group_of_borel(GroupPtr G, const Mat& m) {
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (!m(i, j).is_zero()) throw RootError("matrix is not lower triangular");
  std::vector<FieldElem> d(8);
  for (int i = 0; i < 8; ++i) d[i] = m(i, i);
  std::vector<FieldElem> dinv;
  for (auto& x : d) dinv.push_back(x.inv());
  Mat u = m * Mat::diag(dinv);
  const RootSystem& d4 = d4_system();
  GroupElt g = GroupElt::identity(G);
  for (int r = 0; r < d4.num_positive(); ++r) {
    FieldElem a = d4_coeff(u, r);
    if (a.is_zero()) continue;
    u = d4_matrix(r, -a) * u;
    g.rmul_x(r, a);
  }
  if (!u.is_identity()) throw RootError("unipotent part is not in the D4 group");
  std::vector<FieldElem> chi;
  for (int k = 1; k <= 4; ++k) {
    const Entry& e = entry(d4.simple(k));
    chi.push_back(d[e.i - 1] / d[e.j - 1]);
  }
  g.rmul_h(chi);
  return g;
}

std::optional<Mat> d4_matrix_of(const GroupElt& g) {
  const RootSystem& d4 = d4_system();
  Field F = g.group().F;
  Mat m = Mat::identity(F, 8);
  for (int r = 0; r < d4.num_positive(); ++r)
    if (!g.u1()[r].is_zero()) m = m * d4_matrix(r, g.u1()[r]);
  m = m * d4_n_word(F, g.w().reduced_word());
  const auto& chi = g.h();
  auto s = sqrt_of(chi[2] * chi[3]);
  if (!s) return std::nullopt;
  // d2/d1 = chi1, d3/d2 = chi2, d4/d3 = chi3, d5/d3 = chi4, d_{9-i} = 1/d_i
  FieldElem d1 = (chi[0] * chi[1] * *s).inv();
  std::vector<FieldElem> d(8);
  d[0] = d1;
  d[1] = d1 * chi[0];
  d[2] = d[1] * chi[1];
  d[3] = d[2] * chi[2];
  for (int i = 0; i < 4; ++i) d[7 - i] = d[i].inv();
  m = m * Mat::diag(d);
  for (int r = 0; r < d4.num_positive(); ++r)
    if (!g.u2()[r].is_zero()) m = m * d4_matrix(r, g.u2()[r]);
  return m;
}

Mat build_theta_E74(const ThetaParams& p) {
  const auto& [a, b, c, t1, t2, t3, t4] = p;
  for (auto* t : {&t1, &t2, &t3, &t4})
    if (t->is_zero()) throw FieldError("zero torus parameter");
  Field F = a.field();
  std::vector<std::pair<const char*, FieldElem>> fs = {
      {"1000", t2 * t3 * t4 * a},
      {"1100", -(t1 * t2 * t3 * t4 * b)},
      {"1101", t1 * t2 * t3 * t4 * c},
      {"1111", -(t1 * t2 * t2 * t3 * t3 * t4 * b)},
      {"1211", t1 * t2 * t2 * t3 * t3 * t4 * a},
      {"0010", t2 * t3 * a},
      {"0110", -(t1 * t2 * t3 * b)},
      {"0111", t1 * t2 * t3 * c},
      {"0001", t2 * a},
      {"1110", -(t1 * t2 * t3 * t3 * t4 * c)},
      {"0101", t1 * t2 * b},
      {"0100", t1 * c},
  };
  Mat m = Mat::identity(F, 8);
  for (auto& [r, v] : fs) m = m * d4_matrix(D(r), v);
  m = m * d4_h_coroot(D("1000"), t1 * t2.pow(2) * t3.pow(3) * t4.pow(2));
  m = m * d4_h_coroot(D("0100"), t1.pow(2) * t2.pow(3) * t3.pow(4) * t4.pow(2));
  m = m * d4_h_coroot(D("0010"), t1 * t2.pow(2) * t3.pow(3) * t4);
  m = m * d4_h_coroot(D("0001"), t1 * t2.pow(2) * t3.pow(2) * t4);
  return m * d4_n_longest(F);
}

UPoly theta_p(const ThetaParams& p) {
  const auto& [a, b, c, t1, t2, t3, t4] = p;
  Field F = a.field();
  FieldElem s = t2 * a * a + t1 * t2 * b * b + t1 * c * c - t1 * t2 * a * b * c - F.from_int(2);
  return {F.one(), -s, F.one()};
}

UPoly theta_expected_charpoly(const ThetaParams& p) {
  Field F = p.a.field();
  UPoly lin{-F.one(), F.one()};
  UPoly out{F.one()};
  for (int i = 0; i < 4; ++i) out = upoly_mul(out, lin);
  UPoly q = theta_p(p);
  return upoly_mul(out, upoly_mul(q, q));
}

// ---- linear algebra helpers ----

namespace {

struct Affine {
  Vec part;
  std::vector<Vec> null;
};

// rows x = rhs over n unknowns
std::optional<Affine> solve_affine(Field F, std::vector<Vec> rows, Vec rhs, int n) {
  for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    FieldElem inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      FieldElem f = rows[i][c];
      for (int j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows.size(); ++i)
    if (!rows[i][n].is_zero()) return std::nullopt;
  Affine out;
  out.part.assign(n, F.zero());
  for (size_t i = 0; i < piv.size(); ++i) out.part[piv[i]] = rows[i][n];
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, F.zero());
    v[f] = F.one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    out.null.push_back(v);
  }
  return out;
}

Vec axpy(const Vec& x, const FieldElem& c, const Vec& y) {
  Vec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] += c * y[i];
  return z;
}

Vec scale(const Vec& x, const FieldElem& c) {
  Vec z = x;
  for (auto& v : z) v *= c;
  return z;
}

int rank_of(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  int n = (int)vs[0].size();
  Field F = vs[0][0].field();
  Mat m(F, std::max(n, (int)vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < n; ++j) m((int)i, j) = vs[i][j];
  return m.rank();
}

bool independent_of(const std::vector<Vec>& span, const Vec& v) {
  auto all = span;
  all.push_back(v);
  return rank_of(all) > rank_of(span);
}

// isotropic vectors on lines of the span (not inside avoid)
std::vector<Vec> isotropic_candidates(const std::vector<Vec>& basis, const std::vector<Vec>& avoid, size_t want) {
  std::vector<Vec> out;
  auto take = [&](const Vec& v) {
    if (out.size() < want && d4_quad(v).is_zero() && independent_of(avoid, v)) {
      for (auto& o : out)
        if (!independent_of({o}, v)) return;
      out.push_back(v);
    }
  };
  for (auto& e : basis) take(e);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Vec &e = basis[i], &f = basis[j];
      FieldElem qe = d4_quad(e), qf = d4_quad(f), be = d4_form(e, f);
      if (!qf.is_zero()) {
        try {
          for (auto& [x, m] : quadratic_roots(be / qf, qe / qf)) take(axpy(e, x, f));
        } catch (const Undecided&) {
        }
      } else if (!be.is_zero()) {
        take(axpy(e, -qe / be, f));
      }
    }
  Field F = basis.empty() ? Field() : basis[0][0].field();
  if (out.size() < want && !basis.empty() && F.is_finite() && basis.size() >= 3) {
    std::mt19937_64 rng(7);
    for (int tries = 0; tries < 400 && out.size() < want; ++tries) {
      Vec v(basis[0].size(), F.zero());
      for (auto& b : basis) v = axpy(v, F.random(rng), b);
      Vec w = basis[rng() % basis.size()];
      FieldElem qv = d4_quad(v), qw = d4_quad(w), bw = d4_form(v, w);
      if (qw.is_zero()) continue;
      for (auto& [x, m] : quadratic_roots(bw / qw, qv / qw)) take(axpy(v, x, w));
    }
  }
  return out;
}

// Complete a totally singular v1..v4 to a standard basis.
std::optional<std::vector<Vec>> hyperbolic_completion(const std::vector<Vec>& v) {
  Field F = v[0][0].field();
  std::vector<Vec> w(4);
  for (int i = 0; i < 4; ++i) {
    std::vector<Vec> rows;
    Vec rhs;
    for (int j = 0; j < 4; ++j) {
      Vec row(8);
      for (int s = 0; s < 8; ++s) row[s] = v[j][7 - s];
      rows.push_back(row);
      rhs.push_back(i == j ? F.one() : F.zero());
    }
    for (int k = 0; k < i; ++k) {
      Vec row(8);
      for (int s = 0; s < 8; ++s) row[s] = w[k][7 - s];
      rows.push_back(row);
      rhs.push_back(F.zero());
    }
    auto sol = solve_affine(F, rows, rhs, 8);
    if (!sol) return std::nullopt;
    Vec p = sol->part;
    w[i] = axpy(p, -d4_quad(p), v[i]);
  }
  std::vector<Vec> out(v.begin(), v.end());
  for (int i = 3; i >= 0; --i) out.push_back(w[i]);
  if (!is_standard_basis(out)) return std::nullopt;
  return out;
}

// Shape-constrained completion: each new v_idx has support on the given 1-based positions.
std::optional<std::vector<Vec>> shape_completion(std::map<int, Vec> known, const std::vector<std::pair<int, std::vector<int>>>& shapes,
                                                 std::vector<std::string>& notes) {
  Field F = known.begin()->second[0].field();
  for (auto& [idx, supp] : shapes) {
    std::vector<Vec> rows;
    Vec rhs;
    for (auto& [j, v] : known) {
      Vec row;
      for (int s : supp) row.push_back(v[8 - s]);
      rows.push_back(row);
      rhs.push_back(j == 9 - idx ? F.one() : F.zero());
    }
    auto sol = solve_affine(F, rows, rhs, (int)supp.size());
    if (!sol) return std::nullopt;
    auto mk = [&](const Vec& co) {
      Vec x(8, F.zero());
      for (size_t k = 0; k < supp.size(); ++k) x[supp[k] - 1] = co[k];
      return x;
    };
    Vec p = mk(sol->part);
    std::optional<Vec> found;
    if (d4_quad(p).is_zero()) found = p;
    for (auto& nv : sol->null) {
      if (found) break;
      Vec n = mk(nv);
      FieldElem qp = d4_quad(p), qn = d4_quad(n), b = d4_form(p, n);
      if (!qn.is_zero()) {
        auto roots = quadratic_roots(b / qn, qp / qn);
        if (!roots.empty()) {
          if (roots.size() > 1 || roots[0].second > 1) notes.push_back("completion of v" + std::to_string(idx) + " not unique");
          found = axpy(p, roots[0].first, n);
        }
      } else if (!b.is_zero()) {
        found = axpy(p, -qp / b, n);
      }
    }
    if (!found) return std::nullopt;
    known[idx] = *found;
  }
  std::vector<Vec> out;
  for (int i = 1; i <= 8; ++i) {
    if (!known.count(i)) return std::nullopt;
    out.push_back(known[i]);
  }
  if (!is_standard_basis(out)) return std::nullopt;
  return out;
}

bool lower_triangular(const Mat& m) {
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Reduction inside the adjoint D4 group; cur = k^{-1} beta k throughout.
struct Reducer {
  GroupPtr G;
  GroupElt cur, k;
  Field F;

  void conj_by(const GroupElt& x) {
    cur = cur.conjugate(x);
    k = k * x;
  }
  FieldElem coef(const char* r) const { return cur.u2()[D(r)]; }
  FieldElem coef(int r) const { return cur.u2()[r]; }
  FieldElem coef_after(int by, const FieldElem& s, int target) const {
    return cur.conjugate(GroupElt::x(G, by, s)).u2()[target];
  }
  // conjugate by x_by(s) so that the target coefficient becomes value (affine in s)
  bool kill(int by, int target, const FieldElem& value) {
    if (coef(target) == value) return true;
    FieldElem c0 = coef(target), c1 = coef_after(by, F.one(), target);
    if (c1 == c0) return false;
    FieldElem s = (value - c0) / (c1 - c0);
    GroupElt x = GroupElt::x(G, by, s);
    GroupElt next = cur.conjugate(x);
    if (next.u2()[target] != value) return false;
    cur = next;
    k = k * x;
    return true;
  }
  bool kill(const char* by, const char* target) { return kill(D(by), D(target), F.zero()); }
  // h^{-1} x_a(b) h = x_a(b / chi(a))
  void torus(const std::vector<FieldElem>& chi) { conj_by(GroupElt::h_chi(G, chi)); }
  std::set<int> support() const {
    std::set<int> s;
    for (int r = 0; r < (int)cur.u2().size(); ++r)
      if (!cur.u2()[r].is_zero()) s.insert(r);
    return s;
  }
};

GroupElt product(GroupPtr G, const std::vector<std::pair<const char*, FieldElem>>& fs) {
  GroupElt g = GroupElt::identity(G);
  for (auto& [r, v] : fs) g.rmul_x(D(r), v);
  return g;
}

bool torus_trivial(const GroupElt& g) {
  for (auto& t : g.h())
    if (!t.is_one()) return false;
  return true;
}

// x_{0100}(a) x_{1110}(1) x_{1101}(1) x_{0111}(1) after scaling the three perpendicular partners to 1
bool finish_form1(Reducer& R, Classification& out) {
  FieldElem b2 = R.coef("1110"), b3 = R.coef("1101"), b4 = R.coef("0111");
  if (b2.is_zero() || b3.is_zero() || b4.is_zero()) return false;
  R.torus({b2 / b4, b4 * b3 / b2, b2 / b3, R.F.one()});
  FieldElem a = R.coef("0100");
  if (a.is_zero()) return false;
  FieldElem one = R.F.one();
  GroupElt C = product(R.G, {{"0100", a}, {"1110", one}, {"1101", one}, {"0111", one}});
  if (R.cur != C) return false;
  out.cls = 1;
  out.param = a;
  out.canonical = C;
  out.canonical_text = "x[(0100)](" + a.str() + ") x[(1110)](1) x[(1101)](1) x[(0111)](1)";
  return true;
}

bool reduce_unipotent(Reducer& R, Classification& out) {
  const RootSystem& d4 = d4_system();
  auto in = [&](std::initializer_list<const char*> xs) {
    std::set<int> allowed;
    for (auto* x : xs) allowed.insert(D(x));
    for (int r : R.support())
      if (!allowed.count(r)) return false;
    return true;
  };
  if (in({"1000", "0010", "0001", "1211"})) {
    R.conj_by(GroupElt::n_word(R.G, {2}).inverse());
    out.notes.push_back("moved perpendicular set X1 to X2 by n_2");
  }
  if (in({"1100", "0110", "0101", "1111"})) {
    R.conj_by(GroupElt::n_word(R.G, {1}).inverse());
    out.notes.push_back("moved perpendicular set X2 to X3 by n_1");
    return finish_form1(R, out);
  }
  for (int i : {1, 3, 4})
    if (!R.coef(d4.simple(i)).is_zero()) {
      out.notes.push_back("unipotent part not in U_A");
      return false;
    }
  if (R.coef("0100").is_zero()) return false;
  if (!R.kill("1000", "1100") || !R.kill("0010", "0110") || !R.kill("0001", "0101")) return false;
  FieldElem b0 = R.coef("1111"), b2 = R.coef("1110"), b3 = R.coef("1101"), b4 = R.coef("0111");
  if (b0.is_zero()) {
    if (!R.kill("1100", "1211")) return false;
    return finish_form1(R, out);
  }
  if (b2.is_zero() || b3.is_zero() || b4.is_zero()) return false;
  R.torus({b0 / b4, b2 * b3 * b4 / (b0 * b0), b0 / b3, b0 / b2});
  FieldElem a = R.coef("0100");
  FieldElem one = R.F.one();
  GroupElt C = product(R.G, {{"1111", one}, {"0100", a}, {"1110", one}, {"1101", one}, {"0111", one}});
  if (!R.kill(D("0100"), D("1211"), C.u2()[D("1211")])) return false;
  if (R.cur != C) return false;
  out.cls = 2;
  out.param = a;
  out.canonical = C;
  out.canonical_text = "x[(1111)](1) x[(0100)](" + a.str() + ") x[(1110)](1) x[(1101)](1) x[(0111)](1)";
  return true;
}

bool reduce_with_torus(Reducer& R, Classification& out) {
  const RootSystem& d4 = d4_system();
  auto chars = R.G->characters(R.cur.h());
  for (int r = 0; r < d4.num_positive(); ++r)
    if (!R.coef(r).is_zero() && !chars[r].is_one())
      if (!R.kill(r, r, R.F.zero())) return false;
  auto S = R.support();
  GroupElt h = GroupElt::h_chi(R.G, R.cur.h());
  for (int r = 0; r < d4.num_positive(); ++r) {
    for (bool inv : {false, true}) {
      FieldElem c = out.z ? *out.z : -R.F.one();
      if (inv) c = c.inv();
      if (h != GroupElt::h_coroot(R.G, r, c)) continue;
      if (S.empty()) {
        out.cls = 3;
        out.param = c;
        out.canonical = h;
        out.canonical_text = "h[" + d4.format(r) + "](" + c.str() + ")";
        return true;
      }
      if (S == std::set<int>{r} && c == -R.F.one()) {
        GroupElt C = GroupElt::x(R.G, r, R.F.one()) * h;
        std::vector<FieldElem> chi(4, R.F.one());
        // scale only along a coweight dual to one simple root in the support of r
        int j = 0;
        while (d4.coeffs(r)[j] == 0) ++j;
        chi[j] = (R.coef(r) / C.u2()[r]).pow(1);
        if (d4.coeffs(r)[j] != 1) return false;
        R.torus(chi);
        if (R.cur != C) return false;
        out.cls = 4;
        out.canonical = C;
        out.canonical_text = "x[" + d4.format(r) + "](1) h[" + d4.format(r) + "](-1)";
        return true;
      }
    }
  }
  return false;
}

bool reduce(GroupPtr G, const Mat& conj, Classification& out) {
  Reducer R{G, d4_group_of_borel(G, conj), GroupElt::identity(G), G->F};
  bool ok = torus_trivial(R.cur) ? reduce_unipotent(R, out) : reduce_with_torus(R, out);
  if (!ok) return false;
  out.k = R.k;
  GroupElt beta = d4_group_of_borel(G, conj);
  out.verified = out.k.inverse() * beta * out.k == out.canonical;
  return out.verified;
}

}  // namespace

std::optional<std::vector<Vec>> stable_standard_basis(const Mat& theta) {
  Field F = theta.field();
  std::vector<FieldElem> eig{F.one()};
  if (F.characteristic() != 2) eig.push_back(-F.one());
  UPoly cp = char_poly(theta);
  // eigenvalues other than +-1 come from the quadratic factors; try all field elements when small
  if (F.is_finite() && *F.order() <= 4096) {
    for (auto& x : F.elements()) {
      if (x.is_zero() || x.is_one() || x == -F.one()) continue;
      FieldElem v = F.zero();
      for (int k = (int)cp.size() - 1; k >= 0; --k) v = v * x + cp[k];
      if (v.is_zero()) eig.push_back(x);
    }
  }
  std::function<std::optional<std::vector<Vec>>(std::vector<Vec>)> rec = [&](std::vector<Vec> flag) -> std::optional<std::vector<Vec>> {
    if (flag.size() == 4) return hyperbolic_completion(flag);
    int k = (int)flag.size();
    for (auto& lam : eig) {
      // unknowns: v (8) and mu (k): v (theta - lam) - sum mu_j flag_j = 0, (v, flag_j) = 0
      Mat A = theta - Mat::identity(F, 8).scaled(lam);
      std::vector<Vec> rows;
      Vec rhs;
      for (int col = 0; col < 8; ++col) {
        Vec row(8 + k, F.zero());
        for (int i = 0; i < 8; ++i) row[i] = A(i, col);
        for (int j = 0; j < k; ++j) row[8 + j] = -flag[j][col];
        rows.push_back(row);
        rhs.push_back(F.zero());
      }
      for (int j = 0; j < k; ++j) {
        Vec row(8 + k, F.zero());
        for (int i = 0; i < 8; ++i) row[i] = flag[j][7 - i];
        rows.push_back(row);
        rhs.push_back(F.zero());
      }
      auto sol = solve_affine(F, rows, rhs, 8 + k);
      if (!sol) continue;
      std::vector<Vec> basis;
      for (auto& n : sol->null) basis.emplace_back(n.begin(), n.begin() + 8);
      for (auto& v : isotropic_candidates(basis, flag, 3)) {
        auto next = flag;
        next.push_back(v);
        if (auto done = rec(next)) return done;
      }
    }
    return std::nullopt;
  };
  return rec({});
}

Classification classify_theta(const ThetaParams& p) {
  Classification out;
  Field F = p.a.field();
  const auto& [a, b, c, t1, t2, t3, t4] = p;
  Mat theta = build_theta_E74(p);
  UPoly pp = theta_p(p);
  auto roots = quadratic_roots(pp[1], pp[0]);
  if (roots.empty()) {
    out.cls = 0;
    out.route = "p irreducible";
    out.verified = true;
    return out;
  }
  FieldElem z = roots[0].first;
  out.z = z;
  GroupPtr G = ChevGroup::create(d4_system(), F);
  FieldElem one = F.one(), two = F.from_int(2), zero = F.zero();

  auto attempt = [&](const std::vector<Vec>& basis, const std::string& route) {
    if (!is_standard_basis(basis)) return false;
    Mat g = from_rows(basis);
    Mat conj = g * theta * g.inverse();
    if (!lower_triangular(conj)) {
      out.notes.push_back(route + ": conjugate not lower triangular");
      return false;
    }
    Classification trial = out;
    trial.g = g;
    trial.route = route;
    if (!reduce(G, conj, trial)) {
      out.notes.push_back(route + ": reduction to a normal form failed");
      return false;
    }
    out = trial;
    return true;
  };

  FieldElem T = t1 * t2 * t3 * t4;
  bool z_is_one = z.is_one(), z_is_minus = !z_is_one && z == -one;
  if (z_is_one) {
    FieldElem q = t2 * b * b - c * c, r = t1 * c * c - F.from_int(4);
    std::vector<Vec> v12 = {
        {-(t1 * t2 * t2 * t3.pow(3) * t4 * t4 * c), t1 * t2 * t2 * t3 * t3 * t4 * b, -(t2 * t2 * t3 * t3 * t4 * a), two * t2 * t3 * t4,
         two * t2 * t3 * t3 * t4, t2 * t3 * t4 * a, t2 * t3 * t4 * (a * c - b), c},
        {-(two * t1 * t2 * t2 * t3.pow(3) * t4 * t4), t1 * t2 * t2 * t3 * t3 * t4 * a, t1 * t2 * t2 * t3 * t3 * t4 * (b - a * c), T * c,
         T * t3 * c, T * b, t2 * t3 * t4 * a, two}};
    if (!q.is_zero() && !r.is_zero()) {
      std::map<int, Vec> known = {{1, v12[0]},
                                  {2, v12[1]},
                                  {3, {zero, zero, zero, zero, T * t3 * c, T * b, t2 * t3 * t4 * a, two}},
                                  {4, {t1 * t2 * t3 * t3 * t4 * c, -(t1 * t2 * t3 * b), t2 * t3 * a, -two, zero, zero, zero, zero}}};
      if (auto basis = shape_completion(known, {{8, {3, 4}}, {7, {7, 8}}, {6, {3, 4, 7, 8}}, {5, {3, 4, 7, 8}}}, out.notes))
        if (attempt(*basis, "z=1, q,r nonzero")) return out;
    } else if (q.is_zero()) {
      std::vector<FieldElem> t0s;
      if (!b.is_zero())
        t0s.push_back(c / b);
      else if (auto s = sqrt_of(t2))
        t0s.push_back(*s);
      if (!t0s.empty()) t0s.push_back(-t0s[0]);
      for (auto& t0 : t0s) {
        if (a == two / t0) {
          FieldElem u = (t0.pow(3) * t1 * t3 * t3 * t4).inv();
          std::vector<Vec> basis = {
              {-(t0.pow(4) * t1 * t3.pow(3) * t4 * t4), t0.pow(3) * t1 * t3 * t3 * t4, zero, zero, zero, zero, t0 * t3 * t4, one},
              {zero, zero, -(t0 * t0 * t3), t0, t0 * t3, one, zero, zero},
              {zero, zero, zero, zero, t0 * t3, one, zero, zero},
              {zero, zero, zero, zero, zero, zero, t0 * t3 * t4, one},
              {one, zero, zero, zero, zero, zero, -u, zero},
              {zero, zero, one, zero, -t0.inv(), zero, zero, zero},
              {zero, zero, zero, zero, t0.inv(), zero, zero, zero},
              {zero, zero, zero, zero, zero, zero, u, zero}};
          if (attempt(basis, "z=1, q=0, a=2/t0")) return out;
        } else if (a == (t1 * c * c - two) / t0 && !r.is_zero() && !c.is_zero()) {
          FieldElem ri = r.inv(), s = (t0 * t0 * t3 * t3 * t4).inv();
          FieldElem e = t1 * c * c - one;
          std::vector<Vec> basis = {
              v12[0],
              v12[1],
              {-(t0 * t1 * t3 * t4 * c), zero, one, (t0 * t3).inv(), zero, zero, zero, zero},
              {-(t0 * t3 * t4 * e), one, zero, c / (t0 * t3), zero, zero, zero, zero},
              {-(t0.pow(3) * t1 * t3 * t3 * t4 * e), zero, t0 * t0 * t1 * t3 * c, zero, zero, zero, one, zero},
              {t0.pow(3) * t1 * t3 * t3 * t4 * c * (t1 * c * c - two), -(t0 * t0 * t1 * t3 * c), zero, -t0, zero, one, zero, zero},
              {-(two * ri), zero, zero, s * c * ri, zero, zero, zero, zero},
              {t1 * c * ri, zero, zero, -(two * s * ri), zero, zero, zero, zero}};
          if (attempt(basis, "z=1, q=0, a=(t1c^2-2)/t0")) return out;
        }
      }
    } else {
      FieldElem t0 = two / c;  // r = 0 forces c != 0 and t1 = t0^2
      FieldElem i0 = t0.inv(), u = (t2 * t3).inv(), w = (t2 * t3 * t4).inv();
      std::vector<Vec> basis = {
          {-(t0 * t2 * t3 * t3 * t4), zero, zero, one, t3, a, i0 * a, i0 * w},
          {zero, t0, -one, zero, zero, -u, -(i0 * u), zero},
          {zero, zero, zero, zero, t0 * t2 * t3 * t3 * t4, zero, zero, one},
          {zero, zero, zero, zero, zero, t0, one, zero},
          {zero, one, zero, zero, -(i0 * a), -(i0 * u), zero, zero},
          {one, zero, zero, zero, -(i0 * w), zero, zero, zero},
          {zero, zero, zero, zero, zero, -one, zero, zero},
          {zero, zero, zero, zero, one, zero, zero, zero}};
      if (attempt(basis, "z=1, r=0")) return out;
    }
  } else if (z_is_minus) {
    FieldElem s = t2 * b * b + c * c;
    if (!s.is_zero() && !c.is_zero()) {
      FieldElem i1 = t1.inv(), i2 = t2.inv(), i3 = t3.inv(), i4 = t4.inv();
      std::map<int, Vec> known = {
          {1, {-(t1 * t2 * t3 * t3 * t4 * c), t1 * t2 * t3 * b, -(t2 * t3 * a), zero, zero, a, a * c - b, i2 * i3 * i4 * c}},
          {2, {zero, i3 * i4 * a, i3 * i4 * (b - a * c), i2 * i3 * i3 * i4 * c, -(i2 * i3 * i4 * c), -(i2 * i3 * i3 * i4 * b),
               -(i1 * i2 * i3 * i3 * i4 * a), zero}},
          {3, {t3 * t4 * s * c, -(s * b), i1 * s * a, zero, zero, i1 * i2 * i3 * s * a, i1 * i2 * i3 * s * (a * c - b),
               i1 * i2 * i2 * i3 * i3 * i4 * s * c}},
          {4, {zero, s, -(i1 * t2 * a * b) - c.pow(3), i3 * b * c * c - i1 * i3 * a * c, b * c * c - i1 * a * c,
               i3 * b * b * c - i1 * i3 * a * b, i1 * i2 * i3 * s, zero}}};
      if (auto basis = shape_completion(known, {{8, {3, 4, 8}}, {7, {4, 7, 8}}, {6, {3, 4, 8}}, {5, {4, 7, 8}}}, out.notes))
        if (attempt(*basis, "z=-1, s,c nonzero")) return out;
    }
  } else {
    FieldElem zi = z.inv(), y = z + one, yp = zi + one;
    FieldElem P = t1 * t2 * t2 * t3 * t3 * t4, Q2 = t2 * t3 * t4;
    Vec v1 = {-(P * t3 * t4 * c), P * b, -(t2 * t2 * t3 * t3 * t4 * a), Q2 * y, Q2 * t3 * yp, Q2 * a, Q2 * (a * c - b), c};
    Vec v2 = {-(P * t3 * t4 * c), P * b, -(t2 * t2 * t3 * t3 * t4 * a), Q2 * yp, Q2 * t3 * y, Q2 * a, Q2 * (a * c - b), c};
    Vec v3 = {-(P * t3 * t4 * y), P * a, P * (b - a * c), T * c, c * T * t3 * z, T * b * z, Q2 * a * z, y};
    Vec v4 = {-(P * t3 * t4 * yp), P * a, P * (b - a * c), T * c, c * T * t3 * zi, T * b * zi, Q2 * a * zi, yp};
    auto kz = theta.left_eigenspace(z), kzi = theta.left_eigenspace(zi);
    auto dual = [&](const std::vector<Vec>& A, const std::vector<Vec>& B) -> std::optional<std::vector<Vec>> {
      // B' spanning B with (A_i, B'_j) = delta_ij
      if (A.size() != 2 || B.size() != 2) return std::nullopt;
      Mat Gm(F, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Gm(i, j) = d4_form(A[i], B[j]);
      if (Gm.det().is_zero()) return std::nullopt;
      Mat Gi = Gm.inverse();
      std::vector<Vec> out2;
      for (int j = 0; j < 2; ++j) out2.push_back(axpy(scale(B[0], Gi(0, j)), Gi(1, j), B[1]));
      return out2;
    };
    auto L2 = dual({v1, v4}, {v2, v3});
    auto C = dual(kzi, kz);
    if (L2 && C) {
      std::vector<Vec> basis = {v1, kzi[0], (*L2)[1], (*C)[1], kzi[1], v4, (*C)[0], (*L2)[0]};
      if (is_standard_basis(basis)) {
        Mat g = from_rows(basis);
        Mat conj = g * theta * g.inverse();
        Mat diag = Mat::diag({one, zi, one, z, zi, one, z, one});
        if (conj == diag) {
          out.route = "z!=+-1 eigenspaces";
          out.g = g;
          out.cls = 3;
          out.param = z;
          out.k = GroupElt::identity(G);
          out.canonical = GroupElt::h_coroot(G, D("0110"), z);
          out.canonical_text = "h[(0110)](" + z.str() + ")";
          out.verified = d4_group_of_borel(G, conj) == out.canonical;
          if (out.verified) return out;
        }
      }
    }
    out.notes.push_back("z!=+-1: displayed fixed vectors did not give a standard basis");
  }
  if (auto basis = stable_standard_basis(theta))
    if (attempt(*basis, "generic stable flag")) return out;
  out.cls = -1;
  out.route = "unresolved";
  return out;
}

}  // namespace chevkit
