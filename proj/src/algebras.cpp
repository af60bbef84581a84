#include "chevkit/algebras.hpp"

#include <stdexcept>

namespace chevkit {

namespace {

void same_len(const AlgElem& x, const AlgElem& y) {
  if (x.size() != y.size()) throw std::invalid_argument("algebra elements of different dimension");
}

}  // namespace

CompAlg CompAlg::base(Field F) {
  CompAlg A;
  A.F_ = F;
  A.dim_ = 1;
  return A;
}

CompAlg CompAlg::cayley_dickson(const CompAlg& A, const FieldElem& primitive) {
  if (A.kind_ != Kind::CayleyDickson) throw std::invalid_argument("doubling needs a Cayley-Dickson algebra");
  if (A.dim_ > 4) throw std::invalid_argument("doubling beyond dimension 8");
  if (primitive.is_zero()) throw std::invalid_argument("zero primitive element");
  CompAlg B = A;
  B.dim_ = 2 * A.dim_;
  B.prims_.push_back(primitive);
  return B;
}

CompAlg CompAlg::zorn(Field F) {
  CompAlg A;
  A.F_ = F;
  A.kind_ = Kind::Zorn;
  A.dim_ = 8;
  return A;
}

CompAlg CompAlg::inseparable(const FieldElem& l1, const FieldElem& l2) {
  if (l1.field().characteristic() != 2) throw std::invalid_argument("inseparable quaternions need characteristic 2");
  if (!inseparable_parameters_ok(l1, l2)) throw std::invalid_argument("l1, l2 do not satisfy the non-square conditions");
  CompAlg A;
  A.F_ = l1.field();
  A.kind_ = Kind::Inseparable;
  A.dim_ = 4;
  A.l1_ = l1;
  A.l2_ = l2;
  return A;
}

bool inseparable_parameters_ok(const FieldElem& l1, const FieldElem& l2) {
  Field F = l1.field();
  if (F.characteristic() != 2 || F.kind() != FieldKind::RationalFunction || F.variables().size() < 2) return false;
  // squares have even degree in every variable; K^2 + l1 K^2 has even degree in the second variable
  return l1 == F.var(0) && l2 == F.var(1);
}

std::string CompAlg::tag() const {
  switch (kind_) {
    case Kind::Zorn:
      return "zorn";
    case Kind::Inseparable:
      return "inseparable(" + l1_.str() + "," + l2_.str() + ")";
    default: {
      std::string s = "cd[";
      for (size_t i = 0; i < prims_.size(); ++i) s += (i ? "," : "") + prims_[i].str();
      return s + "]";
    }
  }
}

AlgElem CompAlg::zero() const { return AlgElem(dim_, F_.zero()); }

AlgElem CompAlg::scalar(const FieldElem& c) const {
  AlgElem x = zero();
  x[0] = c;
  if (kind_ == Kind::Zorn) x[7] = c;
  return x;
}

AlgElem CompAlg::one() const { return scalar(F_.one()); }

AlgElem CompAlg::random(std::mt19937_64& rng) const {
  AlgElem x(dim_);
  for (auto& c : x) c = F_.random(rng);
  return x;
}

AlgElem CompAlg::add(const AlgElem& x, const AlgElem& y) const {
  same_len(x, y);
  AlgElem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

AlgElem CompAlg::sub(const AlgElem& x, const AlgElem& y) const {
  same_len(x, y);
  AlgElem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

AlgElem CompAlg::scale(const FieldElem& c, const AlgElem& x) const {
  AlgElem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
  return z;
}

AlgElem CompAlg::cd_conj(const AlgElem& x, int level) const {
  if (level == 0) return x;
  size_t h = x.size() / 2;
  AlgElem a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  AlgElem out = cd_conj(a, level - 1);
  for (auto& c : b) out.push_back(-c);
  return out;
}

AlgElem CompAlg::cd_mul(const AlgElem& x, const AlgElem& y, int level) const {
  if (level == 0) return {x[0] * y[0]};
  size_t h = x.size() / 2;
  AlgElem a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  AlgElem c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const FieldElem& m = prims_[level - 1];
  AlgElem first = cd_mul(a, c, level - 1);
  AlgElem t = cd_mul(d, cd_conj(b, level - 1), level - 1);
  for (size_t i = 0; i < h; ++i) first[i] += m * t[i];
  AlgElem second = cd_mul(cd_conj(a, level - 1), d, level - 1);
  AlgElem u = cd_mul(c, b, level - 1);
  for (size_t i = 0; i < h; ++i) second[i] += u[i];
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

AlgElem CompAlg::mul(const AlgElem& x, const AlgElem& y) const {
  same_len(x, y);
  if ((int)x.size() != dim_) throw std::invalid_argument("element has the wrong dimension");
  if (kind_ == Kind::CayleyDickson) return cd_mul(x, y, (int)prims_.size());
  if (kind_ == Kind::Inseparable) {
    const FieldElem &l1 = l1_, &l2 = l2_;
    return {x[0] * y[0] + l1 * x[1] * y[1] + l2 * x[2] * y[2] + l1 * l2 * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + l2 * x[2] * y[3] + l2 * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + l1 * x[1] * y[3] + l1 * x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0]};
  }
  // Zorn: a, lower w, upper v, b
  const FieldElem &a = x[0], &b = x[7], &a2 = y[0], &b2 = y[7];
  FieldElem w[3] = {x[1], x[2], x[3]}, v[3] = {x[4], x[5], x[6]};
  FieldElem w2[3] = {y[1], y[2], y[3]}, v2[3] = {y[4], y[5], y[6]};
  auto dot = [](const FieldElem* p, const FieldElem* q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };
  auto cross = [](const FieldElem* p, const FieldElem* q, int i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    return p[j] * q[k] - p[k] * q[j];
  };
  AlgElem z(8);
  z[0] = a * a2 + dot(v, w2);
  z[7] = b * b2 + dot(w, v2);
  for (int i = 0; i < 3; ++i) {
    z[4 + i] = a * v2[i] + b2 * v[i] - cross(w, w2, i);
    z[1 + i] = a2 * w[i] + b * w2[i] + cross(v, v2, i);
  }
  return z;
}

AlgElem CompAlg::conj(const AlgElem& x) const {
  if (kind_ == Kind::CayleyDickson) return cd_conj(x, (int)prims_.size());
  if (kind_ == Kind::Inseparable) return x;
  AlgElem z(8);
  z[0] = x[7];
  z[7] = x[0];
  for (int i = 1; i <= 6; ++i) z[i] = -x[i];
  return z;
}

bool CompAlg::is_scalar(const AlgElem& x) const {
  for (int i = 1; i < dim_; ++i) {
    if (kind_ == Kind::Zorn && i == 7) continue;
    if (!x[i].is_zero()) return false;
  }
  return kind_ != Kind::Zorn || x[7] == x[0];
}

FieldElem CompAlg::as_scalar(const AlgElem& x) const {
  if (!is_scalar(x)) throw std::logic_error("expected a scalar algebra element");
  return x[0];
}

FieldElem CompAlg::norm(const AlgElem& x) const { return as_scalar(mul(x, conj(x))); }

FieldElem CompAlg::trace(const AlgElem& x) const { return as_scalar(add(x, conj(x))); }

AlgElem CompAlg::inverse(const AlgElem& x) const {
  FieldElem n = norm(x);
  if (n.is_zero()) throw ZeroDivisor("element of norm zero has no inverse");
  return scale(n.inv(), conj(x));
}

bool CompAlg::eq(const AlgElem& x, const AlgElem& y) const { return x == y; }

AlgElem inseparable_to_zorn(const CompAlg& H, const CompAlg& O, const AlgElem& x) {
  (void)O;
  if (H.kind() != CompAlg::Kind::Inseparable) throw std::invalid_argument("expected the inseparable algebra");
  // recover l1, l2 from products of basis elements: e1^2 = l1, e2^2 = l2
  AlgElem e1 = H.zero(), e2 = H.zero();
  e1[1] = H.field().one();
  e2[2] = H.field().one();
  FieldElem l1 = H.mul(e1, e1)[0], l2 = H.mul(e2, e2)[0];
  return {x[0], l1 * x[1], l2 * x[2], x[3], x[1], x[2], l1 * l2 * x[3], x[0]};
}

ProjPoint ProjPoint::of(std::vector<FieldElem> v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      FieldElem s = v[i].inv();
      for (size_t j = i; j < v.size(); ++j) v[j] *= s;
      return ProjPoint{std::move(v)};
    }
  throw std::invalid_argument("the zero vector is not a projective point");
}

bool ProjPoint::operator==(const ProjPoint& o) const { return c == o.c; }

std::string ProjPoint::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + ")";
}

ProjPoint veronese(const CompAlg& A, const AlgElem& x, const AlgElem& y, const AlgElem& z) {
  std::vector<FieldElem> v{A.norm(x), A.norm(y), A.norm(z)};
  for (const AlgElem& e : {A.mul(y, A.conj(z)), A.mul(z, A.conj(x)), A.mul(x, A.conj(y))})
    v.insert(v.end(), e.begin(), e.end());
  return ProjPoint::of(std::move(v));
}

ProjPoint veronese_affine(const CompAlg& A, const AlgElem& X, const AlgElem& Y) {
  std::vector<FieldElem> v{A.norm(X), A.norm(Y), A.field().one()};
  for (const AlgElem& e : {Y, A.conj(X), A.mul(X, A.conj(Y))}) v.insert(v.end(), e.begin(), e.end());
  return ProjPoint::of(std::move(v));
}

E6Coords e6_split(const CompAlg& A, const std::vector<FieldElem>& v) {
  int d = A.dim();
  if ((int)v.size() != 3 + 3 * d) throw std::invalid_argument("coordinate count must be 3 + 3 dim");
  E6Coords e;
  for (int i = 0; i < 3; ++i) {
    e.x[i] = v[i];
    e.X[i].assign(v.begin() + 3 + i * d, v.begin() + 3 + (i + 1) * d);
  }
  return e;
}

std::vector<FieldElem> e6_join(const E6Coords& e) {
  std::vector<FieldElem> v{e.x[0], e.x[1], e.x[2]};
  for (int i = 0; i < 3; ++i) v.insert(v.end(), e.X[i].begin(), e.X[i].end());
  return v;
}

int veronese_violations(const CompAlg& A, const std::vector<FieldElem>& v) {
  E6Coords e = e6_split(A, v);
  int bad = 0;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    AlgElem lhs = A.mul(e.X[i], A.conj(e.X[i]));
    AlgElem want = A.scalar(e.x[j] * e.x[k]);
    // the scalar equation x_j x_k = X_i conj X_i
    if (!(A.is_scalar(lhs) && lhs[0] == want[0])) ++bad;
    AlgElem prod = A.mul(e.X[j], e.X[k]);
    AlgElem rhs = A.scale(e.x[i], A.conj(e.X[i]));
    for (int c = 0; c < A.dim(); ++c)
      if (prod[c] != rhs[c]) ++bad;
  }
  return bad;
}

FieldElem cubic_C(const CompAlg& O, const std::vector<FieldElem>& v) {
  E6Coords e = e6_split(O, v);
  FieldElem r = e.x[0] * e.x[1] * e.x[2];
  for (int i = 0; i < 3; ++i) r -= e.x[i] * O.norm(e.X[i]);
  AlgElem t1 = O.mul(O.mul(e.X[0], e.X[1]), e.X[2]);
  AlgElem t2 = O.mul(O.conj(e.X[2]), O.mul(O.conj(e.X[1]), O.conj(e.X[0])));
  return r + O.as_scalar(O.add(t1, t2));
}

Mat aut_A(const FieldElem& l1, const FieldElem& l2, const FieldElem& a, const FieldElem& b, const FieldElem& c,
          const FieldElem& d) {
  Field F = a.field();
  FieldElem one = F.one(), a1 = one + a, L = l1 * l2, i1 = l1.inv(), i2 = l2.inv();
  std::vector<std::vector<FieldElem>> rows = {
      {a1, l1 * b, l2 * c, d, b, c, L * d, a},
      {b, a1, l2 * d, i1 * c, i1 * a, d, l2 * c, b},
      {c, l1 * d, a1, i2 * b, d, i2 * a, l1 * b, c},
      {L * d, L * c, L * b, a1, l2 * c, l1 * b, L * a, L * d},
      {l1 * b, l1 * a, L * d, c, a1, l1 * d, L * c, l1 * b},
      {l2 * c, L * d, l2 * a, b, l2 * d, a1, L * b, l2 * c},
      {d, c, b, i1 * i2 * a, i1 * c, i2 * b, a1, d},
      {a, l1 * b, l2 * c, d, b, c, L * d, a1},
  };
  Mat m(F, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  return m;
}

bool is_admissible(const FieldElem& l1, const FieldElem& l2, const FieldElem& a, const FieldElem& b,
                   const FieldElem& c, const FieldElem& d) {
  return (a + a * a + l1 * b * b + l2 * c * c + l1 * l2 * d * d).is_zero();
}

AlgElem apply_row(const Mat& m, const AlgElem& x) { return m.apply(x); }

bool is_automorphism(const CompAlg& O, const Mat& m) {
  int n = O.dim();
  if (m.size() != n) return false;
  std::vector<AlgElem> e(n, O.zero()), im(n);
  for (int i = 0; i < n; ++i) {
    e[i][i] = O.field().one();
    im[i] = apply_row(m, e[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (O.mul(im[i], im[j]) != apply_row(m, O.mul(e[i], e[j]))) return false;
  return true;
}

std::vector<FieldElem> dpv_nu(const CompAlg& O, const FieldElem& l1, const FieldElem& l2, const FieldElem& l3,
                              const AlgElem& X1, const AlgElem& X2, const AlgElem& X3) {
  std::vector<FieldElem> v{O.field().one(), l1, l2, l3};
  auto put = [&](const AlgElem& x) { v.insert(v.end(), x.begin(), x.end()); };
  put(X1);
  put(X2);
  put(X3);
  FieldElem n1 = O.norm(X1), n2 = O.norm(X2), n3 = O.norm(X3);
  v.push_back(n1 - l2 * l3);
  v.push_back(n2 - l3 * l1);
  v.push_back(n3 - l1 * l2);
  put(O.sub(O.scale(l1, O.conj(X1)), O.mul(X2, X3)));
  put(O.sub(O.scale(l2, O.conj(X2)), O.mul(X3, X1)));
  put(O.sub(O.scale(l3, O.conj(X3)), O.mul(X1, X2)));
  AlgElem cub = O.add(O.mul(O.conj(X3), O.mul(O.conj(X2), O.conj(X1))), O.mul(O.mul(X1, X2), X3));
  v.push_back(l1 * n1 + l2 * n2 + l3 * n3 - O.as_scalar(cub) - l1 * l2 * l3);
  return v;
}

std::vector<FieldElem> dpv_blockwise(const CompAlg& O, const Mat& m, const std::vector<FieldElem>& v) {
  int d = O.dim();
  if ((int)v.size() != 8 + 6 * d) throw std::invalid_argument("expected 56 coordinates");
  std::vector<FieldElem> out(v.begin(), v.begin() + 4);
  auto block = [&](size_t at) {
    AlgElem x(v.begin() + at, v.begin() + at + d);
    AlgElem y = apply_row(m, x);
    out.insert(out.end(), y.begin(), y.end());
  };
  for (int i = 0; i < 3; ++i) block(4 + i * d);
  for (int i = 0; i < 3; ++i) out.push_back(v[4 + 3 * d + i]);
  for (int i = 0; i < 3; ++i) block(7 + 3 * d + i * d);
  out.push_back(v.back());
  return out;
}

}  // namespace chevkit
