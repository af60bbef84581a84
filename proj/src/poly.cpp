#include "chevkit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chevkit {

static int mono_deg(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_less(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

static bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MPoly MPoly::constant(Field base, int nvars, const FieldElem& c) {
  MPoly p(base, nvars);
  if (!c.is_zero()) p.t_.push_back({Mono(nvars, 0), c});
  return p;
}

MPoly MPoly::variable(Field base, int nvars, int i) {
  MPoly p(base, nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.t_.push_back({m, base.one()});
  return p;
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && mono_deg(t_[0].m) == 0);
}

int MPoly::total_degree() const { return t_.empty() ? -1 : mono_deg(t_.front().m); }

int MPoly::degree_in(int v) const {
  int d = -1;
  for (auto& t : t_) d = std::max<int>(d, t.m[v]);
  return d;
}

void MPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
  std::vector<Term> out;
  for (auto& t : t_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }),
            out.end());
  t_ = std::move(out);
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(base_, nv_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && mono_less(o.t_[j].m, t_[i].m))) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || mono_less(t_[i].m, o.t_[j].m)) {
      r.t_.push_back(o.t_[j++]);
    } else {
      FieldElem c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.t_.push_back({t_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(base_, nv_);
  if (t_.empty() || o.t_.empty()) return r;
  std::map<Mono, FieldElem> acc;
  for (auto& a : t_)
    for (auto& b : o.t_) {
      Mono m(nv_);
      for (int k = 0; k < nv_; ++k) m[k] = a.m[k] + b.m[k];
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), a.c * b.c);
      else
        it->second += a.c * b.c;
    }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, c});
  std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
  return r;
}

MPoly MPoly::scale(const FieldElem& c) const {
  if (c.is_zero()) return MPoly(base_, nv_);
  MPoly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

std::pair<MPoly, MPoly> MPoly::divmod(const MPoly& o) const {
  if (o.is_zero()) throw ZeroDivisor("polynomial division by zero");
  MPoly q(base_, nv_), r(base_, nv_), p = *this;
  const Term& lo = o.lead();
  FieldElem lc_inv = lo.c.inv();
  while (!p.is_zero()) {
    const Term& lp = p.lead();
    if (mono_divides(lo.m, lp.m)) {
      Term t{Mono(nv_), lp.c * lc_inv};
      for (int k = 0; k < nv_; ++k) t.m[k] = lp.m[k] - lo.m[k];
      MPoly tp(base_, nv_);
      tp.t_.push_back(t);
      q = q + tp;
      p = p - tp * o;
    } else {
      MPoly tp(base_, nv_);
      tp.t_.push_back(lp);
      r = r + tp;
      p = p - tp;
    }
  }
  return {q, r};
}

MPoly MPoly::divexact(const MPoly& o) const {
  auto [q, r] = divmod(o);
  if (!r.is_zero()) throw FieldError("inexact polynomial division");
  return q;
}

MPoly MPoly::monic() const {
  if (t_.empty()) return *this;
  return scale(lead().c.inv());
}

MPoly MPoly::coeff_in(int v, int d) const {
  MPoly r(base_, nv_);
  for (auto& t : t_)
    if (t.m[v] == d) {
      Term u = t;
      u.m[v] = 0;
      r.t_.push_back(u);
    }
  r.normalize();
  return r;
}

MPoly MPoly::mul_var_pow(int v, int d) const {
  MPoly r = *this;
  for (auto& t : r.t_) t.m[v] += d;
  return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    std::string c = t.c.str();
    bool neg = !c.empty() && c[0] == '-';
    bool compound = c.find_first_of("+-/", neg ? 1 : 0) != std::string::npos;
    if (compound) {
      c = "(" + c + ")";
      neg = false;
    }
    if (neg) c = c.substr(1);
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    bool unit = t.c.is_one() || (-t.c).is_one();
    bool has_var = mono_deg(t.m) > 0;
    bool need_star = false;
    if (!unit || !has_var) {
      os << c;
      need_star = true;
    } else if (!t.c.is_one() && !neg) {
      os << c;
      need_star = true;
    }
    for (int k = 0; k < nv_; ++k) {
      if (!t.m[k]) continue;
      if (need_star) os << "*";
      os << names[k];
      if (t.m[k] > 1) os << "^" << t.m[k];
      need_star = true;
    }
  }
  return os.str();
}

size_t MPoly::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (auto& t : t_) {
    for (auto e : t.m) h = h * 31 + e;
    h ^= t.c.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

int main_var(const MPoly& a, const MPoly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

MPoly content_in(const MPoly& p, int v) {
  MPoly c(p.base(), p.nvars());
  for (int d = p.degree_in(v); d >= 0; --d) {
    MPoly k = p.coeff_in(v, d);
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

MPoly prem(const MPoly& a, const MPoly& b, int v) {
  int db = b.degree_in(v);
  MPoly lcb = b.coeff_in(v, db);
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int d = r.degree_in(v);
    MPoly lcr = r.coeff_in(v, d);
    r = r * lcb - (lcr * b).mul_var_pow(v, d - db);
  }
  return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int v = main_var(a, b);
  if (v < 0) return MPoly::constant(a.base(), a.nvars(), a.base().one());
  MPoly ca = content_in(a, v), cb = content_in(b, v);
  MPoly c = gcd(ca, cb);
  MPoly pa = a.divexact(ca), pb = b.divexact(cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  MPoly g;
  while (true) {
    if (pb.degree_in(v) <= 0) {
      g = MPoly::constant(a.base(), a.nvars(), a.base().one());
      break;
    }
    MPoly r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = pb;
    pb = r.divexact(content_in(r, v));
  }
  if (g.degree_in(v) > 0) g = g.divexact(content_in(g, v));
  return (c * g).monic();
}

}  // namespace chevkit
