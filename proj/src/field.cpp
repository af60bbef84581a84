#include "chevkit/field.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "chevkit/poly.hpp"

namespace chevkit {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct BigRep {
  cpp_rational q;
  MPoly num, den;
};

struct FieldImpl {
  FieldKind kind;
  uint64_t p = 0;
  int k = 1;
  uint64_t q = 0;
  std::vector<uint64_t> min_poly;
  std::vector<uint32_t> exp_, log_, add_;
  uint64_t gen_index = 0;
  Field base;
  std::vector<std::string> vars;
  int cap = 8;
  std::string desc;
};

namespace {

std::mutex registry_mutex;
std::map<std::string, std::unique_ptr<FieldImpl>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldImpl>> r;
  return r;
}

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (unsigned __int128)a * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using Digits = std::vector<uint64_t>;

Digits to_digits(uint64_t idx, uint64_t p, int k) {
  Digits d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

uint64_t from_digits(const Digits& d, uint64_t p) {
  uint64_t idx = 0;
  for (int i = (int)d.size() - 1; i >= 0; --i) idx = idx * p + d[i];
  return idx;
}

// product of two residues of degree < k reduced by the monic minimal polynomial
Digits poly_mulmod(const Digits& a, const Digits& b, const std::vector<uint64_t>& m, uint64_t p) {
  int k = (int)m.size() - 1;
  Digits r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    uint64_t c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (int i = 0; i < k; ++i) r[d - k + i] = (r[d - k + i] + p - mulmod(c, m[i], p)) % p;
  }
  r.resize(k);
  return r;
}

// remainder of a monic polynomial f by monic g over F_p (coefficient vectors, low first)
Digits poly_rem(Digits f, const Digits& g, uint64_t p) {
  int dg = (int)g.size() - 1;
  for (int d = (int)f.size() - 1; d >= dg; --d) {
    uint64_t c = f[d];
    if (!c) continue;
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = (f[d - dg + i] + p - mulmod(c, g[i], p)) % p;
  }
  f.resize(std::min<size_t>(f.size(), dg));
  return f;
}

bool irreducible(const std::vector<uint64_t>& m, uint64_t p) {
  int k = (int)m.size() - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Digits g = to_digits(idx, p, d);
      g.push_back(1);
      Digits r = poly_rem(m, g, p);
      if (std::all_of(r.begin(), r.end(), [](uint64_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::string poly_text(const std::vector<uint64_t>& c, const std::string& var) {
  std::string s;
  for (int d = (int)c.size() - 1; d >= 0; --d) {
    if (!c[d]) continue;
    if (!s.empty()) s += "+";
    if (d == 0) {
      s += std::to_string(c[d]);
      continue;
    }
    if (c[d] != 1) s += std::to_string(c[d]) + "*";
    s += var;
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

const FieldImpl* intern(std::unique_ptr<FieldImpl> f) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& r = registry();
  auto it = r.find(f->desc);
  if (it != r.end()) return it->second.get();
  const FieldImpl* raw = f.get();
  r.emplace(f->desc, std::move(f));
  return raw;
}

const FieldImpl* lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry().find(key);
  return it == registry().end() ? nullptr : it->second.get();
}

}  // namespace

struct FieldOps {
  static FieldElem small(const FieldImpl* f, uint64_t v) { return FieldElem(f, v); }
  static FieldElem rat(const FieldImpl* f, cpp_rational q) {
    auto b = std::make_shared<BigRep>();
    b->q = std::move(q);
    return FieldElem(f, std::shared_ptr<const BigRep>(std::move(b)));
  }
  static FieldElem frac(const FieldImpl* f, MPoly num, MPoly den, bool reduce);
  static const BigRep& big(const FieldElem& a) { return *a.big_; }
  static uint64_t v(const FieldElem& a) { return a.v_; }
  static const FieldImpl* impl(const FieldElem& a) { return a.f_; }
  static Field field(const FieldImpl* f) { return Field(f); }

  static uint64_t ext_add(const FieldImpl* f, uint64_t a, uint64_t b) {
    if (f->p == 2) return a ^ b;
    if (!f->add_.empty()) return f->add_[a * f->q + b];
    uint64_t r = 0, m = 1;
    for (int i = 0; i < f->k; ++i) {
      r += ((a % f->p + b % f->p) % f->p) * m;
      a /= f->p;
      b /= f->p;
      m *= f->p;
    }
    return r;
  }
  static uint64_t ext_neg(const FieldImpl* f, uint64_t a) {
    if (f->p == 2) return a;
    uint64_t r = 0, m = 1;
    for (int i = 0; i < f->k; ++i) {
      r += ((f->p - a % f->p) % f->p) * m;
      a /= f->p;
      m *= f->p;
    }
    return r;
  }
  static uint64_t ext_mul(const FieldImpl* f, uint64_t a, uint64_t b) {
    if (!a || !b) return 0;
    return f->exp_[f->log_[a] + f->log_[b]];
  }
  static uint64_t ext_inv(const FieldImpl* f, uint64_t a) {
    uint64_t n = f->q - 1;
    return f->exp_[(n - f->log_[a]) % n];
  }
};

FieldElem FieldOps::frac(const FieldImpl* f, MPoly num, MPoly den, bool reduce) {
  if (den.is_zero()) throw ZeroDivisor("division by zero in rational function field");
  if (num.is_zero()) {
    den = MPoly::constant(f->base, (int)f->vars.size(), f->base.one());
  } else if (reduce) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.divexact(g);
      den = den.divexact(g);
    }
  }
  FieldElem lc = den.lead().c;
  if (!lc.is_one()) {
    FieldElem li = lc.inv();
    num = num.scale(li);
    den = den.scale(li);
  }
  if (num.total_degree() > f->cap || den.total_degree() > f->cap)
    throw BudgetError("rational function exceeds degree cap " + std::to_string(f->cap));
  auto b = std::make_shared<BigRep>();
  b->num = std::move(num);
  b->den = std::move(den);
  return FieldElem(f, std::shared_ptr<const BigRep>(std::move(b)));
}

// ---------------------------------------------------------------- Field

Field Field::rationals() {
  if (auto f = lookup("q")) return Field(f);
  auto f = std::make_unique<FieldImpl>();
  f->kind = FieldKind::Rational;
  f->desc = "q";
  return Field(intern(std::move(f)));
}

Field Field::prime(uint64_t p) {
  std::string key = "f" + std::to_string(p);
  if (auto f = lookup(key)) return Field(f);
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (p >= (1ull << 32)) throw FieldError("prime too large");
  auto f = std::make_unique<FieldImpl>();
  f->kind = FieldKind::Prime;
  f->p = p;
  f->q = p;
  f->desc = key;
  return Field(intern(std::move(f)));
}

Field Field::extension(uint64_t p, int k, const std::vector<uint64_t>& min_poly) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (k < 1 || (int)min_poly.size() != k + 1 || min_poly[k] % p != 1)
    throw FieldError("minimal polynomial must be monic of degree " + std::to_string(k));
  std::vector<uint64_t> m(min_poly);
  for (auto& c : m) c %= p;
  std::string key = "gf " + std::to_string(p) + " " + std::to_string(k) + ": " + poly_text(m, "Y");
  if (auto f = lookup(key)) return Field(f);
  uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1ull << 20)) throw FieldError("extension field too large");
  }
  if (!irreducible(m, p)) throw FieldError("reducible minimal polynomial " + poly_text(m, "Y"));
  auto f = std::make_unique<FieldImpl>();
  f->kind = FieldKind::Extension;
  f->p = p;
  f->k = k;
  f->q = q;
  f->min_poly = m;
  f->desc = key;
  Digits y(k, 0);
  if (k > 1)
    y[1] = 1;
  else
    y[0] = (p - m[0]) % p;
  f->gen_index = from_digits(y, p);
  // discrete log tables from a primitive element
  f->log_.assign(q, 0);
  f->exp_.assign(2 * (q - 1), 0);
  for (uint64_t cand = 1; cand < q; ++cand) {
    Digits g = to_digits(cand, p, k), x = to_digits(1, p, k);
    bool ok = true;
    for (uint64_t i = 0; i < q - 1; ++i) {
      uint64_t idx = from_digits(x, p);
      if (i > 0 && idx == 1) {
        ok = false;
        break;
      }
      f->exp_[i] = (uint32_t)idx;
      x = poly_mulmod(x, g, m, p);
    }
    if (!ok) continue;
    for (uint64_t i = 0; i < q - 1; ++i) {
      f->exp_[i + q - 1] = f->exp_[i];
      f->log_[f->exp_[i]] = (uint32_t)i;
    }
    break;
  }
  if (p != 2 && q <= 256) {
    f->add_.resize(q * q);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b) {
        Digits da = to_digits(a, p, k), db = to_digits(b, p, k);
        for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
        f->add_[a * q + b] = (uint32_t)from_digits(da, p);
      }
  }
  return Field(intern(std::move(f)));
}

Field Field::galois(uint64_t p, int k) {
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    Digits m = to_digits(idx, p, k);
    m.push_back(1);
    if (m[0] != 0 && irreducible(m, p)) return extension(p, k, m);
  }
  throw FieldError("no irreducible polynomial found");
}

Field Field::rational_functions(Field base, const std::vector<std::string>& vars, int degree_cap) {
  if (base.kind() != FieldKind::Prime && base.kind() != FieldKind::Rational)
    throw FieldError("rational function fields are built over q or a prime field");
  if (vars.empty()) throw FieldError("rational function field needs at least one variable");
  std::string key = "fun " + base.describe();
  if (degree_cap != 8) key += " cap " + std::to_string(degree_cap);
  key += ":";
  for (size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    if (v.empty() || !std::isalpha((unsigned char)v[0]) || v == "g")
      throw FieldError("bad variable name '" + v + "'");
    key += (i ? "," : " ") + v;
  }
  if (auto f = lookup(key)) return Field(f);
  auto f = std::make_unique<FieldImpl>();
  f->kind = FieldKind::RationalFunction;
  f->p = base.characteristic();
  f->base = base;
  f->vars = vars;
  f->cap = degree_cap;
  f->desc = key;
  return Field(intern(std::move(f)));
}

static std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

static uint64_t parse_u64(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit((unsigned char)c); }))
    throw ParseError("expected integer, got '" + s + "'");
  return std::stoull(s);
}

Field Field::parse(const std::string& desc_in) {
  std::string desc = trim(desc_in);
  if (desc == "q") return rationals();
  if (desc.size() > 1 && desc[0] == 'f' && std::isdigit((unsigned char)desc[1]))
    return prime(parse_u64(desc.substr(1)));
  std::istringstream is(desc);
  std::string head;
  is >> head;
  if (head == "gf") {
    auto colon = desc.find(':');
    std::istringstream hs(desc.substr(2, colon == std::string::npos ? std::string::npos : colon - 2));
    std::vector<std::string> toks;
    for (std::string t; hs >> t;) toks.push_back(t);
    if (colon == std::string::npos) {
      if (toks.size() == 1) {
        uint64_t q = parse_u64(toks[0]);
        for (uint64_t p = 2; p <= q; ++p)
          if (q % p == 0) {
            int k = 0;
            uint64_t r = q;
            while (r % p == 0) r /= p, ++k;
            if (r != 1) throw ParseError("field order must be a prime power");
            return galois(p, k);
          }
        throw ParseError("bad field order");
      }
      if (toks.size() == 2) return galois(parse_u64(toks[0]), (int)parse_u64(toks[1]));
      throw ParseError("bad gf descriptor '" + desc + "'");
    }
    if (toks.size() != 2) throw ParseError("bad gf descriptor '" + desc + "'");
    uint64_t p = parse_u64(toks[0]);
    int k = (int)parse_u64(toks[1]);
    Field ring = rational_functions(prime(p), {"Y"}, 64);
    FieldElem m = parse_in(ring, desc.substr(colon + 1));
    const BigRep& b = FieldOps::big(m);
    if (!b.den.is_constant() || b.num.degree_in(0) != k)
      throw ParseError("minimal polynomial must have degree " + std::to_string(k));
    std::vector<uint64_t> c(k + 1, 0);
    for (auto& t : b.num.terms()) c[t.m[0]] = t.c.index();
    return extension(p, k, c);
  }
  if (head == "fun") {
    auto colon = desc.rfind(':');
    if (colon == std::string::npos) throw ParseError("fun descriptor needs ':'");
    std::string pre = trim(desc.substr(3, colon - 3));
    int cap = 8;
    auto cp = pre.find(" cap ");
    if (cp != std::string::npos) {
      cap = (int)parse_u64(trim(pre.substr(cp + 5)));
      pre = trim(pre.substr(0, cp));
    }
    Field base = parse(pre);
    std::vector<std::string> vars;
    std::string rest = desc.substr(colon + 1);
    std::stringstream vs(rest);
    for (std::string v; std::getline(vs, v, ',');) vars.push_back(trim(v));
    return rational_functions(base, vars, cap);
  }
  throw ParseError("unknown field descriptor '" + desc + "'");
}

FieldKind Field::kind() const { return impl_->kind; }
uint64_t Field::characteristic() const { return impl_->p; }
std::optional<uint64_t> Field::order() const {
  if (impl_->kind == FieldKind::Prime || impl_->kind == FieldKind::Extension) return impl_->q;
  return std::nullopt;
}
int Field::ext_degree() const { return impl_->k; }
Field Field::base() const {
  if (impl_->kind == FieldKind::RationalFunction) return impl_->base;
  if (impl_->kind == FieldKind::Extension) return prime(impl_->p);
  return *this;
}
const std::vector<std::string>& Field::variables() const { return impl_->vars; }
int Field::degree_cap() const { return impl_->cap; }
std::string Field::describe() const { return impl_->desc; }

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long n) const {
  switch (impl_->kind) {
    case FieldKind::Rational:
      return FieldOps::rat(impl_, cpp_rational(n));
    case FieldKind::Prime: {
      long long p = (long long)impl_->p;
      return FieldOps::small(impl_, (uint64_t)(((n % p) + p) % p));
    }
    case FieldKind::Extension: {
      long long p = (long long)impl_->p;
      return FieldOps::small(impl_, (uint64_t)(((n % p) + p) % p));
    }
    case FieldKind::RationalFunction: {
      int nv = (int)impl_->vars.size();
      return FieldOps::frac(impl_, MPoly::constant(impl_->base, nv, impl_->base.from_int(n)),
                            MPoly::constant(impl_->base, nv, impl_->base.one()), false);
    }
  }
  return {};
}

FieldElem Field::from_rational(long long num, long long den) const {
  return from_int(num) / from_int(den);
}

FieldElem Field::gen() const {
  if (impl_->kind != FieldKind::Extension) throw FieldError("gen() needs an extension field");
  return FieldOps::small(impl_, impl_->gen_index);
}

FieldElem Field::var(int i) const {
  if (impl_->kind != FieldKind::RationalFunction || i < 0 || i >= (int)impl_->vars.size())
    throw FieldError("no such variable");
  int nv = (int)impl_->vars.size();
  return FieldOps::frac(impl_, MPoly::variable(impl_->base, nv, i),
                        MPoly::constant(impl_->base, nv, impl_->base.one()), false);
}

FieldElem Field::element(uint64_t i) const {
  if (!is_finite() || i >= impl_->q) throw FieldError("element index out of range");
  return FieldOps::small(impl_, i);
}

std::vector<FieldElem> Field::elements() const {
  if (!is_finite()) throw FieldError("elements() needs a finite field");
  std::vector<FieldElem> out;
  out.reserve(impl_->q);
  for (uint64_t i = 0; i < impl_->q; ++i) out.push_back(FieldOps::small(impl_, i));
  return out;
}

FieldElem Field::random(std::mt19937_64& rng) const {
  switch (impl_->kind) {
    case FieldKind::Prime:
    case FieldKind::Extension:
      return FieldOps::small(impl_, std::uniform_int_distribution<uint64_t>(0, impl_->q - 1)(rng));
    case FieldKind::Rational: {
      long long n = std::uniform_int_distribution<long long>(-9, 9)(rng);
      long long d = std::uniform_int_distribution<long long>(1, 5)(rng);
      return from_rational(n, d);
    }
    case FieldKind::RationalFunction: {
      int nv = (int)impl_->vars.size();
      auto rand_poly = [&](int deg) {
        MPoly r = MPoly::constant(impl_->base, nv, impl_->base.random(rng));
        for (int v = 0; v < nv; ++v)
          for (int d = 1; d <= deg; ++d)
            r = r + MPoly::variable(impl_->base, nv, v).mul_var_pow(v, d - 1).scale(impl_->base.random(rng));
        if (deg >= 2 && nv >= 2)
          r = r + (MPoly::variable(impl_->base, nv, 0) * MPoly::variable(impl_->base, nv, 1))
                      .scale(impl_->base.random(rng));
        return r;
      };
      MPoly num = rand_poly(2);
      MPoly den = MPoly::constant(impl_->base, nv, impl_->base.one());
      if (rng() & 1) {
        MPoly d = rand_poly(1);
        if (!d.is_zero()) den = d;
      }
      return FieldOps::frac(impl_, num, den, true);
    }
  }
  return {};
}

FieldElem Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElem x = random(rng);
    if (!x.is_zero()) return x;
  }
}

// ---------------------------------------------------------------- FieldElem

static void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field() || a.field().impl() == nullptr)
    throw FieldMismatch("field mismatch: " + (a.field().impl() ? a.field().describe() : "<none>") +
                        " vs " + (b.field().impl() ? b.field().describe() : "<none>"));
}

bool FieldElem::is_zero() const {
  switch (f_->kind) {
    case FieldKind::Rational:
      return big_->q == 0;
    case FieldKind::RationalFunction:
      return big_->num.is_zero();
    default:
      return v_ == 0;
  }
}

bool FieldElem::is_one() const {
  switch (f_->kind) {
    case FieldKind::Rational:
      return big_->q == 1;
    case FieldKind::RationalFunction:
      return big_->den.is_constant() && big_->num == big_->den;
    default:
      return v_ == 1;
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(*this, o);
  switch (f_->kind) {
    case FieldKind::Rational:
      return FieldOps::rat(f_, big_->q + o.big_->q);
    case FieldKind::Prime: {
      uint64_t s = v_ + o.v_;
      return FieldElem(f_, s >= f_->p ? s - f_->p : s);
    }
    case FieldKind::Extension:
      return FieldElem(f_, FieldOps::ext_add(f_, v_, o.v_));
    case FieldKind::RationalFunction: {
      if (is_zero()) return o;
      if (o.is_zero()) return *this;
      if (big_->den == o.big_->den)
        return FieldOps::frac(f_, big_->num + o.big_->num, big_->den, true);
      return FieldOps::frac(f_, big_->num * o.big_->den + o.big_->num * big_->den,
                            big_->den * o.big_->den, true);
    }
  }
  return {};
}

FieldElem FieldElem::operator-() const {
  switch (f_->kind) {
    case FieldKind::Rational:
      return FieldOps::rat(f_, -big_->q);
    case FieldKind::Prime:
      return FieldElem(f_, v_ ? f_->p - v_ : 0);
    case FieldKind::Extension:
      return FieldElem(f_, FieldOps::ext_neg(f_, v_));
    case FieldKind::RationalFunction:
      return FieldOps::frac(f_, -big_->num, big_->den, false);
  }
  return {};
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(*this, o);
  switch (f_->kind) {
    case FieldKind::Rational:
      return FieldOps::rat(f_, big_->q * o.big_->q);
    case FieldKind::Prime:
      return FieldElem(f_, mulmod(v_, o.v_, f_->p));
    case FieldKind::Extension:
      return FieldElem(f_, FieldOps::ext_mul(f_, v_, o.v_));
    case FieldKind::RationalFunction: {
      if (is_zero() || o.is_zero()) return field().zero();
      MPoly a = big_->num, b = big_->den, c = o.big_->num, d = o.big_->den;
      MPoly g1 = gcd(a, d), g2 = gcd(c, b);
      if (!g1.is_constant()) {
        a = a.divexact(g1);
        d = d.divexact(g1);
      }
      if (!g2.is_constant()) {
        c = c.divexact(g2);
        b = b.divexact(g2);
      }
      return FieldOps::frac(f_, a * c, b * d, false);
    }
  }
  return {};
}

FieldElem FieldElem::inv() const {
  if (!f_) throw FieldError("uninitialised scalar");
  if (is_zero()) throw ZeroDivisor("inverse of zero");
  switch (f_->kind) {
    case FieldKind::Rational:
      return FieldOps::rat(f_, 1 / big_->q);
    case FieldKind::Prime:
      return FieldElem(f_, powmod(v_, f_->p - 2, f_->p));
    case FieldKind::Extension:
      return FieldElem(f_, FieldOps::ext_inv(f_, v_));
    case FieldKind::RationalFunction:
      return FieldOps::frac(f_, big_->den, big_->num, false);
  }
  return {};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(*this, o);
  return *this * o.inv();
}

FieldElem FieldElem::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = field().one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (f_ != o.f_) return false;
  if (!f_) return true;
  switch (f_->kind) {
    case FieldKind::Rational:
      return big_->q == o.big_->q;
    case FieldKind::RationalFunction:
      return big_->num == o.big_->num && big_->den == o.big_->den;
    default:
      return v_ == o.v_;
  }
}

bool eq(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return a == b;
}

uint64_t FieldElem::index() const {
  if (!f_ || !(f_->kind == FieldKind::Prime || f_->kind == FieldKind::Extension))
    throw FieldError("index() needs a finite field");
  return v_;
}

static std::string wrap_poly(const MPoly& p, const std::vector<std::string>& names) {
  std::string s = p.str(names);
  if (p.terms().size() > 1) return "(" + s + ")";
  if (s.find('*') != std::string::npos || s.find('/') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string FieldElem::str() const {
  if (!f_) return "<unset>";
  switch (f_->kind) {
    case FieldKind::Rational: {
      std::ostringstream os;
      os << numerator(big_->q);
      if (denominator(big_->q) != 1) os << "/" << denominator(big_->q);
      return os.str();
    }
    case FieldKind::Prime:
      return std::to_string(v_);
    case FieldKind::Extension:
      return poly_text(to_digits(v_, f_->p, f_->k), "g");
    case FieldKind::RationalFunction: {
      if (big_->den.is_constant()) return big_->num.str(f_->vars);
      std::string n = big_->num.str(f_->vars);
      if (big_->num.terms().size() > 1) n = "(" + n + ")";
      return n + "/" + wrap_poly(big_->den, f_->vars);
    }
  }
  return "";
}

std::string FieldElem::text() const {
  if (!f_) return "<unset>";
  switch (f_->kind) {
    case FieldKind::Rational:
      return str();
    case FieldKind::Prime:
      return str() + " mod " + std::to_string(f_->p);
    default:
      return str() + " (" + f_->desc + ")";
  }
}

size_t FieldElem::hash() const {
  size_t h = std::hash<const void*>()(f_);
  if (!f_) return h;
  switch (f_->kind) {
    case FieldKind::Rational:
      return h ^ std::hash<std::string>()(str());
    case FieldKind::RationalFunction:
      return h ^ (big_->num.hash() * 1000003u + big_->den.hash());
    default:
      return h ^ (v_ * 0x9e3779b97f4a7c15ull);
  }
}

// ---------------------------------------------------------------- parsing

namespace {

struct ExprParser {
  const Field& f;
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }

  FieldElem integer(const std::string& digits) {
    if (f.kind() == FieldKind::Rational) return FieldOps::rat(f.impl(), cpp_rational(cpp_int(digits)));
    if (f.kind() == FieldKind::RationalFunction && f.characteristic() == 0) {
      Field b = f.base();
      FieldElem c = FieldOps::rat(b.impl(), cpp_rational(cpp_int(digits)));
      int nv = (int)f.variables().size();
      return FieldOps::frac(f.impl(), MPoly::constant(b, nv, c), MPoly::constant(b, nv, b.one()), false);
    }
    uint64_t p = f.characteristic(), r = 0;
    for (char c : digits) r = (r * 10 + (uint64_t)(c - '0')) % p;
    return f.from_int((long long)r);
  }

  FieldElem primary() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      FieldElem v = expr();
      if (!peek(')')) fail("expected ')'");
      ++i;
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t st = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      return integer(s.substr(st, i - st));
    }
    if (std::isalpha((unsigned char)c)) {
      size_t st = i;
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
      std::string name = s.substr(st, i - st);
      if (f.kind() == FieldKind::Extension && name == "g") return f.gen();
      if (f.kind() == FieldKind::RationalFunction) {
        auto& vs = f.variables();
        auto it = std::find(vs.begin(), vs.end(), name);
        if (it != vs.end()) return f.var((int)(it - vs.begin()));
      }
      i = st;
      fail("unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  FieldElem power() {
    FieldElem b = primary();
    if (peek('^')) {
      ++i;
      ws();
      bool neg = false;
      if (i < s.size() && s[i] == '-') neg = true, ++i;
      size_t st = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      if (st == i) fail("expected exponent");
      long long e = std::stoll(s.substr(st, i - st));
      return b.pow(neg ? -e : e);
    }
    return b;
  }

  FieldElem unary() {
    if (peek('-')) {
      ++i;
      return -unary();
    }
    if (peek('+')) {
      ++i;
      return unary();
    }
    return power();
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      ws();
      if (i >= s.size()) break;
      char c = s[i];
      if (c == '*') {
        ++i;
        v = v * unary();
      } else if (c == '/') {
        ++i;
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else if (c == '(' || std::isalpha((unsigned char)c)) {
        v = v * power();
      } else {
        break;
      }
    }
    return v;
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (peek('+')) {
        ++i;
        v = v + term();
      } else if (peek('-')) {
        ++i;
        v = v - term();
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace

FieldElem parse_in(const Field& f, const std::string& expr) {
  ExprParser ps{f, expr};
  FieldElem v = ps.expr();
  ps.ws();
  if (ps.i != expr.size()) ps.fail("trailing input");
  return v;
}

FieldElem parse_scalar(const std::string& text_in) {
  std::string text = trim(text_in);
  if (!text.empty() && text.back() == ')') {
    int depth = 0;
    for (size_t j = text.size(); j-- > 0;) {
      if (text[j] == ')') ++depth;
      if (text[j] == '(' && --depth == 0) {
        std::string inner = trim(text.substr(j + 1, text.size() - j - 2));
        if (j > 0 && (inner.rfind("gf", 0) == 0 || inner.rfind("fun", 0) == 0 || inner == "q" ||
                      (inner.size() > 1 && inner[0] == 'f' && std::isdigit((unsigned char)inner[1])))) {
          Field f = Field::parse(inner);
          return parse_in(f, text.substr(0, j));
        }
        break;
      }
    }
  }
  auto m = text.find(" mod ");
  if (m != std::string::npos) {
    Field f = Field::prime(parse_u64(trim(text.substr(m + 5))));
    return parse_in(f, text.substr(0, m));
  }
  return parse_in(Field::rationals(), text);
}

// ---------------------------------------------------------------- roots

namespace {

std::optional<cpp_int> int_sqrt(const cpp_int& n) {
  if (n < 0) return std::nullopt;
  cpp_int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<FieldElem> finite_sqrt(const FieldElem& x) {
  Field f = x.field();
  if (x.is_zero()) return x;
  if (f.characteristic() == 2) {
    // Frobenius is bijective: sqrt(x) = x^(q/2)
    return x.pow((long long)(*f.order() / 2));
  }
  uint64_t q = *f.order();
  if (!x.pow((long long)((q - 1) / 2)).is_one()) return std::nullopt;
  for (uint64_t i = 1; i < q; ++i) {
    FieldElem r = f.element(i);
    if (r * r == x) {
      FieldElem s = -r;
      return s.index() < r.index() ? s : r;
    }
  }
  return std::nullopt;
}

std::optional<MPoly> poly_sqrt(const MPoly& p) {
  if (p.is_zero()) return p;
  Field b = p.base();
  int nv = p.nvars();
  if (b.characteristic() == 2) {
    MPoly r(b, nv);
    for (auto& t : p.terms()) {
      Mono m(nv);
      for (int k = 0; k < nv; ++k) {
        if (t.m[k] % 2) return std::nullopt;
        m[k] = t.m[k] / 2;
      }
      MPoly term = MPoly::constant(b, nv, t.c);
      for (int k = 0; k < nv; ++k) term = term.mul_var_pow(k, m[k]);
      r = r + term;
    }
    return r;
  }
  const auto& lt = p.lead();
  for (auto e : lt.m)
    if (e % 2) return std::nullopt;
  auto c = sqrt_of(lt.c);
  if (!c) return std::nullopt;
  MPoly s = MPoly::constant(b, nv, *c);
  for (int k = 0; k < nv; ++k) s = s.mul_var_pow(k, lt.m[k] / 2);
  MPoly lead_s = s;
  FieldElem two_lc = (*c) + (*c);
  MPoly r = p - s * s;
  size_t guard = 0, limit = 4 * p.terms().size() + 64;
  while (!r.is_zero()) {
    if (++guard > limit) return std::nullopt;
    const auto& rt = r.lead();
    Mono m(nv);
    for (int k = 0; k < nv; ++k) {
      if (rt.m[k] < lead_s.lead().m[k]) return std::nullopt;
      m[k] = rt.m[k] - lead_s.lead().m[k];
    }
    if (!mono_less(m, lead_s.lead().m)) return std::nullopt;
    MPoly t = MPoly::constant(b, nv, rt.c / two_lc);
    for (int k = 0; k < nv; ++k) t = t.mul_var_pow(k, m[k]);
    r = r - (s + s + t) * t;
    s = s + t;
  }
  return s;
}

}  // namespace

std::optional<FieldElem> sqrt_of(const FieldElem& x) {
  Field f = x.field();
  switch (f.kind()) {
    case FieldKind::Prime:
    case FieldKind::Extension:
      return finite_sqrt(x);
    case FieldKind::Rational: {
      const cpp_rational& q = FieldOps::big(x).q;
      auto n = int_sqrt(numerator(q)), d = int_sqrt(denominator(q));
      if (!n || !d) return std::nullopt;
      return FieldOps::rat(f.impl(), cpp_rational(*n, *d));
    }
    case FieldKind::RationalFunction: {
      const BigRep& b = FieldOps::big(x);
      auto n = poly_sqrt(b.num), d = poly_sqrt(b.den);
      if (!n || !d) return std::nullopt;
      return FieldOps::frac(f.impl(), *n, *d, true);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<FieldElem, int>> quadratic_roots(const FieldElem& c1, const FieldElem& c0) {
  check_same(c1, c0);
  Field f = c1.field();
  std::vector<std::pair<FieldElem, int>> out;
  if (f.is_finite()) {
    std::vector<FieldElem> roots;
    for (const FieldElem& y : f.elements())
      if ((y * y + c1 * y + c0).is_zero()) roots.push_back(y);
    if (roots.size() == 1) out.push_back({roots[0], 2});
    for (size_t i = 0; roots.size() == 2 && i < 2; ++i) out.push_back({roots[i], 1});
    return out;
  }
  if (f.characteristic() == 2) {
    if (c1.is_zero()) {
      auto s = sqrt_of(c0);
      if (s) out.push_back({*s, 2});
      return out;
    }
    if (c0.is_zero()) {
      out.push_back({f.zero(), 1});
      out.push_back({c1, 1});
      return out;
    }
    throw Undecided("Artin-Schreier splitting over a rational function field is not decided");
  }
  FieldElem two = f.from_int(2);
  FieldElem disc = c1 * c1 - f.from_int(4) * c0;
  auto s = sqrt_of(disc);
  if (!s) return out;
  if (s->is_zero()) {
    out.push_back({-c1 / two, 2});
    return out;
  }
  FieldElem r1 = (-c1 - *s) / two, r2 = (-c1 + *s) / two;
  if (f.kind() == FieldKind::Rational && FieldOps::big(r2).q < FieldOps::big(r1).q) std::swap(r1, r2);
  out.push_back({r1, 1});
  out.push_back({r2, 1});
  return out;
}

}  // namespace chevkit
