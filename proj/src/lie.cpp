#include "chevkit/lie.hpp"

#include <stdexcept>

namespace chevkit {

namespace {

// bimultiplicative sign on the root lattice: -1 on (a_i,a_i) and on (a_i,a_j), i<j adjacent
int kac_sign(const RootSystem& rs, int a, int b) {
  const RootVec& x = rs.coeffs(a);
  const RootVec& y = rs.coeffs(b);
  int e = 0;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!x[i - 1]) continue;
    for (int j = i; j <= rs.rank(); ++j)
      if (i == j || rs.adjacent(i, j)) e += x[i - 1] * y[j - 1];
  }
  return (e % 2) ? -1 : 1;
}

}  // namespace

StructConsts StructConsts::build(const RootSystem& rs, const std::vector<int>& twist) {
  if (!rs.simply_laced()) throw RootError("structure constants need a simply-laced system, got " + rs.name());
  StructConsts sc;
  sc.rs_ = &rs;
  int N = rs.num_positive(), M = 2 * N;
  sc.M_ = M;
  auto sgn = [&](int r) { return rs.positive(r) ? 1 : -1; };
  auto n0 = [&](int a, int b) {
    int s = rs.sum(a, b);
    if (s < 0) return 0;
    return sgn(a) * sgn(b) * sgn(s) * kac_sign(rs, a, b);
  };
  std::vector<int> c(N, 1);
  auto cc = [&](int r) { return c[rs.abs(r)]; };
  for (int g = 0; g < N; ++g) {
    if (rs.height(g) == 1) continue;
    for (int a = 0; a < g; ++a) {
      int b = rs.sum(g, rs.neg(a));
      if (b < 0 || !rs.positive(b)) continue;
      if (cc(a) * cc(b) * c[g] * n0(a, b) < 0) c[g] = -c[g];
      break;
    }
  }
  sc.twist_.assign(N, 1);
  if (!twist.empty()) {
    if ((int)twist.size() != N) throw RootError("twist vector has wrong length");
    sc.twist_ = twist;
    for (int g = 0; g < N; ++g) c[g] *= twist[g];
  }
  sc.n_.assign(M * M, 0);
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      int s = rs.sum(a, b);
      if (s >= 0) sc.n_[a * M + b] = (int8_t)(cc(a) * cc(b) * cc(s) * n0(a, b));
    }
  sc.eta_.assign(rs.rank() * M, 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    int si = rs.simple(i);
    for (int b = 0; b < M; ++b) {
      SparseVec v{{b, 1}};
      v = exp_apply(sc, si, 1, v);
      v = exp_apply(sc, rs.neg(si), -1, v);
      v = exp_apply(sc, si, 1, v);
      int target = rs.reflect(si, b);
      if (v.size() != 1 || v.begin()->first != target || std::abs(v.begin()->second) != 1)
        throw std::logic_error("Weyl representative does not permute root vectors");
      sc.eta_[(i - 1) * M + b] = (int8_t)v.begin()->second;
    }
  }
  return sc;
}

int adjoint_dim(const RootSystem& rs) { return rs.num_roots() + rs.rank(); }

SparseVec ad_apply(const StructConsts& sc, int r, const SparseVec& v) {
  const RootSystem& rs = sc.system();
  int M = rs.num_roots();
  SparseVec out;
  auto add = [&](int k, int64_t x) {
    if (!x) return;
    int64_t& y = out[k];
    y += x;
    if (!y) out.erase(k);
  };
  for (auto [k, x] : v) {
    if (k < M) {
      if (k == rs.neg(r)) {
        const RootVec& cr = rs.coeffs(r);
        for (int j = 0; j < rs.rank(); ++j) add(M + j, x * cr[j]);
      } else {
        int s = rs.sum(r, k);
        if (s >= 0) add(s, x * sc.N(r, k));
      }
    } else {
      int j = k - M + 1;
      add(r, -x * rs.pairing(r, rs.simple(j)));
    }
  }
  return out;
}

SparseVec exp_apply(const StructConsts& sc, int r, int64_t t, const SparseVec& v) {
  SparseVec a = ad_apply(sc, r, v);
  SparseVec b = ad_apply(sc, r, a);
  SparseVec out = v;
  auto add = [&](int k, int64_t x) {
    if (!x) return;
    int64_t& y = out[k];
    y += x;
    if (!y) out.erase(k);
  };
  for (auto [k, x] : a) add(k, t * x);
  for (auto [k, x] : b) {
    if (x % 2) throw std::logic_error("ad^2 not divisible by 2");
    add(k, t * t * (x / 2));
  }
  return out;
}

bool check_jacobi(const StructConsts& sc) {
  const RootSystem& rs = sc.system();
  int M = rs.num_roots(), dim = adjoint_dim(rs);
  std::vector<SparseVec> basis(dim);
  for (int k = 0; k < dim; ++k) basis[k] = {{k, 1}};
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      if (a == b) continue;
      for (int k = 0; k < dim; ++k) {
        SparseVec lhs = ad_apply(sc, a, ad_apply(sc, b, basis[k]));
        for (auto [j, x] : ad_apply(sc, b, ad_apply(sc, a, basis[k]))) {
          lhs[j] -= x;
          if (!lhs[j]) lhs.erase(j);
        }
        SparseVec rhs;
        if (b == rs.neg(a)) {
          // [e_a, e_{-a}] = h_a acts by <beta, a^v> on e_beta
          if (k < M) {
            int64_t x = rs.pairing(k, a);
            if (x) rhs[k] = x;
          }
        } else {
          int s = rs.sum(a, b);
          if (s >= 0)
            for (auto [j, x] : ad_apply(sc, s, basis[k])) rhs[j] = x * sc.N(a, b);
        }
        if (lhs != rhs) return false;
      }
    }
  return true;
}

AdjMat AdjMat::identity(int dim, uint64_t p) {
  AdjMat m;
  m.dim = dim;
  m.p = p;
  m.a.assign((size_t)dim * dim, 0);
  for (int i = 0; i < dim; ++i) m.a[(size_t)i * dim + i] = 1 % p;
  return m;
}

AdjMat AdjMat::operator*(const AdjMat& o) const {
  AdjMat m;
  m.dim = dim;
  m.p = p;
  m.a.assign((size_t)dim * dim, 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      uint64_t x = a[(size_t)i * dim + k];
      if (!x) continue;
      for (int j = 0; j < dim; ++j) m.a[(size_t)i * dim + j] = (m.a[(size_t)i * dim + j] + x * o.a[(size_t)k * dim + j]) % p;
    }
  return m;
}

AdjMat adjoint_x(const StructConsts& sc, int r, uint64_t t, uint64_t p) {
  int dim = adjoint_dim(sc.system());
  AdjMat m = AdjMat::identity(dim, p);
  t %= p;
  for (int k = 0; k < dim; ++k) {
    SparseVec a = ad_apply(sc, r, {{k, 1}});
    SparseVec b = ad_apply(sc, r, a);
    for (auto [j, x] : a) {
      int64_t xm = ((x % (int64_t)p) + (int64_t)p) % (int64_t)p;
      m.a[(size_t)j * dim + k] = (m.a[(size_t)j * dim + k] + (uint64_t)xm * t) % p;
    }
    for (auto [j, x] : b) {
      int64_t h = x / 2;
      int64_t xm = ((h % (int64_t)p) + (int64_t)p) % (int64_t)p;
      m.a[(size_t)j * dim + k] = (m.a[(size_t)j * dim + k] + (uint64_t)xm * (t * t % p)) % p;
    }
  }
  return m;
}

AdjMat adjoint_h(const StructConsts& sc, const std::vector<uint64_t>& chi, uint64_t p) {
  const RootSystem& rs = sc.system();
  int dim = adjoint_dim(rs);
  AdjMat m = AdjMat::identity(dim, p);
  auto powm = [&](uint64_t b, int64_t e) {
    if (e < 0) {
      // inverse by Fermat
      uint64_t inv = 1, x = b % p;
      for (uint64_t k = p - 2; k; k >>= 1, x = x * x % p)
        if (k & 1) inv = inv * x % p;
      b = inv;
      e = -e;
    }
    uint64_t r = 1 % p;
    for (int64_t k = 0; k < e; ++k) r = r * b % p;
    return r;
  };
  for (int r = 0; r < rs.num_roots(); ++r) {
    uint64_t v = 1 % p;
    for (int j = 0; j < rs.rank(); ++j) v = v * powm(chi[j], rs.coeffs(r)[j]) % p;
    m.a[(size_t)r * dim + r] = v;
  }
  return m;
}

AdjMat adjoint_n(const StructConsts& sc, int i, uint64_t p) {
  const RootSystem& rs = sc.system();
  int si = rs.simple(i);
  AdjMat x = adjoint_x(sc, si, 1, p);
  return x * adjoint_x(sc, rs.neg(si), p - 1, p) * x;
}

}  // namespace chevkit
