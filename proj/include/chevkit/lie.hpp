#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chevkit/rootsys.hpp"

namespace chevkit {

/// Sign data of a Chevalley basis of a simply-laced Lie algebra.
/// [e_a, e_b] = N(a,b) e_{a+b}; [e_a, e_{-a}] = h_a.
class StructConsts {
 public:
  /// Extraspecial pairs normalised to +1, then e_{+-a} scaled by twist[a] (a positive).
  static StructConsts build(const RootSystem& rs, const std::vector<int>& twist = {});

  const RootSystem& system() const { return *rs_; }
  int N(int a, int b) const { return n_[a * M_ + b]; }
  /// n_i x_b(t) n_i^{-1} = x_{s_i b}(eta(i,b) t), n_i = x_i(1) x_{-i}(-1) x_i(1).
  int eta(int i, int b) const { return eta_[(i - 1) * M_ + b]; }
  const std::vector<int>& twist() const { return twist_; }

 private:
  const RootSystem* rs_ = nullptr;
  int M_ = 0;
  std::vector<int8_t> n_, eta_;
  std::vector<int> twist_;
};

/// Adjoint module on the basis e_r (root indices 0..2N-1) followed by h_1..h_n.
using SparseVec = std::map<int, int64_t>;
int adjoint_dim(const RootSystem& rs);
SparseVec ad_apply(const StructConsts& sc, int r, const SparseVec& v);
/// exp(t ad e_r) v for integer t.
SparseVec exp_apply(const StructConsts& sc, int r, int64_t t, const SparseVec& v);
/// [ad e_a, ad e_b] = ad [e_a, e_b] on every basis vector, for all root pairs.
bool check_jacobi(const StructConsts& sc);

/// Dense matrices of the adjoint group over F_p (column convention), used as an oracle.
struct AdjMat {
  int dim = 0;
  uint64_t p = 0;
  std::vector<uint64_t> a;
  static AdjMat identity(int dim, uint64_t p);
  AdjMat operator*(const AdjMat& o) const;
  bool operator==(const AdjMat& o) const { return a == o.a; }
};
AdjMat adjoint_x(const StructConsts& sc, int r, uint64_t t, uint64_t p);
/// Torus element with character values chi(alpha_j) = chi[j-1] (mod p).
AdjMat adjoint_h(const StructConsts& sc, const std::vector<uint64_t>& chi, uint64_t p);
AdjMat adjoint_n(const StructConsts& sc, int i, uint64_t p);

}  // namespace chevkit
