#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

struct NotCollineation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// GF(q) for q in {2,3,4,5,7} by lookup tables; GF(4) = {a + b w : w^2 = w + 1}, index a + 2b.
struct SmallField {
  int q = 0, p = 0, e = 1;
  uint8_t add[8][8]{}, mul[8][8]{}, neg[8]{}, inv[8]{}, frob[8]{};
  static SmallField make(int q);
  uint8_t sub(uint8_t a, uint8_t b) const { return add[a][neg[b]]; }
};

using PVec = std::array<uint8_t, 8>;
using Bits = std::vector<uint64_t>;

struct Subspace {
  std::vector<PVec> basis;
  std::vector<int> pts;
  Bits bits;
};

/// Hyperbolic quadric sum_{i<=n} x_i x_{2n+1-i} = 0 in PG(2n-1, q).
class HyperbolicSpace {
 public:
  /// max_dim: enumerate singular subspaces of projective dimension <= max_dim (-1: all, i.e. n-1).
  static HyperbolicSpace build(int n, int q, int max_dim = -1);

  int n = 0, q = 0, dim = 0, words = 0;
  SmallField F;
  std::vector<PVec> points;
  std::vector<Bits> perp;  // collinear or equal
  /// subs[d]: singular subspaces of projective dimension d (subs[0] are the points)
  std::vector<std::vector<Subspace>> subs;
  /// generator class (0/1) relative to generator 0
  std::vector<int> gen_class;

  const std::vector<Subspace>& generators() const { return subs.at(n - 1); }
  bool has_subspaces(int d) const { return d < (int)subs.size(); }
  /// Point count of a projective d-space: (q^{d+1}-1)/(q-1).
  size_t proj_count(int d) const;
  /// Projective dimension from a point count, or -2 if it is not such a count.
  int proj_dim(size_t count) const;

  PVec normalize(PVec v) const;
  /// Index of the projective point of v, -1 if v is zero or not on the quadric.
  int find_point(const PVec& v) const;
  uint8_t quad(const PVec& v) const;
  uint8_t bilinear(const PVec& x, const PVec& y) const;
  bool collinear(int a, int b) const { return perp[a][b >> 6] >> (b & 63) & 1; }
  Subspace span(const std::vector<PVec>& basis) const;
  /// Projective dimension of the span of the given vectors.
  int rank_dim(const std::vector<PVec>& vs) const;

  Bits empty_bits() const { return Bits(words, 0); }
  /// coordinate-major copy of the points (for batched kernels)
  std::vector<uint8_t> coord_major;

 private:
  std::vector<int> lookup_;  // base-q code of normalized vector -> point index
  size_t code(const PVec& v) const;
};

/// x -> x^{sigma^frob} m, acting on row vectors.
struct Collineation {
  int d = 0;
  std::vector<uint8_t> m;  // d x d row-major, field indices
  int frob = 0;
  static Collineation identity(int d);
  /// Apply this, then o.
  Collineation then(const SmallField& F, const Collineation& o) const;
  PVec apply(const SmallField& F, const PVec& v) const;
  std::string str() const;
};

/// Point permutation; throws NotCollineation if the quadric or its collinearity is not preserved.
std::vector<int> point_permutation(const HyperbolicSpace& sp, const Collineation& c);

/// x -> x - (B(x,v)/Q(v)) v for non-singular v (a transvection in characteristic 2).
Collineation reflection(const HyperbolicSpace& sp, const PVec& v);
Collineation random_isometry(const HyperbolicSpace& sp, std::mt19937_64& rng, int length = 24);
/// All collineations induced by the isometry group (closure under reflections), up to the budget.
std::vector<Collineation> isometry_group(const HyperbolicSpace& sp, size_t budget = 200000);

struct KangarooVerdict {
  bool nontrivial = false;
  size_t fixed_points = 0;
  bool moves_to_collinear = false;
  bool kangaroo = false;
  bool lazy = false;      // a pointwise fixed line exists
  bool diligent = false;  // kangaroo without fixed lines
};
KangarooVerdict is_kangaroo(const HyperbolicSpace& sp, const std::vector<int>& perm);

struct KangarooEquivalences {
  /// conditions (i)..(vi) of the kangaroo characterisation, evaluated literally
  std::array<bool, 6> holds{};
  /// k witnessed by (ii), (iii), (v); -2 where the condition fails
  int k_global = -2, k_pointwise = -2, k_large = -2;
  /// dim(M cap M^theta) for every generator M
  std::vector<int> per_generator;
  bool agree() const;
  std::string str() const;
};
/// Requires n >= 3 and all singular subspaces enumerated.
KangarooEquivalences kangaroo_equivalences(const HyperbolicSpace& sp, const std::vector<int>& perm);

struct FixedStructure {
  std::vector<int> fixed;
  int span_dim = -1;
  int rank = 0;  // polar rank of the fixed point set
  bool lazy = false;
  bool ovoid = false;
  bool involution = false;
  bool linear = true;
  bool type_preserving = true;
  bool span_cap_quadric = false;  // fixed set == <fixed> cap X
  /// 1 found, 0 none, -1 not applicable (q = 2) or search budget exceeded
  int skeleton = -1;
  std::string str() const;
};
/// Throws std::invalid_argument if c is not a kangaroo.
FixedStructure fixed_structure(const HyperbolicSpace& sp, const Collineation& c);

/// Some d+2 of the given points with no d+1 of them in a hyperplane of their d-dimensional span.
int contains_skeleton(const HyperbolicSpace& sp, const std::vector<int>& pts, size_t budget = 2'000'000);

/// Frobenius-twisted involution of the D2(4) quadric fixing an elliptic quadric of PG(3,2).
Collineation baer_involution_d2q4();

}  // namespace chevkit
