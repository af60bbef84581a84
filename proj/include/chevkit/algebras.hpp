#pragma once

#include <string>
#include <vector>

#include "chevkit/field.hpp"
#include "chevkit/matrix.hpp"

namespace chevkit {

using AlgElem = std::vector<FieldElem>;

/// Composition algebra given by its construction. Elements are coordinate vectors.
///   CayleyDickson: K doubled along the primitive chain, (a,b)(c,d) = (ac + m d conj(b), conj(a) d + c b)
///   Zorn: (x0,[x1,x2,x3],[x4,x5,x6],x7), lower vector w = (x1,x2,x3), upper v = (x4,x5,x6)
///   Inseparable: (x0,x1,x2,x3) over a characteristic 2 field with non-square l1 and l2 outside K^2 + l1 K^2
class CompAlg {
 public:
  enum class Kind { CayleyDickson, Zorn, Inseparable };

  static CompAlg base(Field F);
  static CompAlg cayley_dickson(const CompAlg& A, const FieldElem& primitive);
  static CompAlg zorn(Field F);
  static CompAlg inseparable(const FieldElem& l1, const FieldElem& l2);

  Field field() const { return F_; }
  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  std::string tag() const;

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem scalar(const FieldElem& c) const;
  AlgElem random(std::mt19937_64& rng) const;
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem sub(const AlgElem& x, const AlgElem& y) const;
  AlgElem scale(const FieldElem& c, const AlgElem& x) const;
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem conj(const AlgElem& x) const;
  /// x conj(x) as a scalar
  FieldElem norm(const AlgElem& x) const;
  /// x + conj(x) as a scalar
  FieldElem trace(const AlgElem& x) const;
  /// Scalar c if x = c * 1, otherwise throws.
  FieldElem as_scalar(const AlgElem& x) const;
  bool is_scalar(const AlgElem& x) const;
  AlgElem inverse(const AlgElem& x) const;
  bool eq(const AlgElem& x, const AlgElem& y) const;

 private:
  Field F_;
  Kind kind_ = Kind::CayleyDickson;
  int dim_ = 1;
  std::vector<FieldElem> prims_;  // Cayley-Dickson chain
  FieldElem l1_, l2_;
  AlgElem cd_mul(const AlgElem& x, const AlgElem& y, int level) const;
  AlgElem cd_conj(const AlgElem& x, int level) const;
};

/// Inseparable quaternion (x0,x1,x2,x3) inside the Zorn octonions.
AlgElem inseparable_to_zorn(const CompAlg& H, const CompAlg& O, const AlgElem& x);
/// Precondition check for inseparable(l1,l2) over F_2(l1,l2): degree parity of l1 and l2.
bool inseparable_parameters_ok(const FieldElem& l1, const FieldElem& l2);

struct ProjPoint {
  std::vector<FieldElem> c;
  /// scales so that the first nonzero entry is 1; throws on the zero vector
  static ProjPoint of(std::vector<FieldElem> v);
  bool operator==(const ProjPoint& o) const;
  std::string str() const;
};

/// (x conj x, y conj y, z conj z, y conj z, z conj x, x conj y)
ProjPoint veronese(const CompAlg& A, const AlgElem& x, const AlgElem& y, const AlgElem& z);
/// (X conj X, Y conj Y, 1, Y, conj X, X conj Y)
ProjPoint veronese_affine(const CompAlg& A, const AlgElem& X, const AlgElem& Y);
/// Failures among x2x3 = X1 conj X1 (cyclic) and X2X3 = x1 conj X1 (cyclic) for 3 + 3 dim(A) coordinates.
int veronese_violations(const CompAlg& A, const std::vector<FieldElem>& v);

/// Splits 27 coordinates (x1,x2,x3; X1,X2,X3) over the Zorn octonions.
struct E6Coords {
  FieldElem x[3];
  AlgElem X[3];
};
E6Coords e6_split(const CompAlg& A, const std::vector<FieldElem>& v);
std::vector<FieldElem> e6_join(const E6Coords& e);
/// number of the 27 scalar equations that fail (0 means the point is on the variety)
inline int e6_violations(const CompAlg& O, const std::vector<FieldElem>& v) { return veronese_violations(O, v); }
inline bool e6_equations(const CompAlg& O, const std::vector<FieldElem>& v) { return e6_violations(O, v) == 0; }
FieldElem cubic_C(const CompAlg& O, const std::vector<FieldElem>& v);

/// The 8x8 matrix A(a,b,c,d) acting on Zorn coordinates of row vectors.
Mat aut_A(const FieldElem& l1, const FieldElem& l2, const FieldElem& a, const FieldElem& b, const FieldElem& c,
          const FieldElem& d);
bool is_admissible(const FieldElem& l1, const FieldElem& l2, const FieldElem& a, const FieldElem& b,
                   const FieldElem& c, const FieldElem& d);
AlgElem apply_row(const Mat& m, const AlgElem& x);
/// m is an algebra automorphism (checked on basis products)
bool is_automorphism(const CompAlg& O, const Mat& m);

/// 56 coordinates, in the order of the fourteen blocks of the dual polar affine map.
std::vector<FieldElem> dpv_nu(const CompAlg& O, const FieldElem& l1, const FieldElem& l2, const FieldElem& l3,
                              const AlgElem& X1, const AlgElem& X2, const AlgElem& X3);
/// identity on the scalar blocks, m on each octonion block
std::vector<FieldElem> dpv_blockwise(const CompAlg& O, const Mat& m, const std::vector<FieldElem>& v);

}  // namespace chevkit
