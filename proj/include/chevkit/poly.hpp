#pragma once

#include <string>
#include <vector>

#include "chevkit/field.hpp"

namespace chevkit {

using Mono = std::vector<uint16_t>;

/// Sparse multivariate polynomial over a base field, terms sorted by
/// descending graded-lex order, no zero coefficients.
class MPoly {
 public:
  struct Term {
    Mono m;
    FieldElem c;
  };

  MPoly() = default;
  MPoly(Field base, int nvars) : base_(base), nv_(nvars) {}
  static MPoly constant(Field base, int nvars, const FieldElem& c);
  static MPoly variable(Field base, int nvars, int i);

  Field base() const { return base_; }
  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  int total_degree() const;
  int degree_in(int v) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scale(const FieldElem& c) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Exact quotient; throws if o does not divide *this.
  MPoly divexact(const MPoly& o) const;
  /// Quotient and remainder by repeated lead-term division.
  std::pair<MPoly, MPoly> divmod(const MPoly& o) const;
  MPoly monic() const;
  /// Coefficient of x_v^d as polynomial in the remaining variables.
  MPoly coeff_in(int v, int d) const;
  MPoly mul_var_pow(int v, int d) const;

  std::string str(const std::vector<std::string>& names) const;
  size_t hash() const;

 private:
  void normalize();
  Field base_;
  int nv_ = 0;
  std::vector<Term> t_;
};

bool mono_less(const Mono& a, const Mono& b);
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace chevkit
