#pragma once

#include <string>
#include <vector>

#include "chevkit/field.hpp"

namespace chevkit {

/// Square matrix over a field. Acts on row vectors on the right.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, int n);
  static Mat identity(Field f, int n);
  static Mat diag(const std::vector<FieldElem>& d);
  /// Rows of integers mapped into the field.
  static Mat from_ints(Field f, const std::vector<std::vector<long long>>& rows);

  int size() const { return n_; }
  Field field() const { return F_; }
  FieldElem& operator()(int i, int j) { return a_[i * n_ + j]; }
  const FieldElem& operator()(int i, int j) const { return a_[i * n_ + j]; }
  /// 1-based unit matrix E_ij.
  static Mat unit(Field f, int n, int i, int j);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const FieldElem& c) const;
  Mat transpose() const;
  /// Throws ZeroDivisor when singular.
  Mat inverse() const;
  FieldElem det() const;
  int rank() const;
  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_identity() const;

  std::vector<FieldElem> row(int i) const;
  /// v M for a row vector v.
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;
  /// Basis of { v : v M = v c }.
  std::vector<std::vector<FieldElem>> left_eigenspace(const FieldElem& c) const;

  /// Row-major, rows separated by "; ".
  std::string str() const;

 private:
  Field F_;
  int n_ = 0;
  std::vector<FieldElem> a_;
};

/// Polynomial in one variable as coefficients c0..cd.
using UPoly = std::vector<FieldElem>;
UPoly upoly_mul(const UPoly& a, const UPoly& b);
bool upoly_eq(const UPoly& a, const UPoly& b);
std::string upoly_str(const UPoly& p, const std::string& var = "x");

/// det(x I - M), monic, by the division-free Berkowitz recursion.
UPoly char_poly(const Mat& m);

/// Row-reduced basis of the left null space of m.
std::vector<std::vector<FieldElem>> left_kernel(const Mat& m);

}  // namespace chevkit
