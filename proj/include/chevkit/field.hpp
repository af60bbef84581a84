#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chevkit {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDivisor : FieldError {
  using FieldError::FieldError;
};
struct FieldMismatch : FieldError {
  using FieldError::FieldError;
};
struct BudgetError : FieldError {
  using FieldError::FieldError;
};
struct Undecided : FieldError {
  using FieldError::FieldError;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Prime, Extension, RationalFunction };

struct FieldImpl;
class FieldElem;

/// Interned handle to an immutable field description. Equality is identity.
class Field {
 public:
  Field() = default;

  static Field rationals();
  static Field prime(uint64_t p);
  /// min_poly holds coefficients c0..ck of a monic degree-k polynomial.
  static Field extension(uint64_t p, int k, const std::vector<uint64_t>& min_poly);
  /// Smallest-Conway-free choice: first irreducible monic polynomial found by search.
  static Field galois(uint64_t p, int k);
  static Field rational_functions(Field base, const std::vector<std::string>& vars,
                                  int degree_cap = 8);
  /// Parses "q", "f5", "gf 2 2: Y^2+Y+1", "gf 4", "fun f2: l1,l2".
  static Field parse(const std::string& desc);

  FieldKind kind() const;
  uint64_t characteristic() const;
  /// Number of elements for finite fields.
  std::optional<uint64_t> order() const;
  int ext_degree() const;
  Field base() const;
  const std::vector<std::string>& variables() const;
  int degree_cap() const;
  bool is_finite() const { return order().has_value(); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;
  FieldElem from_rational(long long num, long long den) const;
  /// Class of Y in an extension field.
  FieldElem gen() const;
  /// i-th transcendental of a rational-function field.
  FieldElem var(int i) const;
  /// Finite fields: element with index 0 <= i < q (index 0 is zero).
  FieldElem element(uint64_t i) const;
  std::vector<FieldElem> elements() const;
  /// Uniform for finite fields; small-height values otherwise.
  FieldElem random(std::mt19937_64& rng) const;
  FieldElem random_nonzero(std::mt19937_64& rng) const;

  std::string describe() const;
  const FieldImpl* impl() const { return impl_; }

  friend bool operator==(const Field& a, const Field& b) { return a.impl_ == b.impl_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.impl_ != b.impl_; }

 private:
  explicit Field(const FieldImpl* p) : impl_(p) {}
  const FieldImpl* impl_ = nullptr;
  friend class FieldElem;
  friend struct FieldOps;
};

struct BigRep;

class FieldElem {
 public:
  FieldElem() = default;

  Field field() const { return Field(f_); }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  FieldElem inv() const;
  FieldElem pow(long long e) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Finite-field index (inverse of Field::element).
  uint64_t index() const;
  /// Expression in the field's own syntax, without the field suffix.
  std::string str() const;
  /// Self-describing text: "2 mod 5", "g+1 (gf 2 2: Y^2+Y+1)", ...
  std::string text() const;
  size_t hash() const;

 private:
  FieldElem(const FieldImpl* f, uint64_t v) : f_(f), v_(v) {}
  FieldElem(const FieldImpl* f, std::shared_ptr<const BigRep> b) : f_(f), big_(std::move(b)) {}
  const FieldImpl* f_ = nullptr;
  uint64_t v_ = 0;
  std::shared_ptr<const BigRep> big_;
  friend class Field;
  friend struct FieldOps;
};

bool eq(const FieldElem& a, const FieldElem& b);

/// Parses an expression inside a known field ("3/4", "g^2+1", "l1/(l1+l2)").
FieldElem parse_in(const Field& f, const std::string& expr);
/// Parses self-describing scalar text (see FieldElem::text).
FieldElem parse_scalar(const std::string& text);

/// Roots of Y^2 + c1 Y + c0 with multiplicity.
std::vector<std::pair<FieldElem, int>> quadratic_roots(const FieldElem& c1, const FieldElem& c0);
/// Square root if one is visible (exact for finite fields and Q).
std::optional<FieldElem> sqrt_of(const FieldElem& x);

}  // namespace chevkit
