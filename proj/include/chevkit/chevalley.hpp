#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chevkit/field.hpp"
#include "chevkit/lie.hpp"
#include "chevkit/rootsys.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

struct CellWall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Split adjoint Chevalley group of a simply-laced type over a field.
class ChevGroup {
 public:
  /// twist empty: the default twist (matching the 8-dimensional D4 matrices on the
  /// embedded D4 where the type contains one), otherwise the given sign vector.
  static std::shared_ptr<const ChevGroup> create(const RootSystem& rs, Field f,
                                                 const std::vector<int>& twist = {});
  static std::shared_ptr<const ChevGroup> create_untwisted(const RootSystem& rs, Field f);

  const RootSystem& rs;
  Field F;
  StructConsts sc;

  /// Positive non-simple root r = pred[r] + alpha_{step[r]}.
  std::vector<int> pred, step;
  /// For positive r: simple-reflection word k with r = s_{k1}..s_{km} alpha_{base[r]}.
  std::vector<std::vector<int>> descent;
  std::vector<int> base;

  /// chi(beta) for every positive root from chi on the simple roots.
  std::vector<FieldElem> characters(const std::vector<FieldElem>& chi) const;
  /// Sign of n_{word} x_{root}(t) n_{word}^{-1} = x_{w root}(sign t), word applied right to left.
  int conj_sign(const std::vector<int>& word, int root) const;

  ChevGroup(const RootSystem& r, Field f, StructConsts s);
};

using GroupPtr = std::shared_ptr<const ChevGroup>;

/// Bruhat normal form g = u1 * n_w * h * u2.
/// u1, u2: coefficients over the positive roots, product taken in root-index order;
/// h: character values chi(alpha_j) (equivalently coordinates t_j of prod h_{omega_j}(t_j)).
class GroupElt {
 public:
  GroupElt() = default;
  static GroupElt identity(GroupPtr G);
  static GroupElt x(GroupPtr G, int root, const FieldElem& t);
  /// prod_j h_{omega_j}(t_j) given as a coweight lambda and a scalar: h_lambda(t).
  static GroupElt h_coweight(GroupPtr G, const Coweight& lam, const FieldElem& t);
  static GroupElt h_coroot(GroupPtr G, int root, const FieldElem& t);
  static GroupElt h_chi(GroupPtr G, const std::vector<FieldElem>& chi);
  /// x_a(t) x_{-a}(-1/t) x_a(t).
  static GroupElt s(GroupPtr G, int root, const FieldElem& t);
  /// n_{i1} ... n_{ik}.
  static GroupElt n_word(GroupPtr G, const std::vector<int>& word);

  const ChevGroup& group() const { return *G_; }
  GroupPtr group_ptr() const { return G_; }
  const std::vector<FieldElem>& u1() const { return u1_; }
  const WeylElt& w() const { return w_; }
  const std::vector<FieldElem>& h() const { return h_; }
  const std::vector<FieldElem>& u2() const { return u2_; }
  const WeylElt& bruhat_cell() const { return w_; }

  // right multiplication by generators (in place)
  GroupElt& rmul_x(int root, const FieldElem& t);
  GroupElt& rmul_h(const std::vector<FieldElem>& chi);
  GroupElt& rmul_n(int i);
  GroupElt& rmul_ninv(int i);

  GroupElt operator*(const GroupElt& o) const;
  GroupElt inverse() const;
  /// x^{-1} g x
  GroupElt conjugate(const GroupElt& x) const;
  bool operator==(const GroupElt& o) const;
  bool operator!=(const GroupElt& o) const { return !(*this == o); }
  bool is_identity() const;

  /// Factor list in application order: the generator sequence of the normal form.
  std::string str() const;

 private:
  GroupPtr G_;
  std::vector<FieldElem> u1_;
  WeylElt w_;
  std::vector<FieldElem> h_;
  std::vector<FieldElem> u2_;
};

/// Collection in U+: u * x_r(t) and x_r(t) * u for ordered coefficient vectors.
void unip_rmul(const ChevGroup& G, std::vector<FieldElem>& u, int r, const FieldElem& t);
void unip_lmul(const ChevGroup& G, int r, const FieldElem& t, std::vector<FieldElem>& u);

/// Normal form of x_a(a) x_{-a}(b) via x_{-a}(b/(1+ab)) x_a(a(1+ab)) h_{a^v}(1/(1+ab)); throws CellWall if 1+ab = 0.
GroupElt sl2_rewrite(GroupPtr G, int root, const FieldElem& a, const FieldElem& b);

/// The word cell(g^{-1} theta g).
WeylElt displacement(const GroupElt& theta, const GroupElt& g);

}  // namespace chevkit
