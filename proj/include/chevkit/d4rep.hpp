#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevkit/chevalley.hpp"
#include "chevkit/matrix.hpp"

namespace chevkit {

/// The D4 root system; labels "(1211)" etc. are its coefficient vectors.
const RootSystem& d4_system();

/// Nodes of rs carrying the D4 nodes 1..4 (identity on D4; 2,4,3,5 on E6/E7/E8); empty otherwise.
std::vector<int> d4_embedding_nodes(const RootSystem& rs);
/// Image of a D4 root index in rs; throws when rs has no embedded D4.
int embed_d4_root(const RootSystem& rs, int d4root);

/// Sign twist on the positive roots of rs making the embedded D4 constants agree with the 8x8 matrices.
std::vector<int> default_sign_twist(const RootSystem& rs);

/// 8x8 matrix of x_r(a); negative roots use the transpose.
Mat d4_matrix(int root, const FieldElem& a);
Mat d4_n(Field F, int node);
Mat d4_n_word(Field F, const std::vector<int>& word);
Mat d4_h_coroot(int root, const FieldElem& t);
/// n_{w0} of D4 along the lexicographically least reduced word.
Mat d4_n_longest(Field F);

using Vec = std::vector<FieldElem>;
/// (X,Y) = sum X_i Y_{9-i}; f(X) = X1X8+X2X7+X3X6+X4X5.
FieldElem d4_form(const Vec& x, const Vec& y);
FieldElem d4_quad(const Vec& x);
bool form_preserved(const Mat& m);
/// f(v_i)=0, (v_i,v_{9-i})=1 for i<=4, all other pairings 0.
bool is_standard_basis(const std::vector<Vec>& v);
Mat from_rows(const std::vector<Vec>& rows);

/// Coefficient of the positive root r read from its table entry of a unipotent lower-triangular matrix.
FieldElem d4_coeff(const Mat& m, int root);
/// Group element of the D4 adjoint group with the same matrix up to sign; m must be lower triangular.
GroupElt d4_group_of_borel(GroupPtr D4, const Mat& m);
/// Matrix of a D4 group element, when its torus part lifts (chi(a3)chi(a4) a square).
std::optional<Mat> d4_matrix_of(const GroupElt& g);

struct ThetaParams {
  FieldElem a, b, c, t1, t2, t3, t4;
};
/// u h n_{wD4} with u, h from the chamber-fixing normal form.
Mat build_theta_E74(const ThetaParams& p);
/// p(x) = x^2 - (t2 a^2 + t1 t2 b^2 + t1 c^2 - t1 t2 a b c - 2) x + 1.
UPoly theta_p(const ThetaParams& p);
/// (x-1)^4 p(x)^2.
UPoly theta_expected_charpoly(const ThetaParams& p);

struct Classification {
  int cls = -1;           // 0: p irreducible (no fixed chamber), 1..4: class, -1: unresolved
  std::string route;      // which branch produced the basis
  std::optional<FieldElem> z;
  std::optional<FieldElem> param;  // a of forms (1),(2); c of form (3)
  Mat g;                  // rows: the standard basis
  GroupElt k;             // further conjugation inside the adjoint D4 group
  GroupElt canonical;     // k^{-1} (g theta g^{-1}) k
  std::string canonical_text;
  bool verified = false;
  std::vector<std::string> notes;
};

/// Conjugates theta into one of the four normal forms; every step is re-verified.
Classification classify_theta(const ThetaParams& p);

/// Isotropic theta-stable flag completed to a standard basis, or nullopt.
std::optional<std::vector<Vec>> stable_standard_basis(const Mat& theta);

}  // namespace chevkit
