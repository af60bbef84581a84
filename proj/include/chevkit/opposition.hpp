#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevkit/chevalley.hpp"
#include "chevkit/weyl.hpp"

namespace chevkit {

/// Roots perpendicular to every simple root off J, with a simple system and a type string.
struct PsiSystem {
  std::set<int> J;
  std::vector<int> positive;
  std::vector<int> simple;  // decreasing height
  std::string type;         // "A1xA1xA1", "D4", "" when empty
};
PsiSystem psi_J(const RootSystem& rs, const std::set<int>& J);
/// Type of the simply-laced system with the given simple roots, components joined by 'x'.
std::string subsystem_type(const RootSystem& rs, const std::vector<int>& simple);

/// Permutation of the nodes induced by -w0.
std::vector<int> opposition_involution(const RootSystem& rs);
/// w_{S\J} w0
WeylElt complement_times_longest(const RootSystem& rs, const std::set<int>& J);
/// s_{r1} ... s_{rk}
WeylElt reflection_product(const RootSystem& rs, const std::vector<int>& roots);

struct OppDiagram {
  std::string name;
  std::set<int> J;
  std::vector<int> sequence;
  int M = 0;  // length of w_{S\J} w0
  bool J_stable = false;
  bool perpendicular = false;
  bool product_matches = false;  // s_{phi_1}...s_{phi_N} == w_{S\J} w0
};
OppDiagram opp_diagram(const std::string& name);

/// Bruhat cell of g^{-1} theta g.
inline WeylElt displacement_of(const GroupElt& theta, const GroupElt& g) { return displacement(theta, g); }

struct SpectrumReport {
  std::string type;
  uint64_t q = 0;
  std::map<WeylElt, uint64_t> counts;
  uint64_t total = 0;
  uint64_t expected_total = 0;  // sum over W of q^{l(w)}
  uint64_t fixed = 0;           // chambers at displacement 1
  bool domestic = false;        // no chamber at w0
  int max_length = 0;
  std::vector<WeylElt> maximal;
  std::set<int> opposed_nodes;            // direct per-type test
  std::optional<std::set<int>> inferred;  // from the maximal element, when capped inference applies
  bool uncapped_risk = false;             // q = 2
  std::string str() const;
};

struct SpectrumBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t chamber_count(const RootSystem& rs, uint64_t q);
/// Canonical representative u n_w of the idx-th chamber in the cell of w (u over the inversion set).
GroupElt chamber_rep(GroupPtr G, const WeylElt& w, uint64_t idx);
/// Exhausts all chambers; cells are spread over `jobs` threads and merged.
SpectrumReport spectrum_bruteforce(const GroupElt& theta, int jobs = 1, uint64_t budget = 10'000'000);
/// Nodes i for which some displacement w has w0 in W_K w W_K, K = S minus the -w0 orbit of i.
std::set<int> opposed_nodes(const RootSystem& rs, const std::vector<WeylElt>& displacements);
/// J with w_{S\J} w0 equal to the given element, if any.
std::optional<std::set<int>> diagram_of(const RootSystem& rs, const WeylElt& w);

}  // namespace chevkit
