#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

struct RootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RootVec = std::vector<int>;
/// Integer vector over the fundamental coweights: <alpha_i, lambda> = lambda[i].
using Coweight = std::vector<int>;

/// Root system in Bourbaki numbering. Roots are indexed: 0..N-1 are the
/// positive roots in the fixed order (height, then coefficient vectors with
/// larger leading entries first, so the simple roots come in node order),
/// and N+i is the negative of root i.
class RootSystem {
 public:
  static const RootSystem& get(char type, int rank);
  /// Accepts "E7", "D4", "A3", ...
  static const RootSystem& get(const std::string& name);

  char type() const { return type_; }
  int rank() const { return n_; }
  std::string name() const { return std::string(1, type_) + std::to_string(n_); }
  bool simply_laced() const;

  int num_positive() const { return N_; }
  int num_roots() const { return 2 * N_; }
  const RootVec& coeffs(int r) const { return roots_[r]; }
  int height(int r) const { return height_[r]; }
  bool positive(int r) const { return r < N_; }
  int neg(int r) const { return r < N_ ? r + N_ : r - N_; }
  /// Positive representative of +-r.
  int abs(int r) const { return r < N_ ? r : r - N_; }
  int simple(int i) const { return i - 1; }  // node i (1-based) -> index
  /// Index of a coefficient vector, or -1.
  int find(const RootVec& v) const;
  int index_of(const RootVec& v) const;  // throws if not a root
  /// Index of r+s if it is a root, else -1.
  int sum(int r, int s) const { return sum_[r * 2 * N_ + s]; }
  /// Cartan integer <root s, root r coroot>.
  int pairing(int s, int r) const { return pair_[r * 2 * N_ + s]; }
  /// Image of s under the reflection in r.
  int reflect(int r, int s) const { return refl_[r * 2 * N_ + s]; }
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // <alpha_i, alpha_j^v>
  int highest() const { return highest_; }

  /// <alpha, lambda>.
  int eval(int r, const Coweight& lam) const;
  Coweight coroot(int r) const;
  Coweight fundamental_coweight(int j) const;

  /// Nodes i with <alpha_i, phi> != 0.
  std::set<int> polar_type() const;
  /// Positive roots supported on the node set.
  std::vector<int> positive_roots_on(const std::set<int>& nodes) const;
  /// Highest root of the subsystem on a connected node set.
  int highest_on(const std::set<int>& nodes) const;
  /// Connected components of the Dynkin diagram restricted to nodes.
  std::vector<std::set<int>> components(const std::set<int>& nodes) const;
  bool adjacent(int i, int j) const { return i != j && cartan_[i - 1][j - 1] != 0; }

  std::string format(int r) const;
  /// "(1234321)" or "-(0100)"; digit count must equal rank.
  int parse(const std::string& s) const;

 private:
  RootSystem(char type, int rank);
  char type_;
  int n_, N_ = 0, highest_ = 0;
  std::vector<std::vector<int>> gram_;  // symmetric form on simple roots
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> roots_;
  std::vector<int> height_;
  std::map<RootVec, int> index_;
  std::vector<int> sum_, pair_, refl_;
};

/// Named opposition diagrams: circled node set J and the component choices
/// (each given by a node it contains) of the iterated polar-node removal.
struct DiagramSpec {
  std::string name;
  std::string system;
  std::vector<int> choices;
};
const DiagramSpec& diagram_spec(const std::string& name);
std::vector<std::string> diagram_names();

struct HighestRootSequence {
  std::vector<int> roots;  // phi_1..phi_N
  std::set<int> J;         // union of the removed polar nodes
};
/// Iterated removal: at each step pick the component containing the given node.
HighestRootSequence highest_root_sequence(const RootSystem& rs, const std::vector<int>& choices);
HighestRootSequence highest_root_sequence(const RootSystem& rs, const std::string& diagram);

/// Root sets produced by running the removal algorithm for k steps in every possible way.
std::vector<std::vector<int>> perp_set_orbit_reps(const RootSystem& rs, int k);

}  // namespace chevkit
