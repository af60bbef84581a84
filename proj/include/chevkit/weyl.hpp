#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chevkit/rootsys.hpp"

namespace chevkit {

/// Weyl group element as a permutation of root indices.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int i);
  static WeylElt reflection(const RootSystem& rs, int root);
  static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);
  /// Longest element of the standard parabolic subgroup on the node set.
  static WeylElt longest(const RootSystem& rs, const std::set<int>& nodes);
  static WeylElt longest(const RootSystem& rs);

  const RootSystem& system() const { return *rs_; }
  int act(int r) const { return perm_[r]; }
  int length() const;
  bool is_identity() const;
  /// Lexicographically least reduced word.
  std::vector<int> reduced_word() const;
  /// Right descents: nodes i with w(alpha_i) < 0.
  std::vector<int> right_descents() const;

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;
  bool operator==(const WeylElt& o) const { return rs_ == o.rs_ && perm_ == o.perm_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  bool operator<(const WeylElt& o) const { return perm_ < o.perm_; }
  /// "w[1 3 4]" using the reduced word; "w[]" for the identity.
  std::string str() const;
  static WeylElt parse(const RootSystem& rs, const std::string& text);
  const std::vector<uint16_t>& perm() const { return perm_; }
  size_t hash() const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<uint16_t> perm_;
};

WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word);

struct PerpOrbits {
  size_t total_sets = 0;
  std::vector<std::vector<int>> reps;     // lexicographically least member of each orbit
  std::vector<size_t> sizes;
  std::map<std::vector<int>, int> orbit_of;  // sorted set -> orbit number
};
/// W-orbits on sets of k mutually perpendicular positive roots (BFS by simple reflections).
PerpOrbits orbit_of_perp_sets(const RootSystem& rs, int k, size_t budget = 50'000'000);

}  // namespace chevkit
