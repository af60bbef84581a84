#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

/// Thin dictionary (vertex counts realizing geometric relations):
///   Gosset graph (points of E7,7):
///     point far from symp      <=> adjacent to exactly 1 symp vertex
///     point close to symp      <=> adjacent to exactly 6 symp vertices (a 5'-space)
///     symp meets symp in 12 / 6 / 2 / 0 vertices: equal / adjacent (5-space) / symplectic (line) / disjoint,
///     disjoint splits into special (a bridging symp meets both in opposite 6-sets) and opposite.
///   27-vertex E6 model (points of type 1):
///     5-space = 6-clique, symp = 10 vertices, 4'-space = 5 vertices, 3-space = 4, plane = 3, line = 2.
struct ThinModel {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> symps;  // sorted vertex lists
  std::vector<std::string> symp_labels;
  std::vector<std::vector<int>> spaces;  // E6 only: the 5-spaces

  int size() const { return (int)labels.size(); }
  bool adjacent(int a, int b) const { return dist[a][b] == 1; }
  int degree(int v) const { return (int)adj[v].size(); }
  int diameter() const;
  /// vertices at maximal distance from v
  std::vector<int> antipodes(int v) const;
  /// "a b" label pairs, one edge per line
  std::string edge_list() const;
  int find(const std::string& label) const;
};

ThinModel build_gosset();
ThinModel build_e6_apartment();

/// Symps as {x, y} plus common neighbours over all pairs at distance 2 (independent of the labelled list).
std::vector<std::vector<int>> symps_from_distance_two(const ThinModel& m);
/// Number of vertices of s adjacent to v.
int neighbours_in(const ThinModel& m, int v, const std::vector<int>& s);
int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

enum class PointSymp { Far, Close };
enum class SympSymp { Equal, Adjacent, Symplectic, Special, Opposite };
const char* tag(PointSymp c);
const char* tag(SympSymp c);

struct IncidenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws IncidenceError when v lies in the symp or the neighbour count fits neither case.
PointSymp thin_point_symp(const ThinModel& m, int v, const std::vector<int>& symp);
/// Also checks the consequences listed for each case; a failure throws IncidenceError.
/// Symplectic pairs: collinear outside pairs are tolerated only when both points are collinear to the whole
/// common line, and counted in collinear_outside.
SympSymp thin_symp_symp(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2,
                        long* collinear_outside = nullptr);
/// Symps meeting both s1 and s2 in 6 vertices that are mutually antipodal inside it.
std::vector<int> bridging_symps(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2);

struct GossetCensus {
  std::map<std::string, long> point_symp;
  std::map<std::string, long> symp_symp;
  /// per unordered pair of symp kinds ("pair"/"quad"), then relation
  std::map<std::string, std::map<std::string, long>> by_kind;
  long unclassified = 0;
  /// (x, x') outside the common line of a symplectic pair that are collinear
  long symplectic_collinear = 0;
  bool opposite_matching = true;
  bool imaginary_partition = true;
};
GossetCensus gosset_census(const ThinModel& g);

/// For opposite symps: the bridging edges together with the symps inside their union meeting every edge
/// partition the union.
bool imaginary_partition(const ThinModel& m, const std::vector<int>& s1, const std::vector<int>& s2);

struct E6Check {
  std::string item;
  bool holds = false;
  std::map<std::string, long> cases;
};
/// Exhaustive thin checks of the E6 facts: strong diameter 2, point-symp, point-5-space,
/// symp-5-space, 5-space-5-space.
std::vector<E6Check> e6_fact_checks(const ThinModel& e6);
/// "inside", "three-space" or "unique-point"; throws IncidenceError otherwise.
std::string thin_point_space(const ThinModel& m, int v, const std::vector<int>& space);

/// All cliques with k vertices, each sorted.
std::vector<std::vector<int>> cliques_of_size(const ThinModel& m, int k);

}  // namespace chevkit
