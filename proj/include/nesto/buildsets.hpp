#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nesto/bits.hpp"

namespace nesto {

/// Simple graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n_vertices, std::vector<std::pair<int, int>> e);

  static Graph complete(int n);
  static Graph path(int n);
  /// Center 1, leaves 2..n.
  static Graph star(int n);
  static Graph cycle(int n);
};

/// Order used for members everywhere: by size, then lexicographic on the
/// increasing label sequence.
bool subset_less(Mask a, Mask b);

/// A building set on the ground set [ground] (1-based labels, bit i = label i+1).
/// Members are kept sorted by `subset_less`. Immutable once built.
class BuildingSet {
 public:
  BuildingSet() = default;
  /// Throws invalid-input unless `sets` form a building set on [ground].
  BuildingSet(int ground, std::vector<Mask> sets);

  int ground() const { return ground_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask s) const { return index_.count(s) != 0; }
  bool connected() const { return contains(full_mask(ground_)); }
  Mask full() const { return full_mask(ground_); }

  /// Inclusion-maximal members (the connected components).
  std::vector<Mask> maximal() const;

  bool operator==(const BuildingSet& o) const { return ground_ == o.ground_ && sets_ == o.sets_; }

  std::string to_string() const;

 private:
  int ground_ = 0;
  std::vector<Mask> sets_;
  std::unordered_set<Mask> index_;
};

struct Violation {
  std::string condition;  // "singleton", "union", "range"
  std::vector<Mask> witness;
};

struct ValidationReport {
  bool is_building_set = false;
  bool is_connected = false;
  std::vector<Violation> violations;
};

ValidationReport validate(const std::vector<Mask>& sets, int ground);

enum class StdFamily { Simplex, Cube, Mas, Gamma };

/// B_Delta, B_cube, B(P,n), B(Gamma,n) on [n+1].
BuildingSet standard(StdFamily family, int n);

/// Connected induced subgraphs.
BuildingSet graphical(const Graph& g);

/// B|_S relabeled to 1..|S| in increasing order of original labels.
BuildingSet restriction(const BuildingSet& b, Mask s);
/// B/S on [ground]\S, relabeled in increasing order.
BuildingSet contraction(const BuildingSet& b, Mask s);

/// Defined iff b1 ∩ b2 is B_Delta and the union is a building set.
std::optional<BuildingSet> sum(const BuildingSet& b1, const BuildingSet& b2);

BuildingSet substitution(const BuildingSet& b, const std::vector<BuildingSet>& parts);
BuildingSet disjoint_union(const BuildingSet& b1, const BuildingSet& b2);

/// Lexicographically least ground bijection (0-based: result[i] = image of i)
/// carrying members onto members, or nullopt.
std::optional<std::vector<int>> iso(const BuildingSet& b1, const BuildingSet& b2);

/// Image of a mask under a 0-based element map.
Mask map_mask(Mask s, const std::vector<int>& perm);

/// Compress the bits of `s` lying in `support` to consecutive positions.
Mask compress(Mask s, Mask support);

}  // namespace nesto
