#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "nesto/bits.hpp"
#include "nesto/buildsets.hpp"
#include "nesto/field.hpp"
#include "nesto/poly2.hpp"

namespace nesto {

/// Simplicial complex on vertices 0..m-1, stored by its facets.
/// Vertices lying in no facet are ghosts.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets may be given redundantly; non-maximal ones are dropped.
  /// An empty facet list means the void complex; {∅} is the empty complex.
  SimplicialComplex(int m, std::vector<VertexSet> facets, std::vector<std::string> labels = {});

  int m() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  const VertexSet& ghosts() const { return ghosts_; }
  bool has_ghosts() const { return !ghosts_.empty(); }
  /// Dimension (max facet size minus one); -1 for {∅}.
  int dim() const;
  bool is_pure() const;

  bool is_face(const VertexSet& s) const;
  /// All faces including ∅, ordered by size then colex.
  std::vector<VertexSet> faces() const;
  /// counts[k] = number of faces with k vertices, k = 0..dim+1.
  std::vector<long long> face_counts() const;

  bool operator==(const SimplicialComplex& o) const { return m_ == o.m_ && facets_ == o.facets_; }

 private:
  int m_ = 0;
  std::vector<VertexSet> facets_;
  std::vector<std::string> labels_;
  VertexSet ghosts_;
};

/// Hash set of all faces for repeated membership queries.
class FaceIndex {
 public:
  explicit FaceIndex(const SimplicialComplex& k);
  bool contains(const VertexSet& s) const { return set_.count(s) != 0; }
  std::size_t size() const { return set_.size(); }

 private:
  std::unordered_set<VertexSet, VertexSetHash> set_;
};

/// Nonmaximal members of a connected building set in vertex order.
std::vector<Mask> nested_vertices(const BuildingSet& b);
SimplicialComplex nested_complex(const BuildingSet& b);

SimplicialComplex from_min_nonfaces(int m, const std::vector<VertexSet>& gens);
/// Minimal non-faces (ghost vertices appear as singletons).
std::vector<VertexSet> min_nonfaces(const SimplicialComplex& k);

/// Nerve of the 2-truncated cube Q^n. Vertices v_1..v_{2n} are 0..2n-1,
/// followed by w_{k,n+k+i} for i = 1..n-2, k = 1..n-i.
SimplicialComplex q_complex(int n);
/// The quadratic monomials listed for the defining ideal, as vertex pairs.
std::vector<VertexSet> q_listed_generators(int n);

/// K_J relabeled to 0..|J|-1 (increasing), carrying original labels.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const VertexSet& j);
SimplicialComplex multiwedge(const SimplicialComplex& k, const std::vector<int>& j);
SimplicialComplex link(const SimplicialComplex& k, int v);

bool is_flag(const SimplicialComplex& k);

/// Join factors: connected components of the minimal non-face hypergraph.
/// Each entry lists the vertices of one factor.
std::vector<VertexSet> join_components(const SimplicialComplex& k);

struct FaceData {
  std::vector<long long> f;  // f[k] = number of k-dimensional faces of the polytope, k = 0..n-1
  BiPoly F;                  // in (alpha, t)
  BiPoly H;                  // in (s, t)
  bool ds_symmetric = false;
};

/// Treats k as the nerve of a simple n-polytope, n = dim k + 1.
FaceData face_data(const SimplicialComplex& k);

/// Reduced cohomology dimensions, entry q+1 holds degree q (q = -1..dim).
std::vector<int> reduced_cohomology(const SimplicialComplex& k, Field field);
/// Reduced Betti numbers in degrees 0..dim.
std::vector<int> reduced_betti(const SimplicialComplex& k, Field field);
long long euler_characteristic(const SimplicialComplex& k);

struct IsoResult {
  enum Status { Found, None, Unknown } status = None;
  std::vector<int> map;  // vertex of k1 -> vertex of k2
  long long nodes = 0;
  explicit operator bool() const { return status == Found; }
};

IsoResult iso(const SimplicialComplex& k1, const SimplicialComplex& k2, long long node_budget = 2'000'000);

SimplicialComplex boundary_simplex(int n);

}  // namespace nesto
