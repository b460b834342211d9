#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nesto/buildsets.hpp"
#include "nesto/complexes.hpp"
#include "nesto/field.hpp"
#include "nesto/poly2.hpp"

namespace nesto {

enum class Family { Pt, Simplex, Cube, Pe, St, As, Cy, Gamma, Mas, Q, Opaque };

std::string family_name(Family f);
Family parse_family(const std::string& s);

/// A polytope class: a named family member or an opaque polytope carried by
/// its building set (nestohedron) or its nerve complex.
struct Symbol {
  Family family = Family::Pt;
  int dim = 0;
  std::shared_ptr<const BuildingSet> bset;
  std::shared_ptr<const SimplicialComplex> complex;
  bool unclassified = false;
  std::string key;  // structural key for opaque symbols, empty otherwise

  static Symbol named(Family f, int dim);
  static Symbol opaque(BuildingSet b);
  static Symbol opaque(SimplicialComplex k);

  std::string to_string() const;
  bool operator==(const Symbol& o) const { return family == o.family && dim == o.dim && key == o.key; }
  bool operator<(const Symbol& o) const;
};

/// Sorted multiset of symbols; points are never stored.
using Monomial = std::vector<Symbol>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
std::string mono_to_string(const Monomial& m);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the ring of polytopes: rational combination of monomials.
class RingElem {
 public:
  RingElem() = default;
  static RingElem unit();
  static RingElem of(const Symbol& s, const Rational& c = 1);
  static RingElem of(const Monomial& m, const Rational& c = 1);

  const std::map<Monomial, Rational, MonoLess>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Monomial& m) const;
  void add(const Monomial& m, const Rational& c);

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator*(const Rational& s) const;
  RingElem& operator+=(const RingElem& o);
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  /// Coefficient-weighted number of monomials.
  Rational total_coeff() const;
  std::string to_string() const;

 private:
  std::map<Monomial, Rational, MonoLess> t_;
};

// ---- registry ----

/// Families in the order used to name a classified polytope.
const std::vector<Family>& registry_priority();
/// Building set of the registry member, when it is a nestohedron.
std::optional<BuildingSet> registry_building_set(Family f, int dim);
/// Nerve of the registry member (cached).
std::shared_ptr<const SimplicialComplex> registry_complex(Family f, int dim);

/// Largest dimension at which named symbols are canonicalised by isomorphism;
/// above it distinct families have distinct facet counts.
constexpr int kIsoCanonMaxDim = 4;

// ---- classification ----

/// Product decomposition of an opaque polytope into named factors; factors
/// that match no registry family stay opaque with `unclassified` set.
Monomial classify(const Symbol& s);
/// Canonical product form of a named symbol (e.g. St^2 -> As^2, Mas^2 -> I*I).
Monomial canonical(const Symbol& s);
/// Classifies opaque symbols and canonicalises named ones, term by term.
RingElem canonicalize(const RingElem& e);

/// Families whose member of dimension `k.dim()+1` has a nerve isomorphic to k.
std::vector<Family> matching_families(const SimplicialComplex& k, const std::vector<Family>& pool);

// ---- boundary ----

struct BoundaryTerm {
  Mask s;
  BuildingSet restriction;
  BuildingSet contraction;
};

/// One term per nonmaximal member S: B|_S and B/S.
std::vector<BoundaryTerm> boundary_terms(const BuildingSet& b);
/// Sum of Opaque(B|_S) * Opaque(B/S) over nonmaximal S.
RingElem d_nestohedron(const BuildingSet& b);
/// Boundary of a single symbol by its family formula.
RingElem d_symbol(const Symbol& s);
/// Boundary extended as a derivation.
RingElem d_elem(const RingElem& e);

// ---- characteristic polynomials ----

struct CharPoly {
  BiPoly F;  // (alpha, t)
  BiPoly H;  // (s, t)
};

CharPoly char_poly(const RingElem& e);
BiPoly f_poly(const Symbol& s);

// ---- complexity ----

struct ComplexityReport {
  Family family;
  int max_dim = 0;
  std::vector<Family> closure;
  int complexity = 0;
  bool exact = false;     // same closure at max_dim - 1
  bool complete = true;   // false when some factor matched no family
  std::vector<std::string> unmatched;
};

ComplexityReport complexity(Family family, int max_dim);

}  // namespace nesto
