#pragma once

// Massey products in H(R(K)) for multigraded classes. A defining system for
// (α_1..α_k) is an upper triangular matrix C with c_{i,i+1} = a_i and
// d c_{i,j} = Σ_{i<r<j} c̄_{i,r} c_{r,j}; its value is
// a(C) = -Σ_{0<r<k} c̄_{0,r} c_{r,k}, so that dC - C̄C = a(C) E_{0,k}.
// Positions are 0..k, entry (i, j) lives in multidegree J_i ∪ .. ∪ J_{j-1}
// with homological degree h_i + .. + h_{j-1} + (j - i - 1).

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nesto/cohomology.hpp"

namespace nesto {

enum class Triviality { Yes, No, Unknown };
std::string triviality_name(Triviality t);

template <class F>
struct WitnessEntry {
  int i, j;
  Cochain<F> c;
};

template <class F>
struct MasseyReport {
  int k = 0;
  bool defined = false;
  Triviality trivial = Triviality::Unknown;
  bool strictly_defined = false;
  Mask J = 0;  // multidegree of the value
  int h = 0;   // homological degree of the value
  std::vector<Vec<F>> values;         // class coordinates (one coset representative for triple products)
  std::vector<Vec<F>> indeterminacy;  // spanning set, triple products only
  long long systems = 0;              // complete defining systems visited
  long long nodes = 0;                // partial systems visited
  std::string note;
  std::vector<WitnessEntry<F>> witness;  // a defining system attaining values[0]
  Cochain<F> witness_value;
};

/// A monomial class u_{J∖τ} v_τ.
struct MonomialSpec {
  Mask J;
  Mask tau;
  std::string label;
};

struct ClassFamily {
  SimplicialComplex complex;
  std::vector<MonomialSpec> classes;
};

/// α_i = [v_i u_{n+i}] on the nerve of Q^n.
ClassFamily canonical_classes_q(int n);
/// α_i = [v_{{1..i}} u_{{i+1}}] on the nested complex of B(P,n).
ClassFamily canonical_classes_mas(int n);
/// Nested complex of B(P,n) with the images of the canonical classes of
/// B(P,r) under the embedding S = {1,2,n+1} ∪ {3..r}, plus the vertex map
/// from that nested complex onto the one of B(P,r) (-1 outside S).
struct MasEmbedding {
  Mask s;
  ClassFamily big;
  ClassFamily small;
  std::vector<int> vertex_map;
};
MasEmbedding mas_embedding(int n, int r);

inline Mask map_vertices(Mask x, const std::vector<int>& map) {
  Mask out = 0;
  for_each_bit(x, [&](int v) {
    if (map[v] < 0) invalid_input("vertex outside the embedded subcomplex");
    out |= Mask{1} << map[v];
  });
  return out;
}

/// Transfers a cochain with multidegree inside the image of `map` to the
/// target complex; faces inside J agree on both sides so this is a chain
/// isomorphism in every such multidegree.
template <class F>
Cochain<F> transfer(const Koszul<F>& from, const Koszul<F>& to, const Cochain<F>& x, const std::vector<int>& map) {
  Mask J = map_vertices(x.J, map);
  Cochain<F> y = to.zero(J, x.h);
  if (x.c.empty()) return y;
  const auto& src = from.basis(x.J, x.h);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (is_zero(x.c[i])) continue;
    Cochain<F> m = to.monomial(J, map_vertices(src[i], map));
    for (std::size_t r = 0; r < y.c.size(); ++r)
      if (!is_zero(m.c[r])) y.c[r] += x.c[i];
  }
  return y;
}

template <class F>
std::vector<Cochain<F>> monomial_reps(const Koszul<F>& r, const std::vector<MonomialSpec>& specs) {
  std::vector<Cochain<F>> out;
  for (const auto& s : specs) {
    auto z = r.monomial(s.J, s.tau);
    if (!r.is_cocycle(z)) invalid_input("class " + s.label + " is not a cocycle");
    out.push_back(std::move(z));
  }
  return out;
}

namespace detail {

template <class F>
bool pairwise_disjoint(const std::vector<Cochain<F>>& a) {
  Mask seen = 0;
  for (const auto& x : a) {
    if (seen & x.J) return false;
    seen |= x.J;
  }
  return true;
}

template <class F>
void entry_degree(const std::vector<Cochain<F>>& a, int i, int j, Mask& J, int& h) {
  J = 0;
  h = j - i - 1;
  for (int r = i; r < j; ++r) {
    J |= a[r].J;
    h += a[r].h;
  }
}

template <class F>
Vec<F> negate(Vec<F> v) {
  for (auto& x : v) x = -x;
  return v;
}

template <class F>
bool in_span(const std::vector<Vec<F>>& span, const Vec<F>& v, int dim) {
  if (is_zero_vec(v)) return true;
  if (span.empty()) return false;
  std::vector<Vec<F>> cols = span;
  int r0 = rank(Matrix<F>::from_columns(dim, cols));
  cols.push_back(v);
  return rank(Matrix<F>::from_columns(dim, cols)) == r0;
}

}  // namespace detail

/// Triple product, decided exactly modulo α_1·H + H·α_3 over any field.
template <class F>
MasseyReport<F> triple_massey(const Koszul<F>& r, const std::vector<Cochain<F>>& a) {
  using K = Koszul<F>;
  if (a.size() != 3) invalid_input("triple product needs three classes");
  for (const auto& x : a)
    if (!r.is_cocycle(x)) invalid_input("triple product: representative is not a cocycle");
  MasseyReport<F> rep;
  rep.k = 3;
  detail::entry_degree(a, 0, 3, rep.J, rep.h);
  rep.h = a[0].h + a[1].h + a[2].h + 1;
  if (!detail::pairwise_disjoint(a)) {
    // R(K) vanishes in non-squarefree multidegrees
    rep.defined = rep.strictly_defined = true;
    rep.trivial = Triviality::Yes;
    rep.note = "multidegrees overlap: the target component is zero";
    return rep;
  }
  auto c01 = r.bound(r.mul(K::bar(a[0]), a[1]));
  auto c12 = r.bound(r.mul(K::bar(a[1]), a[2]));
  if (!c01 || !c12) {
    rep.note = "a consecutive product is nonzero";
    return rep;
  }
  rep.defined = rep.strictly_defined = true;
  // a(C) = -(ā_0 c_{13} + c̄_{02} a_2) in 0-based positions
  Cochain<F> v = K::add(r.mul(K::bar(a[0]), *c12), r.mul(K::bar(*c01), a[2]));
  v = K::scale(v, F(-1));
  if (!r.is_cocycle(v)) throw Error(ErrorKind::InvalidInput, "internal: Massey value is not a cocycle");
  rep.values.push_back(r.class_of(v).coords);
  int hdim = r.h_dim(rep.J, rep.h);
  Mask J12 = a[1].J | a[2].J, J01 = a[0].J | a[1].J;
  int h12 = a[1].h + a[2].h + 1, h01 = a[0].h + a[1].h + 1;
  const auto& H12 = r.cohomology(J12, h12);
  const auto& H01 = r.cohomology(J01, h01);
  for (const auto& z : H12.reps) {
    auto cls = r.class_of(r.mul(K::bar(a[0]), Cochain<F>{J12, h12, z})).coords;
    if (!is_zero_vec(cls)) rep.indeterminacy.push_back(cls);
  }
  for (const auto& w : H01.reps) {
    auto cls = r.class_of(r.mul(K::bar(Cochain<F>{J01, h01, w}), a[2])).coords;
    if (!is_zero_vec(cls)) rep.indeterminacy.push_back(cls);
  }
  rep.trivial = detail::in_span(rep.indeterminacy, rep.values[0], hdim) ? Triviality::Yes : Triviality::No;
  rep.systems = 1;
  rep.witness = {{0, 2, *c01}, {1, 3, *c12}};
  rep.witness_value = v;
  return rep;
}

/// Exhaustive search over all multigraded defining systems over F2.
MasseyReport<F2> kfold_f2(const Koszul<F2>& r, const std::vector<Cochain<F2>>& a, long long budget = 1 << 20,
                          bool check_strict = true);

struct TripleScan {
  int classes = 0;
  long long triples = 0;
  long long overlapping = 0;  // some pair of multidegrees meets; defined and trivial
  long long defined = 0;      // includes overlapping
  long long trivial = 0;
  long long nontrivial = 0;
  std::vector<std::array<int, 3>> nontrivial_examples;  // indices into the degree basis
};

/// All ordered triples of multigraded basis classes of total degree `degree`.
TripleScan scan_triples(const SimplicialComplex& k, int degree, Field field, int threads = 1,
                        int max_vertices = kDefaultMaxVertices);

}  // namespace nesto
