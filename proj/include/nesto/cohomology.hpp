#pragma once

// The Koszul algebra R(K) = Λ[u_1..u_m] ⊗ k[K] / (v_i^2 = u_i v_i = 0), du_i = v_i,
// computed one multidegree at a time. A monomial u_σ v_τ (σ ∩ τ = ∅, τ ∈ K)
// lives in multidegree J = σ ∪ τ and homological degree h = |σ|; its
// bidegree is (-h, 2J) and its total degree 2|J| - h.
//
// Sign conventions: d(u_σ v_τ) = Σ_{i∈σ} (-1)^{#{j∈σ : j<i}} u_{σ∖i} v_{τ∪i}
// and u_σ1 v_τ1 · u_σ2 v_τ2 = (-1)^{#{(a,b) ∈ σ1×σ2 : a>b}} u_{σ1∪σ2} v_{τ1∪τ2}.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nesto/bits.hpp"
#include "nesto/complexes.hpp"
#include "nesto/error.hpp"
#include "nesto/field.hpp"
#include "nesto/linalg.hpp"

namespace nesto {

constexpr int kDefaultMaxVertices = 20;

/// Homogeneous element of R(K): coefficients on the basis of component (J, h).
template <class F>
struct Cochain {
  Mask J = 0;
  int h = 0;
  Vec<F> c;
  bool is_zero() const { return is_zero_vec(c); }
  int total_degree() const { return 2 * popcount(J) - h; }
};

/// Cohomology class given by coordinates in the chosen basis of H^{-h,2J}.
template <class F>
struct CohomClass {
  Mask J = 0;
  int h = 0;
  Vec<F> coords;
  bool is_zero() const { return is_zero_vec(coords); }
  int total_degree() const { return 2 * popcount(J) - h; }
};

inline int sign_count_below(Mask s, int i) { return popcount(s & ((Mask{1} << i) - 1)); }

inline int inversions(Mask a, Mask b) {
  int n = 0;
  for_each_bit(b, [&](int j) { n += popcount(a >> (j + 1)); });
  return n;
}

template <class F>
class Koszul {
 public:
  explicit Koszul(const SimplicialComplex& k, int max_vertices = kDefaultMaxVertices) : m_(k.m()) {
    if (m_ > max_vertices || m_ > 64)
      invalid_input("Koszul algebra: " + std::to_string(m_) + " vertices exceeds the limit of " +
                    std::to_string(std::min(max_vertices, 64)));
    for (const auto& f : k.faces()) faces_.push_back(f.as_mask());
    face_set_.insert(faces_.begin(), faces_.end());
  }

  int m() const { return m_; }
  bool is_face(Mask t) const { return face_set_.count(t) != 0; }

  /// Basis of component (J, h): faces τ ⊆ J with |τ| = |J| - h, listed by τ.
  const std::vector<Mask>& basis(Mask J, int h) const { return comp(J, h).taus; }
  int dim(Mask J, int h) const { return static_cast<int>(basis(J, h).size()); }

  Cochain<F> zero(Mask J, int h) const { return {J, h, Vec<F>(dim(J, h), F(0))}; }
  /// The monomial u_{J∖τ} v_τ.
  Cochain<F> monomial(Mask J, Mask tau) const {
    int h = popcount(J) - popcount(tau);
    Cochain<F> x = zero(J, h);
    const auto& cp = comp(J, h);
    auto it = cp.index.find(tau);
    if (it == cp.index.end()) invalid_input("monomial is not in the Koszul algebra");
    x.c[it->second] = F(1);
    return x;
  }

  /// Matrix of d : C(J, h) -> C(J, h-1).
  Matrix<F> d_matrix(Mask J, int h) const {
    const auto& src = comp(J, h);
    const auto& dst = comp(J, h - 1);
    Matrix<F> mat(static_cast<int>(dst.taus.size()), static_cast<int>(src.taus.size()));
    for (int col = 0; col < mat.cols; ++col) {
      Mask tau = src.taus[col], sigma = J & ~tau;
      for_each_bit(sigma, [&](int i) {
        auto it = dst.index.find(tau | (Mask{1} << i));
        if (it == dst.index.end()) return;
        mat(it->second, col) = (sign_count_below(sigma, i) % 2) ? F(-1) : F(1);
      });
    }
    return mat;
  }

  Cochain<F> d(const Cochain<F>& x) const {
    if (x.c.empty()) return {x.J, x.h - 1, {}};
    Cochain<F> y = zero(x.J, x.h - 1);
    const auto& src = comp(x.J, x.h);
    const auto& dst = comp(x.J, x.h - 1);
    for (std::size_t col = 0; col < src.taus.size(); ++col) {
      if (nesto::is_zero(x.c[col])) continue;
      Mask tau = src.taus[col], sigma = x.J & ~tau;
      for_each_bit(sigma, [&](int i) {
        auto it = dst.index.find(tau | (Mask{1} << i));
        if (it == dst.index.end()) return;
        if (sign_count_below(sigma, i) % 2)
          y.c[it->second] -= x.c[col];
        else
          y.c[it->second] += x.c[col];
      });
    }
    return y;
  }

  /// Product; zero (in the union multidegree) when the multidegrees meet.
  Cochain<F> mul(const Cochain<F>& a, const Cochain<F>& b) const {
    Mask J = a.J | b.J;
    int h = a.h + b.h;
    if ((a.J & b.J) || a.c.empty() || b.c.empty()) return {J, h, {}};
    Cochain<F> y = zero(J, h);
    const auto& ca = comp(a.J, a.h);
    const auto& cb = comp(b.J, b.h);
    const auto& cy = comp(J, h);
    for (std::size_t i = 0; i < ca.taus.size(); ++i) {
      if (nesto::is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < cb.taus.size(); ++j) {
        if (nesto::is_zero(b.c[j])) continue;
        auto it = cy.index.find(ca.taus[i] | cb.taus[j]);
        if (it == cy.index.end()) continue;
        F v = a.c[i] * b.c[j];
        Mask s1 = a.J & ~ca.taus[i], s2 = b.J & ~cb.taus[j];
        if (inversions(s1, s2) % 2)
          y.c[it->second] -= v;
        else
          y.c[it->second] += v;
      }
    }
    return y;
  }

  /// x̄ = (-1)^{deg x} x.
  static Cochain<F> bar(Cochain<F> x) {
    if (x.h % 2)
      for (auto& v : x.c) v = -v;
    return x;
  }

  static Cochain<F> add(Cochain<F> a, const Cochain<F>& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    if (a.J != b.J || a.h != b.h) invalid_input("adding cochains of different degrees");
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }

  static Cochain<F> scale(Cochain<F> a, const F& s) {
    for (auto& v : a.c) v *= s;
    return a;
  }

  // ---- cohomology of a component ----

  struct HComp {
    int dim_c = 0;
    std::vector<Vec<F>> boundaries;  // basis of im d_{h+1}
    std::vector<Vec<F>> reps;        // cocycles completing it to a basis of ker d_h
    std::shared_ptr<ColumnSolver<F>> proj;   // on [boundaries | reps]
    std::shared_ptr<ColumnSolver<F>> solver; // on d_{h+1}
  };

  const HComp& cohomology(Mask J, int h) const {
    auto key = std::make_pair(J, h);
    if (auto it = hcache_.find(key); it != hcache_.end()) return it->second;
    HComp hc;
    hc.dim_c = dim(J, h);
    Matrix<F> up = d_matrix(J, h + 1);  // C(J,h+1) -> C(J,h)
    hc.solver = std::make_shared<ColumnSolver<F>>(up);
    {
      Matrix<F> r = up;
      auto piv = rref(r);
      for (int c : piv) {
        Vec<F> col(up.rows);
        for (int i = 0; i < up.rows; ++i) col[i] = up(i, c);
        hc.boundaries.push_back(std::move(col));
      }
    }
    auto kernel = nullspace(d_matrix(J, h));
    std::vector<Vec<F>> acc = hc.boundaries;
    int rk = static_cast<int>(acc.size());
    for (auto& z : kernel) {
      acc.push_back(z);
      if (rank(Matrix<F>::from_columns(hc.dim_c, acc)) > rk) {
        ++rk;
        hc.reps.push_back(z);
      } else {
        acc.pop_back();
      }
    }
    hc.proj = std::make_shared<ColumnSolver<F>>(Matrix<F>::from_columns(hc.dim_c, acc));
    return hcache_.emplace(key, std::move(hc)).first->second;
  }

  int h_dim(Mask J, int h) const { return static_cast<int>(cohomology(J, h).reps.size()); }

  bool is_cocycle(const Cochain<F>& z) const { return z.c.empty() || d(z).is_zero(); }

  /// Class of a cocycle in the chosen basis.
  CohomClass<F> class_of(const Cochain<F>& z) const {
    const auto& hc = cohomology(z.J, z.h);
    CohomClass<F> out{z.J, z.h, Vec<F>(hc.reps.size(), F(0))};
    if (z.c.empty()) return out;
    if (!is_cocycle(z)) invalid_input("class_of: not a cocycle");
    auto x = hc.proj->solve(z.c);
    if (!x) invalid_input("class_of: projection failed");
    std::size_t nb = hc.boundaries.size();
    for (std::size_t i = 0; i < hc.reps.size(); ++i) out.coords[i] = (*x)[nb + i];
    return out;
  }

  /// Representative cocycle of a class.
  Cochain<F> representative(const CohomClass<F>& a) const {
    const auto& hc = cohomology(a.J, a.h);
    Cochain<F> z = zero(a.J, a.h);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (int r = 0; r < hc.dim_c; ++r) z.c[r] += a.coords[i] * hc.reps[i][r];
    return z;
  }

  /// Some c with dc = z, if z is a coboundary.
  std::optional<Cochain<F>> bound(const Cochain<F>& z) const {
    const auto& hc = cohomology(z.J, z.h);
    Cochain<F> c = zero(z.J, z.h + 1);
    if (z.c.empty() || z.is_zero()) return c;
    auto x = hc.solver->solve(z.c);
    if (!x) return std::nullopt;
    c.c = *x;
    return c;
  }

  /// Basis of the cocycles of d_h in C(J, h).
  std::vector<Cochain<F>> cocycle_basis(Mask J, int h) const {
    std::vector<Cochain<F>> out;
    for (auto& v : nullspace(d_matrix(J, h))) out.push_back({J, h, std::move(v)});
    return out;
  }

  CohomClass<F> cup(const CohomClass<F>& a, const CohomClass<F>& b) const {
    Mask J = a.J | b.J;
    int h = a.h + b.h;
    if (a.J & b.J) return {J, h, {}};
    return class_of(mul(representative(a), representative(b)));
  }

  /// Basis classes of total degree p over all multidegrees, by J then index.
  std::vector<CohomClass<F>> basis_classes(int p) const {
    std::vector<CohomClass<F>> out;
    for (Mask J = 0; J < (Mask{1} << m_); ++J) {
      int h = 2 * popcount(J) - p;
      if (h < 0 || h > popcount(J)) continue;
      int n = h_dim(J, h);
      for (int i = 0; i < n; ++i) {
        CohomClass<F> c{J, h, Vec<F>(n, F(0))};
        c.coords[i] = F(1);
        out.push_back(std::move(c));
      }
    }
    return out;
  }

 private:
  struct Comp {
    std::vector<Mask> taus;
    std::unordered_map<Mask, int> index;
  };

  const Comp& comp(Mask J, int h) const {
    auto key = std::make_pair(J, h);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Comp c;
    int want = popcount(J) - h;
    if (h >= 0 && want >= 0)
      for (Mask t : faces_)
        if ((t & ~J) == 0 && popcount(t) == want) {
          c.index.emplace(t, static_cast<int>(c.taus.size()));
          c.taus.push_back(t);
        }
    return cache_.emplace(key, std::move(c)).first->second;
  }

  int m_;
  std::vector<Mask> faces_;
  std::unordered_set<Mask> face_set_;
  mutable std::map<std::pair<Mask, int>, Comp> cache_;
  mutable std::map<std::pair<Mask, int>, HComp> hcache_;
};

// ---- reports ----

struct BigradedEntry {
  int i;  // homological degree, component (-i, 2J)
  Mask J;
  int dim;
};

struct BigradedDims {
  std::vector<BigradedEntry> entries;  // nonzero components, by J then i
  std::vector<long long> total;        // total[p] = dim H^p, p = 0..2m
};

/// Cohomology of R(K) by ranks of the Koszul differential in each multidegree.
BigradedDims koszul_cohomology(const SimplicialComplex& k, Field field, int threads = 1,
                               int max_vertices = kDefaultMaxVertices);

struct HochsterMismatch {
  Mask J;
  int i;
  int koszul;
  int hochster;
};

struct HochsterReport {
  long long components = 0;  // (J, i) pairs compared
  std::vector<HochsterMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

HochsterReport hochster_check(const SimplicialComplex& k, Field field, int threads = 1,
                              int max_vertices = kDefaultMaxVertices);

/// b^p(Z_K) = Σ_J dim H̃^{p-|J|-1}(K_J), p = 0..2m.
std::vector<long long> betti_za(const SimplicialComplex& k, Field field, int threads = 1,
                                int max_vertices = kDefaultMaxVertices);

struct SplitReport {
  long long components = 0;
  std::vector<HochsterMismatch> mismatches;  // koszul = in k, hochster = in k_J
  bool ok() const { return mismatches.empty(); }
};

/// Components (-i, 2J') with J' ⊆ j agree between R(K) and R(K_j).
/// The size limit applies to j; k may have up to 64 vertices.
SplitReport split_check(const SimplicialComplex& k, const VertexSet& j, Field field,
                        int max_vertices = kDefaultMaxVertices);

/// Largest c with b^p(Z_K) = 0 for 1 <= p <= c.
int connectivity(const SimplicialComplex& k, Field field, int threads = 1, int max_vertices = kDefaultMaxVertices);

}  // namespace nesto
