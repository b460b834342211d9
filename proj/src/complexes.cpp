#include "nesto/complexes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "nesto/error.hpp"

namespace nesto {

namespace {

std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  // larger sets come last; keep a set unless some larger one contains it
  std::size_t first_larger = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (first_larger <= i) {
      first_larger = i;
      while (first_larger < sets.size() && sets[first_larger].size() == sets[i].size()) ++first_larger;
    }
    bool covered = false;
    for (std::size_t j = first_larger; j < sets.size() && !covered; ++j)
      if (sets[i].subset_of(sets[j])) covered = true;
    if (!covered) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

// ---- SimplicialComplex ----

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets, std::vector<std::string> labels)
    : m_(m), labels_(std::move(labels)) {
  if (m < 0 || m > VertexSet::kCapacity) invalid_input("vertex count out of range (max 256)");
  VertexSet all = VertexSet::range(m);
  for (const auto& f : facets)
    if (!f.subset_of(all)) invalid_input("facet uses a vertex outside 0..m-1");
  facets_ = maximal_only(std::move(facets));
  if (labels_.empty())
    for (int v = 0; v < m; ++v) labels_.push_back(std::to_string(v + 1));
  if (static_cast<int>(labels_.size()) != m) invalid_input("label count differs from vertex count");
  VertexSet used;
  for (const auto& f : facets_) used |= f;
  ghosts_ = all - used;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

bool SimplicialComplex::is_face(const VertexSet& s) const {
  for (const auto& f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const auto& f : facets_) {
    auto el = f.elements();
    int k = static_cast<int>(el.size());
    if (k > 30) invalid_input("facet too large for face enumeration");
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
      VertexSet s;
      for (int i = 0; i < k; ++i)
        if ((sub >> i) & 1) s.insert(el[i]);
      seen.insert(s);
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> SimplicialComplex::face_counts() const {
  std::vector<long long> c(dim() + 2, 0);
  for (const auto& f : faces()) ++c[f.size()];
  return c;
}

FaceIndex::FaceIndex(const SimplicialComplex& k) {
  auto fs = k.faces();
  set_.insert(fs.begin(), fs.end());
}

SimplicialComplex boundary_simplex(int n) {
  std::vector<VertexSet> facets;
  for (int v = 0; v <= n; ++v) {
    VertexSet f = VertexSet::range(n + 1);
    f.erase(v);
    facets.push_back(f);
  }
  return SimplicialComplex(n + 1, facets);
}

// ---- nested set complexes ----

std::vector<Mask> nested_vertices(const BuildingSet& b) {
  if (!b.connected()) invalid_input("nested set complex needs a connected building set");
  std::vector<Mask> v;
  for (Mask s : b.sets())
    if (s != b.full()) v.push_back(s);
  return v;
}

SimplicialComplex nested_complex(const BuildingSet& b) {
  auto verts = nested_vertices(b);
  if (static_cast<int>(verts.size()) > VertexSet::kCapacity) invalid_input("nested set complex exceeds 256 vertices");
  std::unordered_map<Mask, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);

  // Maximal nested sets of B restricted to a member G: remove one element x,
  // split G\x into the maximal members it contains, recurse into each.
  std::unordered_map<Mask, std::vector<VertexSet>> memo;
  std::function<const std::vector<VertexSet>&(Mask)> facets_of = [&](Mask g) -> const std::vector<VertexSet>& {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::vector<VertexSet> out;
    for_each_bit(g, [&](int x) {
      Mask rest = g & ~(Mask{1} << x);
      std::vector<Mask> comps;
      for (Mask s : b.sets()) {
        if ((s & rest) != s) continue;
        bool inside_larger = false;
        for (Mask c : comps)
          if ((s & c) == s) inside_larger = true;
        if (inside_larger) continue;
        comps.erase(std::remove_if(comps.begin(), comps.end(), [&](Mask c) { return (c & s) == c; }), comps.end());
        comps.push_back(s);
      }
      std::vector<VertexSet> partial{VertexSet()};
      for (Mask c : comps) {
        const auto& sub = facets_of(c);
        std::vector<VertexSet> next;
        next.reserve(partial.size() * sub.size());
        for (const auto& p : partial)
          for (const auto& q : sub) {
            VertexSet f = p | q;
            f.insert(id.at(c));
            next.push_back(f);
          }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    });
    if (popcount(g) == 1) out = {VertexSet()};
    return memo.emplace(g, std::move(out)).first->second;
  };

  std::vector<VertexSet> facets = facets_of(b.full());
  std::vector<std::string> labels;
  for (Mask s : verts) labels.push_back(mask_to_string(s));
  return SimplicialComplex(static_cast<int>(verts.size()), std::move(facets), std::move(labels));
}

// ---- Stanley-Reisner description ----

SimplicialComplex from_min_nonfaces(int m, const std::vector<VertexSet>& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      if (a != b && gens[a].subset_of(gens[b])) invalid_input("minimal non-faces must be incomparable");
  VertexSet all = VertexSet::range(m);
  for (const auto& g : gens)
    if (!g.subset_of(all) || g.empty()) invalid_input("non-face outside vertex range or empty");

  // a set is a facet iff it contains no generator and every other vertex completes one
  std::vector<std::vector<int>> gens_with(m);
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].for_each([&](int v) { gens_with[v].push_back(static_cast<int>(i)); });
  auto blocked = [&](const VertexSet& s, int v) {
    for (int gi : gens_with[v])
      if ((gens[gi] - s).size() == 1) return true;  // only v is missing
    return false;
  };

  std::vector<VertexSet> facets;
  VertexSet cur;
  std::function<void(int)> go = [&](int v) {
    if (v == m) {
      for (int u = 0; u < m; ++u)
        if (!cur.contains(u) && !blocked(cur, u)) return;
      facets.push_back(cur);
      return;
    }
    if (!blocked(cur, v)) {
      cur.insert(v);
      go(v + 1);
      cur.erase(v);
    }
    go(v + 1);
  };
  go(0);
  return SimplicialComplex(m, facets);
}

std::vector<VertexSet> min_nonfaces(const SimplicialComplex& k) {
  FaceIndex idx(k);
  std::vector<VertexSet> out;
  k.ghosts().for_each([&](int v) { out.push_back(VertexSet::of({v})); });
  for (const auto& f : k.faces()) {
    int top = f.max();
    for (int v = top + 1; v < k.m(); ++v) {
      if (k.ghosts().contains(v)) continue;
      VertexSet s = f;
      s.insert(v);
      if (idx.contains(s)) continue;
      bool minimal = true;
      f.for_each([&](int u) {
        if (!minimal) return;
        VertexSet t = s;
        t.erase(u);
        if (!idx.contains(t)) minimal = false;
      });
      if (minimal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_flag(const SimplicialComplex& k) {
  for (const auto& g : min_nonfaces(k))
    if (g.size() != 2) return false;
  return true;
}

std::vector<VertexSet> join_components(const SimplicialComplex& k) {
  std::vector<int> parent(k.m());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& g : min_nonfaces(k)) {
    int r = find(g.min());
    g.for_each([&](int v) { parent[find(v)] = r; });
  }
  std::map<int, VertexSet> comps;
  for (int v = 0; v < k.m(); ++v) comps[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (auto& [r, s] : comps) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
  return out;
}

// ---- Q^n ----

namespace {

struct QLayout {
  int n;
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, int> w;  // (k, n+k+i) -> vertex id
};

QLayout q_layout(int n) {
  QLayout lay{n, {}, {}};
  for (int j = 1; j <= 2 * n; ++j) lay.labels.push_back("v" + std::to_string(j));
  int id = 2 * n;
  for (int i = 1; i <= n - 2; ++i)
    for (int k = 1; k <= n - i; ++k) {
      lay.w[{k, n + k + i}] = id++;
      lay.labels.push_back("w" + std::to_string(k) + "," + std::to_string(n + k + i));
    }
  return lay;
}

}  // namespace

SimplicialComplex q_complex(int n) {
  if (n < 2) invalid_input("q_complex needs n >= 2");
  QLayout lay = q_layout(n);
  int m = static_cast<int>(lay.labels.size());
  if (m > VertexSet::kCapacity) invalid_input("q_complex too large");
  // boundary of the cross-polytope: one of v_k, v_{n+k} for each k
  std::vector<VertexSet> facets;
  for (std::uint32_t choice = 0; choice < (1u << n); ++choice) {
    VertexSet f;
    for (int k = 0; k < n; ++k) f.insert((choice >> k) & 1 ? n + k : k);
    facets.push_back(f);
  }
  // truncating the face F_k ∩ F_{n+k+i} of the cube subdivides the edge
  // {v_k, v_{n+k+i}} of the nerve; cut order: i descending, then k ascending
  for (int i = n - 2; i >= 1; --i)
    for (int k = 1; k <= n - i; ++k) {
      int a = k - 1, b = n + k + i - 1, w = lay.w.at({k, n + k + i});
      std::vector<VertexSet> next;
      bool hit = false;
      for (const auto& f : facets) {
        if (f.contains(a) && f.contains(b)) {
          hit = true;
          VertexSet fa = f, fb = f;
          fa.erase(a);
          fa.insert(w);
          fb.erase(b);
          fb.insert(w);
          next.push_back(fa);
          next.push_back(fb);
        } else {
          next.push_back(f);
        }
      }
      if (!hit) invalid_input("q_complex: truncated face is missing");
      facets = std::move(next);
    }
  return SimplicialComplex(m, std::move(facets), lay.labels);
}

std::vector<VertexSet> q_listed_generators(int n) {
  if (n < 2) invalid_input("q_complex needs n >= 2");
  QLayout lay = q_layout(n);
  auto v = [](int j) { return j - 1; };
  std::vector<VertexSet> out;
  for (int i = 0; i <= n - 2; ++i)
    for (int k = 1; k <= n - i; ++k) out.push_back(VertexSet::of({v(k), v(n + k + i)}));
  for (const auto& [key, wid] : lay.w) {
    int k1 = key.first, i1 = key.second - n - k1;
    for (int l = 0; l <= n - 2; ++l)
      if (l != i1 && n + k1 + l <= 2 * n) out.push_back(VertexSet::of({wid, v(n + k1 + l)}));
    for (int p = 1; p <= k1 + i1; ++p)
      if (p != k1) out.push_back(VertexSet::of({wid, v(p)}));
    for (const auto& [key2, wid2] : lay.w) {
      int k2 = key2.first, i2 = key2.second - n - k2;
      if (wid2 != wid && (k1 + i1 == k2 || k2 + i2 == k1)) out.push_back(VertexSet::of({wid, wid2}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- derived complexes ----

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const VertexSet& j) {
  auto keep = j.elements();
  for (int v : keep)
    if (v >= k.m()) invalid_input("full_subcomplex: vertex out of range");
  std::vector<int> pos(k.m(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<int>(i);
    labels.push_back(k.label(keep[i]));
  }
  std::vector<VertexSet> facets;
  for (const auto& f : k.facets()) {
    VertexSet g;
    (f & j).for_each([&](int v) { g.insert(pos[v]); });
    facets.push_back(g);
  }
  return SimplicialComplex(static_cast<int>(keep.size()), std::move(facets), std::move(labels));
}

SimplicialComplex multiwedge(const SimplicialComplex& k, const std::vector<int>& j) {
  if (static_cast<int>(j.size()) != k.m()) invalid_input("multiwedge: need one multiplicity per vertex");
  std::vector<int> offset;
  int total = 0;
  bool wide = k.m() >= 10;
  for (int x : j) {
    if (x < 1) invalid_input("multiwedge: multiplicities must be positive");
    offset.push_back(total);
    total += x;
    if (x >= 10) wide = true;
  }
  if (total > VertexSet::kCapacity) invalid_input("multiwedge too large");
  std::vector<std::string> labels;
  for (int v = 0; v < k.m(); ++v)
    for (int t = 1; t <= j[v]; ++t) labels.push_back(k.label(v) + (wide ? "." : "") + std::to_string(t));
  std::vector<VertexSet> gens;
  for (const auto& g : min_nonfaces(k)) {
    VertexSet e;
    g.for_each([&](int v) {
      for (int t = 0; t < j[v]; ++t) e.insert(offset[v] + t);
    });
    gens.push_back(e);
  }
  SimplicialComplex base = from_min_nonfaces(total, gens);
  return SimplicialComplex(total, base.facets(), labels);
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
  VertexSet support;
  std::vector<VertexSet> star;
  for (const auto& f : k.facets())
    if (f.contains(v)) {
      VertexSet g = f;
      g.erase(v);
      star.push_back(g);
      support |= g;
    }
  auto keep = support.elements();
  std::vector<int> pos(k.m(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<int>(i);
    labels.push_back(k.label(keep[i]));
  }
  std::vector<VertexSet> facets;
  for (const auto& g : star) {
    VertexSet h;
    g.for_each([&](int u) { h.insert(pos[u]); });
    facets.push_back(h);
  }
  return SimplicialComplex(static_cast<int>(keep.size()), std::move(facets), std::move(labels));
}

// ---- face data ----

FaceData face_data(const SimplicialComplex& k) {
  if (!k.is_pure()) invalid_input("face_data: complex is not pure");
  int n = k.dim() + 1;
  auto c = k.face_counts();
  FaceData fd;
  fd.f.resize(n);
  for (int d = 0; d < n; ++d) fd.f[d] = c[n - d];
  for (int d = 0; d <= n; ++d) fd.F += BiPoly::monomial(d, n - d, Rational(c[n - d]));
  fd.H = fd.F.shear();
  fd.ds_symmetric = fd.H == fd.H.swapped();
  return fd;
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  auto c = k.face_counts();
  for (std::size_t s = 1; s < c.size(); ++s) chi += (s % 2 ? 1 : -1) * c[s];
  return chi;
}

}  // namespace nesto
