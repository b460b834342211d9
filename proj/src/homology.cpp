#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "nesto/complexes.hpp"
#include "nesto/error.hpp"
#include "nesto/linalg.hpp"

namespace nesto {

namespace {

template <class F>
std::vector<int> reduced_cohomology_impl(const SimplicialComplex& k) {
  auto faces = k.faces();
  if (faces.empty()) return {};  // void complex
  int top = k.dim() + 1;  // largest face size
  std::vector<std::vector<VertexSet>> by_size(top + 1);
  for (auto& f : faces) by_size[f.size()].push_back(f);
  std::vector<std::unordered_map<VertexSet, int, VertexSetHash>> index(top + 1);
  for (int s = 0; s <= top; ++s)
    for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s][by_size[s][i]] = static_cast<int>(i);

  // rank of the coboundary from faces of size s to faces of size s+1
  std::vector<int> rk(top + 1, 0);
  for (int s = 0; s < top; ++s) {
    Matrix<F> m(static_cast<int>(by_size[s + 1].size()), static_cast<int>(by_size[s].size()));
    for (std::size_t r = 0; r < by_size[s + 1].size(); ++r) {
      const auto& g = by_size[s + 1][r];
      int pos = 0;
      g.for_each([&](int v) {
        VertexSet f = g;
        f.erase(v);
        m(static_cast<int>(r), index[s].at(f)) = (pos % 2) ? F(-1) : F(1);
        ++pos;
      });
    }
    rk[s] = rank(m);
  }
  std::vector<int> out(top + 1, 0);
  for (int s = 0; s <= top; ++s) {
    int dim = static_cast<int>(by_size[s].size()) - rk[s] - (s > 0 ? rk[s - 1] : 0);
    out[s] = dim;  // degree s-1
  }
  return out;
}

}  // namespace

std::vector<int> reduced_cohomology(const SimplicialComplex& k, Field field) {
  return with_field(field, [&]<class F>() { return reduced_cohomology_impl<F>(k); });
}

std::vector<int> reduced_betti(const SimplicialComplex& k, Field field) {
  auto all = reduced_cohomology(k, field);
  if (all.empty()) return {};
  return std::vector<int>(all.begin() + 1, all.end());
}

// ---- isomorphism ----

namespace {

struct IsoData {
  int m;
  std::vector<VertexSet> adj;
  std::vector<int> color;
  std::unordered_set<VertexSet, VertexSetHash> facets;
};

// Colour refinement shared between both complexes so colours are comparable.
void refine(IsoData& a, IsoData& b) {
  for (int round = 0; round < 3; ++round) {
    std::map<std::vector<long long>, int> dict;
    auto next = [&](IsoData& d) {
      std::vector<std::vector<long long>> sig(d.m);
      for (int v = 0; v < d.m; ++v) {
        std::vector<long long> nb;
        d.adj[v].for_each([&](int u) { nb.push_back(d.color[u]); });
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(d.color[v]);
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      return sig;
    };
    auto sa = next(a), sb = next(b);
    for (auto& s : sa) dict.emplace(s, 0);
    for (auto& s : sb) dict.emplace(s, 0);
    int id = 0;
    for (auto& [s, v] : dict) v = id++;
    for (int v = 0; v < a.m; ++v) a.color[v] = dict[sa[v]];
    for (int v = 0; v < b.m; ++v) b.color[v] = dict[sb[v]];
  }
}

IsoData make_data(const SimplicialComplex& k) {
  IsoData d{k.m(), std::vector<VertexSet>(k.m()), std::vector<int>(k.m(), 0), {}};
  std::vector<long long> fc(k.m(), 0);
  for (const auto& f : k.facets()) {
    d.facets.insert(f);
    f.for_each([&](int v) {
      ++fc[v];
      d.adj[v] |= f;
    });
  }
  for (int v = 0; v < k.m(); ++v) {
    d.adj[v].erase(v);
    d.color[v] = static_cast<int>(fc[v] * 1000 + d.adj[v].size());
  }
  return d;
}

}  // namespace

IsoResult iso(const SimplicialComplex& k1, const SimplicialComplex& k2, long long node_budget) {
  IsoResult res;
  if (k1.m() != k2.m() || k1.facets().size() != k2.facets().size() || k1.ghosts().size() != k2.ghosts().size())
    return res;
  {
    std::vector<int> s1, s2;
    for (const auto& f : k1.facets()) s1.push_back(f.size());
    for (const auto& f : k2.facets()) s2.push_back(f.size());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return res;
  }
  IsoData a = make_data(k1), b = make_data(k2);
  {
    // initial colours must be compared before refinement renumbers them
    auto c1 = a.color, c2 = b.color;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) return res;
  }
  refine(a, b);
  {
    auto c1 = a.color, c2 = b.color;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) return res;
  }
  int m = k1.m();
  std::map<int, int> class_size;
  for (int c : a.color) ++class_size[c];

  // placement order: next vertex has most placed neighbours, then rarest colour
  std::vector<int> order;
  std::vector<char> placed(m, 0);
  std::vector<int> placed_nb(m, 0);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int v = 0; v < m; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && class_size[a.color[v]] < class_size[a.color[best]]))
        best = v;
    }
    order.push_back(best);
    placed[best] = 1;
    a.adj[best].for_each([&](int u) { ++placed_nb[u]; });
  }

  std::vector<int> img(m, -1);
  std::vector<char> used(m, 0);
  bool out_of_budget = false;
  auto facets_ok = [&]() {
    for (const auto& f : k1.facets()) {
      VertexSet g;
      f.for_each([&](int v) { g.insert(img[v]); });
      if (!b.facets.count(g)) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int step) -> bool {
    if (step == m) return facets_ok();
    if (++res.nodes > node_budget) {
      out_of_budget = true;
      return false;
    }
    int v = order[step];
    for (int w = 0; w < m; ++w) {
      if (used[w] || b.color[w] != a.color[v]) continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        int u = order[s];
        if (a.adj[v].contains(u) != b.adj[w].contains(img[u])) ok = false;
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      if (go(step + 1)) return true;
      used[w] = 0;
      img[v] = -1;
      if (out_of_budget) return false;
    }
    return false;
  };
  if (go(0)) {
    res.status = IsoResult::Found;
    res.map = img;
  } else {
    res.status = out_of_budget ? IsoResult::Unknown : IsoResult::None;
  }
  return res;
}

}  // namespace nesto
