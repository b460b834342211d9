#include "nesto/buildsets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "nesto/error.hpp"

namespace nesto {

std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  });
  return s + "}";
}

bool subset_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // the first differing label decides
  Mask diff = a ^ b;
  return (a >> lowest(diff)) & 1;
}

Mask map_mask(Mask s, const std::vector<int>& perm) {
  Mask r = 0;
  for_each_bit(s, [&](int i) { r |= Mask{1} << perm[i]; });
  return r;
}

Mask compress(Mask s, Mask support) {
  Mask r = 0;
  int k = 0;
  for_each_bit(support, [&](int i) {
    if ((s >> i) & 1) r |= Mask{1} << k;
    ++k;
  });
  return r;
}

// ---- Graph ----

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> e) : n(n_vertices) {
  if (n < 1 || n > 64) invalid_input("graph needs 1..64 vertices");
  for (auto& [a, b] : e) {
    if (a < 1 || b < 1 || a > n || b > n) invalid_input("edge endpoint out of range");
    if (a == b) invalid_input("graph loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) invalid_input("duplicate edge");
  edges = std::move(e);
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  return Graph(n, e);
}

Graph Graph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 2; a <= n; ++a) e.emplace_back(1, a);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) return path(n);
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

// ---- validation ----

ValidationReport validate(const std::vector<Mask>& sets, int ground) {
  if (ground < 1) invalid_input("empty ground set");
  if (ground > 64) invalid_input("ground set larger than 64 elements");
  ValidationReport rep;
  Mask full = full_mask(ground);
  std::unordered_set<Mask> index;
  for (Mask s : sets) {
    if (s == 0 || (s & ~full)) {
      rep.violations.push_back({"range", {s}});
      continue;
    }
    index.insert(s);
  }
  for (int i = 0; i < ground; ++i)
    if (!index.count(Mask{1} << i)) rep.violations.push_back({"singleton", {Mask{1} << i}});
  std::vector<Mask> uniq(index.begin(), index.end());
  std::sort(uniq.begin(), uniq.end(), subset_less);
  for (std::size_t a = 0; a < uniq.size(); ++a)
    for (std::size_t b = a + 1; b < uniq.size(); ++b)
      if ((uniq[a] & uniq[b]) && !index.count(uniq[a] | uniq[b]))
        rep.violations.push_back({"union", {uniq[a], uniq[b]}});
  rep.is_building_set = rep.violations.empty();
  rep.is_connected = index.count(full) != 0;
  return rep;
}

// ---- BuildingSet ----

BuildingSet::BuildingSet(int ground, std::vector<Mask> sets) : ground_(ground) {
  auto rep = validate(sets, ground);
  if (!rep.is_building_set) {
    const auto& v = rep.violations.front();
    std::string w;
    for (Mask m : v.witness) w += mask_to_string(m);
    invalid_input("not a building set: " + v.condition + " condition fails at " + w);
  }
  std::sort(sets.begin(), sets.end(), subset_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
  index_.insert(sets_.begin(), sets_.end());
}

std::vector<Mask> BuildingSet::maximal() const {
  std::vector<Mask> out;
  for (Mask s : sets_) {
    bool is_max = true;
    for (Mask t : sets_)
      if (t != s && (s & t) == s) {
        is_max = false;
        break;
      }
    if (is_max) out.push_back(s);
  }
  return out;
}

std::string BuildingSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) s += ",";
    s += mask_to_string(sets_[i]);
  }
  return s + "}";
}

// ---- constructors ----

BuildingSet standard(StdFamily family, int n) {
  if (n < 0) invalid_input("dimension must be nonnegative");
  if (n + 1 > 64) invalid_input("dimension too large");
  int g = n + 1;
  Mask full = full_mask(g);
  std::vector<Mask> sets;
  for (int i = 0; i < g; ++i) sets.push_back(Mask{1} << i);
  switch (family) {
    case StdFamily::Simplex:
      sets.push_back(full);
      break;
    case StdFamily::Cube:
      for (int i = 2; i <= g; ++i) sets.push_back(full_mask(i));
      break;
    case StdFamily::Mas: {
      if (n < 2) invalid_input("mas building set needs n >= 2");
      // {1,2} plus any subset of {3..n+1}
      Mask tail = full & ~Mask{3};
      for (Mask t = tail;; t = (t - 1) & tail) {
        sets.push_back(Mask{3} | t);
        if (t == 0) break;
      }
      // {1} plus a nonempty subset of {3..n}
      Mask mid = full_mask(n) & ~Mask{3};
      for (Mask t = mid; t; t = (t - 1) & mid) sets.push_back(Mask{1} | t);
      break;
    }
    case StdFamily::Gamma: {
      if (n < 2) invalid_input("gamma building set needs n >= 2");
      Mask first_n = full_mask(n);
      for (Mask t = first_n; t; t = (t - 1) & first_n)
        if (popcount(t) >= 2) sets.push_back(t);
      // {1, n+1} plus any subset of {2..n}
      Mask mid = first_n & ~Mask{1};
      Mask ends = Mask{1} | (Mask{1} << n);
      for (Mask t = mid;; t = (t - 1) & mid) {
        sets.push_back(ends | t);
        if (t == 0) break;
      }
      sets.push_back(full);
      break;
    }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return BuildingSet(g, sets);
}

BuildingSet graphical(const Graph& g) {
  if (g.n < 1) invalid_input("empty graph");
  if (g.n > 30) invalid_input("graphical building set limited to 30 vertices");
  std::vector<Mask> adj(g.n, 0);
  for (auto [a, b] : g.edges) {
    adj[a - 1] |= Mask{1} << (b - 1);
    adj[b - 1] |= Mask{1} << (a - 1);
  }
  std::vector<Mask> sets;
  Mask full = full_mask(g.n);
  for (Mask s = 1; s <= full; ++s) {
    // flood fill inside s from its lowest vertex
    Mask seen = Mask{1} << lowest(s), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj[v] & s; });
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) sets.push_back(s);
  }
  return BuildingSet(g.n, sets);
}

BuildingSet restriction(const BuildingSet& b, Mask s) {
  if (!b.contains(s)) invalid_input("restriction: " + mask_to_string(s) + " is not a member");
  std::vector<Mask> sets;
  for (Mask t : b.sets())
    if ((t & s) == t) sets.push_back(compress(t, s));
  return BuildingSet(popcount(s), sets);
}

BuildingSet contraction(const BuildingSet& b, Mask s) {
  if (!b.contains(s)) invalid_input("contraction: " + mask_to_string(s) + " is not a member");
  Mask rest = b.full() & ~s;
  if (rest == 0) invalid_input("contraction by the whole ground set is empty");
  std::vector<Mask> sets;
  for (Mask t = rest; t; t = (t - 1) & rest)
    if (b.contains(t) || b.contains(t | s)) sets.push_back(compress(t, rest));
  return BuildingSet(popcount(rest), sets);
}

std::optional<BuildingSet> sum(const BuildingSet& b1, const BuildingSet& b2) {
  if (b1.ground() != b2.ground()) invalid_input("sum: ground sets differ");
  int g = b1.ground();
  std::vector<Mask> common;
  for (Mask s : b1.sets())
    if (b2.contains(s)) common.push_back(s);
  std::size_t delta_size = g == 1 ? 1 : g + 1;
  if (common.size() != delta_size || !b1.contains(b1.full()) || !b2.contains(b2.full())) return std::nullopt;
  std::vector<Mask> all = b1.sets();
  all.insert(all.end(), b2.sets().begin(), b2.sets().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (!validate(all, g).is_building_set) return std::nullopt;
  return BuildingSet(g, all);
}

BuildingSet substitution(const BuildingSet& b, const std::vector<BuildingSet>& parts) {
  if (!b.connected()) invalid_input("substitution: outer building set must be connected");
  if (static_cast<int>(parts.size()) != b.ground()) invalid_input("substitution: need one part per element");
  std::vector<int> offset;
  int total = 0;
  for (const auto& p : parts) {
    if (!p.connected()) invalid_input("substitution: parts must be connected");
    offset.push_back(total);
    total += p.ground();
  }
  if (total > 64) invalid_input("substitution: ground too large");
  std::vector<Mask> sets;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Mask s : parts[i].sets()) sets.push_back(s << offset[i]);
  for (Mask s : b.sets()) {
    if (popcount(s) < 2) continue;
    Mask u = 0;
    for_each_bit(s, [&](int i) { u |= parts[i].full() << offset[i]; });
    sets.push_back(u);
  }
  return BuildingSet(total, sets);
}

BuildingSet disjoint_union(const BuildingSet& b1, const BuildingSet& b2) {
  if (b1.ground() + b2.ground() > 64) invalid_input("disjoint union: ground too large");
  std::vector<Mask> sets = b1.sets();
  for (Mask s : b2.sets()) sets.push_back(s << b1.ground());
  return BuildingSet(b1.ground() + b2.ground(), sets);
}

namespace {

std::vector<std::vector<int>> element_signatures(const BuildingSet& b) {
  std::vector<std::vector<int>> sig(b.ground());
  for (Mask s : b.sets()) for_each_bit(s, [&](int i) { sig[i].push_back(popcount(s)); });
  for (auto& v : sig) std::sort(v.begin(), v.end());
  return sig;
}

}  // namespace

std::optional<std::vector<int>> iso(const BuildingSet& b1, const BuildingSet& b2) {
  int n = b1.ground();
  if (n != b2.ground() || b1.size() != b2.size()) return std::nullopt;
  auto s1 = element_signatures(b1), s2 = element_signatures(b2);
  {
    auto a = s1, c = s2;
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    if (a != c) return std::nullopt;
  }
  // members of b1 grouped by their largest element, checked once that element is placed
  std::vector<std::vector<Mask>> by_top(n);
  for (Mask s : b1.sets()) by_top[63 - std::countl_zero(s)].push_back(s);

  std::vector<int> perm(n, -1);
  Mask used = 0;
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if ((used >> j) & 1 || s1[i] != s2[j]) continue;
      perm[i] = j;
      bool ok = true;
      for (Mask s : by_top[i])
        if (!b2.contains(map_mask(s, perm))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used |= Mask{1} << j;
      if (go(i + 1)) return true;
      used &= ~(Mask{1} << j);
    }
    perm[i] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return perm;
}

}  // namespace nesto
