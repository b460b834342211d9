#include "nesto/massey.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace nesto {

std::string triviality_name(Triviality t) {
  switch (t) {
    case Triviality::Yes: return "yes";
    case Triviality::No: return "no";
    case Triviality::Unknown: return "unknown";
  }
  return "?";
}

// ---- canonical classes ----

ClassFamily canonical_classes_q(int n) {
  if (n < 2) invalid_input("canonical classes need n >= 2");
  ClassFamily out{q_complex(n), {}};
  for (int i = 1; i <= n; ++i) {
    Mask vi = Mask{1} << (i - 1), vni = Mask{1} << (n + i - 1);
    out.classes.push_back({vi | vni, vi, "v" + std::to_string(i) + "u" + std::to_string(n + i)});
  }
  return out;
}

namespace {

int vertex_of(const std::vector<Mask>& verts, Mask m) {
  auto it = std::find(verts.begin(), verts.end(), m);
  if (it == verts.end()) invalid_input("no nested vertex " + mask_to_string(m));
  return static_cast<int>(it - verts.begin());
}

}  // namespace

ClassFamily canonical_classes_mas(int n) {
  if (n < 2) invalid_input("canonical classes need n >= 2");
  auto b = standard(StdFamily::Mas, n);
  auto verts = nested_vertices(b);
  ClassFamily out{nested_complex(b), {}};
  for (int i = 1; i <= n; ++i) {
    Mask a = Mask{1} << vertex_of(verts, full_mask(i));
    Mask c = Mask{1} << vertex_of(verts, Mask{1} << i);
    out.classes.push_back({a | c, a, "v" + mask_to_string(full_mask(i)) + "u{" + std::to_string(i + 1) + "}"});
  }
  return out;
}

MasEmbedding mas_embedding(int n, int r) {
  if (r < 2 || r > n) invalid_input("embedding needs 2 <= r <= n");
  Mask s = mask_of({1, 2, n + 1});
  for (int t = 3; t <= r; ++t) s |= Mask{1} << (t - 1);
  auto big_b = standard(StdFamily::Mas, n);
  auto small_b = standard(StdFamily::Mas, r);
  if (!(restriction(big_b, s) == small_b))
    invalid_input("restriction to " + mask_to_string(s) + " is not the building set of dimension " + std::to_string(r));
  auto big_v = nested_vertices(big_b), small_v = nested_vertices(small_b);
  MasEmbedding e{s, {nested_complex(big_b), {}}, canonical_classes_mas(r), std::vector<int>(big_v.size(), -1)};
  std::vector<int> back(small_v.size(), -1);
  for (std::size_t v = 0; v < big_v.size(); ++v) {
    if ((big_v[v] & ~s) != 0) continue;
    Mask c = compress(big_v[v], s);
    auto it = std::find(small_v.begin(), small_v.end(), c);
    if (it == small_v.end()) continue;
    e.vertex_map[v] = static_cast<int>(it - small_v.begin());
    back[e.vertex_map[v]] = static_cast<int>(v);
  }
  for (const auto& c : e.small.classes) {
    MonomialSpec m{map_vertices(c.J, back), map_vertices(c.tau, back), ""};
    std::string label = "v" + mask_to_string(big_v[lowest(m.tau)]) + "u" + mask_to_string(big_v[lowest(m.J & ~m.tau)]);
    m.label = label;
    e.big.classes.push_back(m);
  }
  return e;
}

// ---- k-fold products over F2 ----

namespace {

using K2 = Koszul<F2>;

struct Search {
  const K2& r;
  const std::vector<Cochain<F2>>& a;
  int k;
  long long budget;
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<Cochain<F2>>> zbasis;  // per order slot
  std::vector<std::vector<Cochain<F2>>> c;       // current system
  std::set<std::vector<std::uint32_t>> values;
  long long nodes = 0, systems = 0;
  bool aborted = false;
  bool have_nonzero_witness = false;
  std::vector<WitnessEntry<F2>> witness;
  Cochain<F2> witness_value;

  Search(const K2& r_, const std::vector<Cochain<F2>>& a_, long long budget_)
      : r(r_), a(a_), k(static_cast<int>(a_.size())), budget(budget_),
        c(k + 1, std::vector<Cochain<F2>>(k + 1)) {}

  Cochain<F2> product_sum(int i, int j) const {
    Mask J;
    int h;
    detail::entry_degree(a, i, j, J, h);
    Cochain<F2> t = r.zero(J, h - 1);
    for (int m = i + 1; m < j; ++m) t = K2::add(t, r.mul(K2::bar(c[i][m]), c[m][j]));
    return t;
  }

  void record() {
    ++systems;
    Cochain<F2> v = K2::scale(product_sum(0, k), F2(-1));
    if (!r.is_cocycle(v)) throw Error(ErrorKind::InvalidInput, "internal: Massey value is not a cocycle");
    auto cls = r.class_of(v).coords;
    std::vector<std::uint32_t> key;
    for (auto x : cls) key.push_back(x.v);
    values.insert(key);
    bool nonzero = !is_zero_vec(cls);
    if (witness.empty() || (nonzero && !have_nonzero_witness)) {
      witness.clear();
      for (auto [i, j] : order) witness.push_back({i, j, c[i][j]});
      witness_value = v;
      have_nonzero_witness = nonzero;
    }
  }

  void dfs(std::size_t slot) {
    if (aborted) return;
    if (slot == order.size()) {
      record();
      return;
    }
    auto [i, j] = order[slot];
    auto x0 = r.bound(product_sum(i, j));
    if (!x0) return;
    const auto& zb = zbasis[slot];
    if (zb.size() >= 62) {
      aborted = true;
      return;
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << zb.size()); ++pick) {
      if (++nodes > budget) {
        aborted = true;
        return;
      }
      Cochain<F2> x = *x0;
      for (std::size_t b = 0; b < zb.size(); ++b)
        if (pick >> b & 1) x = K2::add(x, zb[b]);
      c[i][j] = std::move(x);
      dfs(slot + 1);
      if (aborted) return;
    }
  }
};

}  // namespace

MasseyReport<F2> kfold_f2(const Koszul<F2>& r, const std::vector<Cochain<F2>>& a, long long budget,
                          bool check_strict) {
  int k = static_cast<int>(a.size());
  if (k < 2) invalid_input("Massey product needs at least two classes");
  for (const auto& x : a)
    if (!r.is_cocycle(x)) invalid_input("Massey product: representative is not a cocycle");
  MasseyReport<F2> rep;
  rep.k = k;
  detail::entry_degree(a, 0, k, rep.J, rep.h);
  rep.h -= 1;
  if (!detail::pairwise_disjoint(a)) {
    rep.defined = rep.strictly_defined = true;
    rep.trivial = Triviality::Yes;
    rep.note = "multidegrees overlap: the target component is zero";
    return rep;
  }

  Search s(r, a, budget);
  for (int i = 0; i < k; ++i) s.c[i][i + 1] = a[i];
  for (int len = 2; len < k; ++len)
    for (int i = 0; i + len <= k; ++i) {
      s.order.push_back({i, i + len});
      Mask J;
      int h;
      detail::entry_degree(a, i, i + len, J, h);
      s.zbasis.push_back(r.cocycle_basis(J, h));
    }
  s.dfs(0);
  rep.nodes = s.nodes;
  rep.systems = s.systems;
  if (s.aborted) {
    std::ostringstream os;
    os << "budget of " << budget << " partial systems exceeded; cocycle space dimensions per entry:";
    for (std::size_t t = 0; t < s.order.size(); ++t)
      os << " (" << s.order[t].first + 1 << "," << s.order[t].second + 1 << "):" << s.zbasis[t].size();
    rep.note = os.str();
    rep.trivial = Triviality::Unknown;
    return rep;
  }
  rep.defined = s.systems > 0;
  if (!rep.defined) {
    rep.note = "no complete defining system";
    return rep;
  }
  bool zero = false;
  for (const auto& key : s.values) {
    Vec<F2> v;
    bool nz = false;
    for (auto x : key) {
      v.push_back(F2(x));
      nz |= x != 0;
    }
    zero |= !nz;
    rep.values.push_back(std::move(v));
  }
  rep.trivial = zero ? Triviality::Yes : Triviality::No;
  rep.witness = std::move(s.witness);
  rep.witness_value = s.witness_value;

  rep.strictly_defined = true;
  if (check_strict) {
    for (int len = 2; len < k && rep.strictly_defined; ++len)
      for (int i = 0; i + len <= k; ++i) {
        std::vector<Cochain<F2>> sub(a.begin() + i, a.begin() + i + len);
        auto sr = kfold_f2(r, sub, budget, false);
        bool only_zero = sr.defined && sr.trivial == Triviality::Yes &&
                         std::all_of(sr.values.begin(), sr.values.end(), [](const Vec<F2>& v) { return is_zero_vec(v); });
        if (!only_zero) {
          rep.strictly_defined = false;
          rep.note = "sub-product of classes " + std::to_string(i + 1) + ".." + std::to_string(i + len) +
                     (sr.trivial == Triviality::Unknown ? " undecided" : " is not identically zero");
          break;
        }
      }
  }
  return rep;
}

// ---- scans ----

namespace {

template <class F>
TripleScan scan_impl(const SimplicialComplex& k, int degree, int threads, int max_vertices) {
  Koszul<F> probe(k, max_vertices);
  auto classes = probe.basis_classes(degree);
  int n = static_cast<int>(classes.size());
  TripleScan out;
  out.classes = n;
  std::mutex mu;
  std::atomic<int> next{0};
  auto work = [&] {
    Koszul<F> r(k, max_vertices);
    std::vector<Cochain<F>> reps;
    for (const auto& c : classes) reps.push_back(r.representative(c));
    // zero_prod[i][j]: disjoint and [a_i][a_j] = 0
    std::vector<std::vector<char>> zero_prod(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(reps[i].J & reps[j].J))
          zero_prod[i][j] = r.bound(r.mul(Koszul<F>::bar(reps[i]), reps[j])).has_value();
    TripleScan local;
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) break;
      int found = 0;  // examples are capped per first index so the merge is thread independent
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          ++local.triples;
          Mask a = reps[i].J, b = reps[j].J, c = reps[l].J;
          if ((a & b) || (b & c) || (a & c)) {
            ++local.overlapping;
            ++local.defined;
            ++local.trivial;
            continue;
          }
          if (!zero_prod[i][j] || !zero_prod[j][l]) continue;
          auto rep = triple_massey(r, {reps[i], reps[j], reps[l]});
          ++local.defined;
          if (rep.trivial == Triviality::Yes) {
            ++local.trivial;
          } else {
            ++local.nontrivial;
            if (found++ < 16) local.nontrivial_examples.push_back({i, j, l});
          }
        }
    }
    std::lock_guard lock(mu);
    out.triples += local.triples;
    out.overlapping += local.overlapping;
    out.defined += local.defined;
    out.trivial += local.trivial;
    out.nontrivial += local.nontrivial;
    out.nontrivial_examples.insert(out.nontrivial_examples.end(), local.nontrivial_examples.begin(),
                                   local.nontrivial_examples.end());
  };
  threads = std::max(1, std::min(threads, n));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::sort(out.nontrivial_examples.begin(), out.nontrivial_examples.end());
  if (out.nontrivial_examples.size() > 16) out.nontrivial_examples.resize(16);
  return out;
}

}  // namespace

TripleScan scan_triples(const SimplicialComplex& k, int degree, Field field, int threads, int max_vertices) {
  return with_field(field, [&]<class F>() { return scan_impl<F>(k, degree, threads, max_vertices); });
}

}  // namespace nesto
