#include "nesto/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace nesto {

namespace {

void check_size(const SimplicialComplex& k, int max_vertices) {
  if (k.m() > max_vertices || k.m() > 30)
    invalid_input("complex has " + std::to_string(k.m()) + " vertices, limit is " +
                  std::to_string(std::min(max_vertices, 30)) + " for exhaustive multidegree work");
}

// Runs fn(J) for every J ⊆ [m] on a small pool; fn must be thread safe.
template <class Fn>
void for_all_subsets(int m, int threads, Fn fn) {
  Mask total = Mask{1} << m;
  threads = std::max(1, threads);
  if (threads == 1 || total < 256) {
    for (Mask J = 0; J < total; ++J) fn(J);
    return;
  }
  std::atomic<Mask> next{0};
  const Mask chunk = 64;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        Mask start = next.fetch_add(chunk);
        if (start >= total) return;
        for (Mask J = start; J < std::min(total, start + chunk); ++J) fn(J);
      }
    });
  for (auto& th : pool) th.join();
}

// dims[h] = dim H^{-h,2J}(R(K)), h = 0..|J|, from ranks of the Koszul differential.
template <class F>
std::vector<int> component_dims(const std::vector<Mask>& faces, Mask J) {
  int n = popcount(J);
  std::vector<std::vector<Mask>> by_h(n + 1);
  for (Mask t : faces)
    if ((t & ~J) == 0) by_h[n - popcount(t)].push_back(t);
  // rk[h] = rank of d : C_h -> C_{h-1}
  std::vector<int> rk(n + 2, 0);
  for (int h = 1; h <= n; ++h) {
    const auto& src = by_h[h];
    const auto& dst = by_h[h - 1];
    if (src.empty() || dst.empty()) continue;
    std::unordered_map<Mask, int> idx;
    for (std::size_t i = 0; i < dst.size(); ++i) idx.emplace(dst[i], static_cast<int>(i));
    Matrix<F> mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int col = 0; col < mat.cols; ++col) {
      Mask tau = src[col], sigma = J & ~tau;
      for_each_bit(sigma, [&](int i) {
        auto it = idx.find(tau | (Mask{1} << i));
        if (it != idx.end()) mat(it->second, col) = (sign_count_below(sigma, i) % 2) ? F(-1) : F(1);
      });
    }
    rk[h] = rank(std::move(mat));
  }
  std::vector<int> dims(n + 1);
  for (int h = 0; h <= n; ++h) dims[h] = static_cast<int>(by_h[h].size()) - rk[h] - rk[h + 1];
  return dims;
}

std::vector<Mask> face_masks(const SimplicialComplex& k) {
  std::vector<Mask> out;
  for (const auto& f : k.faces()) out.push_back(f.as_mask());
  return out;
}

std::vector<int> all_component_dims(const std::vector<Mask>& faces, Mask J, Field field) {
  return with_field(field, [&]<class F>() { return component_dims<F>(faces, J); });
}

// dims[h] predicted by the full subcomplex: H̃^{|J|-h-1}(K_J).
std::vector<int> hochster_dims(const SimplicialComplex& k, Mask J, Field field) {
  int n = popcount(J);
  auto red = reduced_cohomology(full_subcomplex(k, VertexSet::from_mask(J)), field);  // red[q+1] = degree q
  std::vector<int> dims(n + 1, 0);
  for (int h = 0; h <= n; ++h) {
    int q = n - h - 1;
    if (q + 1 >= 0 && q + 1 < static_cast<int>(red.size())) dims[h] = red[q + 1];
  }
  return dims;
}

}  // namespace

BigradedDims koszul_cohomology(const SimplicialComplex& k, Field field, int threads, int max_vertices) {
  check_size(k, max_vertices);
  auto faces = face_masks(k);
  std::mutex mu;
  BigradedDims out;
  out.total.assign(2 * k.m() + 1, 0);
  for_all_subsets(k.m(), threads, [&](Mask J) {
    auto dims = all_component_dims(faces, J, field);
    std::lock_guard lock(mu);
    for (int h = 0; h < static_cast<int>(dims.size()); ++h)
      if (dims[h]) {
        out.entries.push_back({h, J, dims[h]});
        out.total[2 * popcount(J) - h] += dims[h];
      }
  });
  std::sort(out.entries.begin(), out.entries.end(), [](const BigradedEntry& a, const BigradedEntry& b) {
    return a.J != b.J ? a.J < b.J : a.i < b.i;
  });
  return out;
}

HochsterReport hochster_check(const SimplicialComplex& k, Field field, int threads, int max_vertices) {
  check_size(k, max_vertices);
  auto faces = face_masks(k);
  std::mutex mu;
  HochsterReport rep;
  for_all_subsets(k.m(), threads, [&](Mask J) {
    auto a = all_component_dims(faces, J, field);
    auto b = hochster_dims(k, J, field);
    std::lock_guard lock(mu);
    rep.components += static_cast<long long>(a.size());
    for (std::size_t h = 0; h < a.size(); ++h)
      if (a[h] != b[h]) rep.mismatches.push_back({J, static_cast<int>(h), a[h], b[h]});
  });
  std::sort(rep.mismatches.begin(), rep.mismatches.end(),
            [](const auto& x, const auto& y) { return x.J != y.J ? x.J < y.J : x.i < y.i; });
  return rep;
}

std::vector<long long> betti_za(const SimplicialComplex& k, Field field, int threads, int max_vertices) {
  check_size(k, max_vertices);
  std::mutex mu;
  std::vector<long long> b(2 * k.m() + 1, 0);
  for_all_subsets(k.m(), threads, [&](Mask J) {
    auto red = reduced_cohomology(full_subcomplex(k, VertexSet::from_mask(J)), field);
    int n = popcount(J);
    std::lock_guard lock(mu);
    for (std::size_t e = 0; e < red.size(); ++e) {
      int q = static_cast<int>(e) - 1;
      if (red[e]) b[q + n + 1] += red[e];
    }
  });
  return b;
}

SplitReport split_check(const SimplicialComplex& k, const VertexSet& j, Field field, int max_vertices) {
  // only multidegrees inside j are visited, so the limit applies to j
  if (k.m() > 64) invalid_input("split check needs at most 64 vertices");
  if (j.size() > std::min(max_vertices, 30))
    invalid_input("split check on " + std::to_string(j.size()) + " vertices exceeds the limit of " +
                  std::to_string(std::min(max_vertices, 30)));
  auto sub = full_subcomplex(k, j);
  auto faces = face_masks(k), sub_faces = face_masks(sub);
  std::vector<int> verts = j.elements();
  int r = static_cast<int>(verts.size());
  SplitReport rep;
  for (Mask local = 0; local < (Mask{1} << r); ++local) {
    Mask J = 0;
    for_each_bit(local, [&](int i) { J |= Mask{1} << verts[i]; });
    auto a = all_component_dims(faces, J, field);
    auto b = all_component_dims(sub_faces, local, field);
    rep.components += static_cast<long long>(a.size());
    for (std::size_t h = 0; h < a.size(); ++h)
      if (a[h] != b[h]) rep.mismatches.push_back({J, static_cast<int>(h), a[h], b[h]});
  }
  return rep;
}

int connectivity(const SimplicialComplex& k, Field field, int threads, int max_vertices) {
  auto b = betti_za(k, field, threads, max_vertices);
  int c = 0;
  for (std::size_t p = 1; p < b.size() && b[p] == 0; ++p) c = static_cast<int>(p);
  return c;
}

}  // namespace nesto
