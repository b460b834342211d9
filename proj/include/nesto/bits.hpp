#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace nesto {

/// Subset of a ground set of at most 64 elements; bit i is element i+1.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Build a mask from 1-based element labels.
inline Mask mask_of(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int l : labels) m |= Mask{1} << (l - 1);
  return m;
}

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    int i = lowest(m);
    fn(i);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

/// 1-based labels of a mask, increasing.
inline std::vector<int> labels_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i + 1); });
  return out;
}

std::string mask_to_string(Mask m);

/// Fixed-capacity vertex set for simplicial complexes (up to 256 vertices,
/// 0-based indices). Nested set complexes of the larger nestohedra outgrow a
/// single machine word.
class VertexSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  constexpr VertexSet() = default;

  static VertexSet from_mask(Mask m) {
    VertexSet s;
    s.w_[0] = m;
    return s;
  }
  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  static VertexSet range(int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  void insert(int v) { w_[v >> 6] |= Mask{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(Mask{1} << (v & 63)); }
  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

  int size() const {
    int c = 0;
    for (Mask w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Mask w : w_)
      if (w) return false;
    return true;
  }
  /// Largest element, or -1 when empty.
  int max() const {
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
    return -1;
  }
  int min() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return -1;
  }

  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  /// Representable as a single Mask (all elements < 64).
  bool fits_mask() const {
    for (int i = 1; i < kWords; ++i)
      if (w_[i]) return false;
    return true;
  }
  Mask as_mask() const { return w_[0]; }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      Mask w = w_[i];
      while (w) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet&) const = default;
  /// Total order: by size, then colexicographic on the words.
  std::strong_ordering operator<=>(const VertexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    for (int i = kWords - 1; i >= 0; --i)
      if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Mask w : w_) h ^= std::hash<Mask>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::array<Mask, kWords> w_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace nesto
