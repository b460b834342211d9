#include <mutex>
#include <unordered_map>

#include "nesto/error.hpp"
#include "nesto/polyring.hpp"

namespace nesto {

std::string family_name(Family f) {
  switch (f) {
    case Family::Pt: return "Pt";
    case Family::Simplex: return "Simplex";
    case Family::Cube: return "Cube";
    case Family::Pe: return "Pe";
    case Family::St: return "St";
    case Family::As: return "As";
    case Family::Cy: return "Cy";
    case Family::Gamma: return "Gamma";
    case Family::Mas: return "Mas";
    case Family::Q: return "Q";
    case Family::Opaque: return "Opaque";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "pt" || l == "point") return Family::Pt;
  if (l == "simplex" || l == "delta") return Family::Simplex;
  if (l == "cube" || l == "i") return Family::Cube;
  if (l == "pe") return Family::Pe;
  if (l == "st") return Family::St;
  if (l == "as") return Family::As;
  if (l == "cy") return Family::Cy;
  if (l == "gamma") return Family::Gamma;
  if (l == "mas") return Family::Mas;
  if (l == "q") return Family::Q;
  if (l == "opaque") return Family::Opaque;
  invalid_input("unknown family '" + s + "'");
}

const std::vector<Family>& registry_priority() {
  static const std::vector<Family> p{Family::Simplex, Family::Cube, Family::Pe,    Family::As, Family::St,
                                     Family::Cy,      Family::Gamma, Family::Mas, Family::Q};
  return p;
}

std::optional<BuildingSet> registry_building_set(Family f, int n) {
  if (n < 0) invalid_input("negative dimension");
  if (n <= 1 && f != Family::Cube && f != Family::Opaque) return standard(StdFamily::Simplex, n);
  switch (f) {
    case Family::Pt:
      if (n != 0) invalid_input("Pt has dimension 0");
      return standard(StdFamily::Simplex, 0);
    case Family::Simplex: return standard(StdFamily::Simplex, n);
    case Family::Cube: return standard(StdFamily::Cube, n);
    case Family::Pe: return graphical(Graph::complete(n + 1));
    case Family::As: return graphical(Graph::path(n + 1));
    case Family::St: return graphical(Graph::star(n + 1));
    case Family::Cy: return graphical(Graph::cycle(n + 1));
    case Family::Gamma: return standard(StdFamily::Gamma, n);
    case Family::Mas: return standard(StdFamily::Mas, n);
    case Family::Q: return std::nullopt;
    case Family::Opaque: break;
  }
  invalid_input("no registry entry for " + family_name(f));
}

std::shared_ptr<const SimplicialComplex> registry_complex(Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::shared_ptr<const SimplicialComplex>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({f, n}); it != cache.end()) return it->second;
  }
  std::shared_ptr<const SimplicialComplex> k;
  if (f == Family::Q && n >= 2)
    k = std::make_shared<SimplicialComplex>(q_complex(n));
  else
    k = std::make_shared<SimplicialComplex>(nested_complex(*registry_building_set(f, n)));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(f, n), k).first->second;
}

// ---- classification ----

namespace {

template <class V>
class Cache {
 public:
  std::optional<V> get(const std::string& k) {
    std::lock_guard lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& k, const V& v) {
    std::lock_guard lock(mu_);
    map_.emplace(k, v);
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, V> map_;
};

Cache<Monomial>& complex_cache() {
  static Cache<Monomial> c;
  return c;
}
Cache<Monomial>& bset_cache() {
  static Cache<Monomial> c;
  return c;
}

Monomial segment() { return {Symbol::named(Family::Cube, 1)}; }

Monomial classify_irreducible(const SimplicialComplex& k) {
  int n = k.dim() + 1;
  if (n <= 0) return {};
  if (n == 1) return segment();
  for (Family f : registry_priority()) {
    if (f == Family::Cube) continue;  // reducible beyond dimension 1
    auto r = registry_complex(f, n);
    if (r->m() != k.m() || r->facets().size() != k.facets().size()) continue;
    if (iso(k, *r).status == IsoResult::Found) return {Symbol::named(f, n)};
  }
  Symbol s = Symbol::opaque(k);
  s.unclassified = true;
  return {s};
}

Monomial classify_complex(const SimplicialComplex& k) {
  Symbol probe = Symbol::opaque(k);
  if (auto hit = complex_cache().get(probe.key)) return *hit;
  Monomial out;
  auto comps = join_components(k);
  if (comps.size() <= 1) {
    out = classify_irreducible(k);
  } else {
    for (const auto& c : comps) out = mono_mul(out, classify_irreducible(full_subcomplex(k, c)));
  }
  complex_cache().put(probe.key, out);
  return out;
}

Monomial classify_connected_bset(const BuildingSet& b) {
  int n = b.ground() - 1;
  if (n == 0) return {};
  if (n == 1) return segment();
  Symbol probe = Symbol::opaque(b);
  if (auto hit = bset_cache().get(probe.key)) return *hit;
  Monomial out;
  bool found = false;
  for (Family f : registry_priority()) {
    auto rb = registry_building_set(f, n);
    if (!rb || rb->size() != b.size()) continue;
    if (*rb == b || iso(*rb, b)) {
      out = canonical(Symbol::named(f, n));
      found = true;
      break;
    }
  }
  if (!found) out = classify_complex(nested_complex(b));
  bset_cache().put(probe.key, out);
  return out;
}

}  // namespace

Monomial classify(const Symbol& s) {
  if (s.family != Family::Opaque) return canonical(s);
  if (s.bset) {
    Monomial out;
    for (Mask c : s.bset->maximal())
      if (popcount(c) > 1) out = mono_mul(out, classify_connected_bset(restriction(*s.bset, c)));
    return out;
  }
  if (s.complex) return classify_complex(*s.complex);
  return {s};
}

Monomial canonical(const Symbol& s) {
  if (s.family == Family::Opaque) return classify(s);
  if (s.dim == 0 || s.family == Family::Pt) return {};
  if (s.dim == 1) return segment();
  if (s.family == Family::Cube) return Monomial(s.dim, Symbol::named(Family::Cube, 1));
  if (s.dim > kIsoCanonMaxDim) return {s};
  return classify_complex(*registry_complex(s.family, s.dim));
}

RingElem canonicalize(const RingElem& e) {
  RingElem out;
  for (const auto& [m, c] : e.terms()) {
    Monomial acc;
    for (const auto& s : m) acc = mono_mul(acc, canonical(s));
    out.add(acc, c);
  }
  return out;
}

std::vector<Family> matching_families(const SimplicialComplex& k, const std::vector<Family>& pool) {
  int n = k.dim() + 1;
  std::vector<Family> out;
  for (Family f : pool) {
    auto r = registry_complex(f, n);
    if (r->m() != k.m() || r->facets().size() != k.facets().size()) continue;
    if (iso(k, *r).status == IsoResult::Found) out.push_back(f);
  }
  return out;
}

}  // namespace nesto
