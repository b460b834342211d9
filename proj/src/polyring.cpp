#include "nesto/polyring.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nesto/error.hpp"

namespace nesto {

// ---- Symbol ----

Symbol Symbol::named(Family f, int dim) {
  if (f == Family::Opaque) invalid_input("opaque symbols need attached data");
  if (dim < 0) invalid_input("negative dimension");
  if (f == Family::Pt && dim != 0) invalid_input("Pt has dimension 0");
  Symbol s;
  s.family = f;
  s.dim = dim;
  return s;
}

Symbol Symbol::opaque(BuildingSet b) {
  Symbol s;
  s.family = Family::Opaque;
  s.dim = b.ground() - static_cast<int>(b.maximal().size());
  std::ostringstream key;
  key << "B" << b.ground() << ":" << std::hex;
  for (Mask m : b.sets()) key << m << ",";
  s.key = key.str();
  s.bset = std::make_shared<const BuildingSet>(std::move(b));
  return s;
}

Symbol Symbol::opaque(SimplicialComplex k) {
  Symbol s;
  s.family = Family::Opaque;
  s.dim = k.dim() + 1;
  std::ostringstream key;
  key << "K" << k.m() << ":";
  for (const auto& f : k.facets()) {
    for (int v : f.elements()) key << v << ".";
    key << ",";
  }
  s.key = key.str();
  s.complex = std::make_shared<const SimplicialComplex>(std::move(k));
  return s;
}

bool Symbol::operator<(const Symbol& o) const {
  if (family != o.family) return family < o.family;
  if (dim != o.dim) return dim < o.dim;
  return key < o.key;
}

std::string Symbol::to_string() const {
  switch (family) {
    case Family::Pt: return "Pt";
    case Family::Cube: return dim == 1 ? "I" : "I^" + std::to_string(dim);
    case Family::Simplex: return "Delta^" + std::to_string(dim);
    case Family::Opaque: {
      std::string tag = unclassified ? "?" : "";
      if (bset) return "P" + tag + "[" + bset->to_string() + "]";
      return "K" + tag + "[m=" + std::to_string(complex ? complex->m() : 0) + ",dim=" + std::to_string(dim) + "]";
    }
    default: return family_name(family) + "^" + std::to_string(dim);
  }
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  // higher total dimension first, then lexicographic on symbols
  int da = 0, db = 0;
  for (const auto& s : a) da += s.dim;
  for (const auto& s : b) db += s.dim;
  if (da != db) return da > db;
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string mono_to_string(const Monomial& m) {
  if (m.empty()) return "Pt";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    s += m[i].to_string();
  }
  return s;
}

// ---- RingElem ----

RingElem RingElem::unit() { return of(Monomial{}); }

RingElem RingElem::of(const Symbol& s, const Rational& c) {
  if (s.dim == 0 && s.family != Family::Opaque) return of(Monomial{}, c);
  return of(Monomial{s}, c);
}

RingElem RingElem::of(const Monomial& m, const Rational& c) {
  RingElem e;
  e.add(m, c);
  return e;
}

void RingElem::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Monomial clean;
  for (const auto& s : m)
    if (s.dim > 0) clean.push_back(s);  // points are the unit
  std::sort(clean.begin(), clean.end());
  auto [it, fresh] = t_.try_emplace(clean, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rational RingElem::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r = *this;
  r += o;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + o * Rational(-1); }

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) r.add(mono_mul(a, b), ca * cb);
  return r;
}

RingElem RingElem::operator*(const Rational& s) const {
  RingElem r;
  if (s == 0) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto a = t_.begin();
  auto b = o.t_.begin();
  for (; a != t_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

Rational RingElem::total_coeff() const {
  Rational s = 0;
  for (const auto& [m, c] : t_) s += c;
  return s;
}

std::string RingElem::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c0] : t_) {
    Rational c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (m.empty()) {
      out += c == 1 ? "Pt" : nesto::to_string(c) + "Pt";
      continue;
    }
    if (c != 1) out += nesto::to_string(c);
    out += mono_to_string(m);
  }
  return out;
}

// ---- boundary ----

namespace {

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

RingElem sym(Family f, int dim) { return RingElem::of(Symbol::named(f, dim)); }

RingElem d_pe(int n) {
  RingElem r;
  for (int s = 0; s <= n - 1; ++s) r += sym(Family::Pe, s) * sym(Family::Pe, n - s - 1) * binom(n + 1, s + 1);
  return r;
}

RingElem d_st(int n) {
  RingElem r = sym(Family::St, n - 1) * Rational(n);
  for (int s = 0; s <= n - 1; ++s) r += sym(Family::St, s) * sym(Family::Pe, n - s - 1) * binom(n, s);
  return r;
}

RingElem d_gamma(int n) {
  RingElem r = sym(Family::Pe, n - 1);
  for (int s = 0; s <= n - 2; ++s) r += sym(Family::Pe, s) * sym(Family::Gamma, n - s - 1) * binom(n - 1, s + 1);
  for (int s = 0; s <= n - 1; ++s) r += sym(Family::Pe, s) * sym(Family::Pe, n - s - 1) * binom(n - 1, s);
  for (int s = 0; s <= n - 2; ++s) r += sym(Family::Gamma, s + 1) * sym(Family::Pe, n - s - 2) * binom(n - 1, s);
  return r;
}

RingElem d_mas(int n) {
  RingElem r = sym(Family::St, n - 1) * Rational(2) + sym(Family::Mas, n - 1) * Rational(n - 2);
  for (int s = 0; s <= n - 2; ++s) r += sym(Family::St, s) * sym(Family::Gamma, n - s - 1) * binom(n - 2, s);
  for (int s = 0; s <= n - 2; ++s) r += sym(Family::St, s + 1) * sym(Family::Pe, n - s - 2) * binom(n - 2, s);
  for (int s = 0; s <= n - 3; ++s) r += sym(Family::Mas, s + 2) * sym(Family::Pe, n - s - 3) * binom(n - 2, s);
  return r;
}

}  // namespace

std::vector<BoundaryTerm> boundary_terms(const BuildingSet& b) {
  if (!b.connected()) invalid_input("boundary of a nestohedron needs a connected building set");
  std::vector<BoundaryTerm> out;
  for (Mask s : b.sets())
    if (s != b.full()) out.push_back({s, restriction(b, s), contraction(b, s)});
  return out;
}

RingElem d_nestohedron(const BuildingSet& b) {
  RingElem r;
  for (auto& t : boundary_terms(b))
    r.add(mono_mul({Symbol::opaque(std::move(t.restriction))}, {Symbol::opaque(std::move(t.contraction))}), 1);
  return r;
}

RingElem d_symbol(const Symbol& s) {
  if (s.dim == 0) return {};
  if (s.dim == 1) return RingElem::unit() * Rational(2);
  int n = s.dim;
  switch (s.family) {
    case Family::Pt: return {};
    case Family::Simplex: return sym(Family::Simplex, n - 1) * Rational(n + 1);
    case Family::Cube: return sym(Family::Cube, n - 1) * Rational(2 * n);
    case Family::Pe: return d_pe(n);
    case Family::St: return d_st(n);
    case Family::Gamma: return d_gamma(n);
    case Family::Mas: return d_mas(n);
    case Family::As:
    case Family::Cy:
    case Family::Q:
      unsupported_symbol("no boundary formula for " + s.to_string() + " without attached data");
    case Family::Opaque: {
      if (s.bset) {
        // a disconnected building set is a product of its components
        auto comps = s.bset->maximal();
        if (comps.size() == 1) return d_nestohedron(*s.bset);
        std::vector<RingElem> factors;
        for (Mask c : comps) factors.push_back(RingElem::of(Symbol::opaque(restriction(*s.bset, c))));
        RingElem r;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          RingElem term = RingElem::unit();
          for (std::size_t j = 0; j < factors.size(); ++j)
            term = term * (i == j ? d_elem(factors[j]) : factors[j]);
          r += term;
        }
        return r;
      }
      if (s.complex) {
        RingElem r;
        for (int v = 0; v < s.complex->m(); ++v)
          if (!s.complex->ghosts().contains(v)) r += RingElem::of(Symbol::opaque(link(*s.complex, v)));
        return r;
      }
      unsupported_symbol("opaque symbol without data");
    }
  }
  unsupported_symbol("unknown family");
}

RingElem d_elem(const RingElem& e) {
  RingElem out;
  for (const auto& [m, c] : e.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      Monomial rest;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i) rest.push_back(m[j]);
      out += d_symbol(m[i]) * RingElem::of(rest, c);
    }
  }
  return out;
}

// ---- characteristic polynomials ----

BiPoly f_poly(const Symbol& s) {
  static std::mutex mu;
  static std::unordered_map<std::string, BiPoly> cache;
  std::string key = s.family == Family::Opaque ? s.key : family_name(s.family) + std::to_string(s.dim);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BiPoly F;
  if (s.dim == 0) {
    F = BiPoly::constant(1);
  } else if (s.family == Family::Cube) {
    F = BiPoly::constant(1);
    for (int i = 0; i < s.dim; ++i) F = F * (BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1, 2));
  } else if (s.family == Family::Opaque) {
    if (s.complex)
      F = face_data(*s.complex).F;
    else if (s.bset) {
      F = BiPoly::constant(1);
      for (Mask c : s.bset->maximal())
        if (popcount(c) > 1) F = F * face_data(nested_complex(restriction(*s.bset, c))).F;
    } else {
      unsupported_symbol("opaque symbol without data");
    }
  } else {
    F = face_data(*registry_complex(s.family, s.dim)).F;
  }
  std::lock_guard lock(mu);
  cache.emplace(key, F);
  return F;
}

CharPoly char_poly(const RingElem& e) {
  CharPoly cp;
  for (const auto& [m, c] : e.terms()) {
    BiPoly p = BiPoly::constant(c);
    for (const auto& s : m) p = p * f_poly(s);
    cp.F += p;
  }
  cp.H = cp.F.shear();
  return cp;
}

// ---- complexity ----

namespace {

const std::vector<Family>& complexity_pool() {
  static const std::vector<Family> pool{Family::Simplex, Family::Pe,    Family::As, Family::Cy,
                                        Family::St,      Family::Gamma, Family::Mas};
  return pool;
}

// Match sets of the irreducible factors (dim >= 2) in d of the family member.
std::set<std::vector<Family>> factor_matches(Family f, int n, std::vector<std::string>& unmatched) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::pair<std::set<std::vector<Family>>, std::vector<std::string>>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({f, n}); it != memo.end()) {
      unmatched.insert(unmatched.end(), it->second.second.begin(), it->second.second.end());
      return it->second.first;
    }
  }
  std::set<std::vector<Family>> out;
  std::vector<std::string> missing;
  std::unordered_map<std::string, std::vector<Family>> seen;
  auto b = registry_building_set(f, n);
  for (const auto& t : boundary_terms(*b)) {
    for (const BuildingSet* part : {&t.restriction, &t.contraction}) {
      if (part->ground() <= 2) continue;
      auto k = nested_complex(*part);
      for (const auto& comp : join_components(k)) {
        auto factor = full_subcomplex(k, comp);
        if (factor.dim() + 1 < 2) continue;
        std::string key = Symbol::opaque(factor).key;
        auto it = seen.find(key);
        if (it == seen.end()) it = seen.emplace(key, matching_families(factor, complexity_pool())).first;
        if (it->second.empty())
          missing.push_back(family_name(f) + "^" + std::to_string(n) + ": factor of dim " +
                            std::to_string(factor.dim() + 1) + " with " + std::to_string(factor.m()) + " facets");
        else
          out.insert(it->second);
      }
    }
  }
  std::lock_guard lock(mu);
  memo[{f, n}] = {out, missing};
  unmatched.insert(unmatched.end(), missing.begin(), missing.end());
  return out;
}

struct Closure {
  std::vector<Family> families;
  bool complete = true;
  std::vector<std::string> unmatched;
};

Closure closure_for(Family family, int max_dim) {
  const auto& pool = complexity_pool();
  int np = static_cast<int>(pool.size());
  std::vector<std::set<std::vector<Family>>> needs(np);
  std::vector<std::vector<std::string>> missing(np);
  for (int i = 0; i < np; ++i)
    for (int n = 2; n <= max_dim; ++n) {
      auto m = factor_matches(pool[i], n, missing[i]);
      needs[i].insert(m.begin(), m.end());
    }
  int home = static_cast<int>(std::find(pool.begin(), pool.end(), family) - pool.begin());
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << np); ++s)
    if (s >> home & 1) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t s : subsets) {
    bool closed = true;
    for (int i = 0; i < np && closed; ++i) {
      if (!(s >> i & 1)) continue;
      if (!missing[i].empty()) closed = false;
      for (const auto& need : needs[i]) {
        bool hit = false;
        for (Family g : need)
          if (s >> (std::find(pool.begin(), pool.end(), g) - pool.begin()) & 1) hit = true;
        if (!hit) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      Closure c;
      for (int i = 0; i < np; ++i)
        if (s >> i & 1) c.families.push_back(pool[i]);
      return c;
    }
  }
  // no closed subset: report everything reachable as a lower bound
  Closure c;
  c.complete = false;
  c.unmatched = missing[home];
  c.families = {family};
  return c;
}

}  // namespace

ComplexityReport complexity(Family family, int max_dim) {
  const auto& pool = complexity_pool();
  if (std::find(pool.begin(), pool.end(), family) == pool.end())
    invalid_input("complexity: family " + family_name(family) + " is not a registered nestohedron family");
  if (max_dim < 2) invalid_input("complexity needs max_dim >= 2");
  ComplexityReport rep;
  rep.family = family;
  rep.max_dim = max_dim;
  Closure c = closure_for(family, max_dim);
  rep.closure = c.families;
  rep.complexity = static_cast<int>(c.families.size());
  rep.complete = c.complete;
  rep.unmatched = c.unmatched;
  if (max_dim > 2) {
    Closure prev = closure_for(family, max_dim - 1);
    rep.exact = c.complete && prev.complete && prev.families == c.families;
  }
  return rep;
}

}  // namespace nesto
