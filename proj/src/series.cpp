#include "nesto/series.hpp"

#include <mutex>

#include "nesto/error.hpp"

namespace nesto {

namespace {

Rational factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

RingElem sym(Family f, int n) { return RingElem::of(Symbol::named(f, n)); }

struct Term {
  int n;      // dimension of the family member
  int xpow;   // power of x it sits at
  Rational a; // structure constant
};

// Members of the family that appear up to x^order.
std::vector<Term> family_terms(Family f, int order) {
  std::vector<Term> out;
  switch (f) {
    case Family::Pe:
      for (int n = 0; n + 1 <= order; ++n) out.push_back({n, n + 1, 1 / factorial(n + 1)});
      break;
    case Family::St:
      for (int n = 0; n <= order; ++n) out.push_back({n, n, 1 / factorial(n)});
      break;
    case Family::Gamma:
      for (int s = 0; s <= order; ++s) out.push_back({s + 1, s, 1 / factorial(s)});
      break;
    case Family::Mas:
      for (int s = 0; s + 2 <= order; ++s) out.push_back({s + 2, s + 2, 1 / factorial(s)});
      break;
    default:
      invalid_input("no generating series for family " + family_name(f));
  }
  return out;
}

// d^k of a family member, k = 0..kmax (cached, computed on named symbols).
std::vector<RingElem> iterated_d(Family f, int n, int kmax) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::vector<RingElem>> cache;
  std::vector<RingElem> seq;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({f, n}); it != cache.end()) seq = it->second;
  }
  if (seq.empty()) seq.push_back(sym(f, n));
  bool grew = false;
  while (static_cast<int>(seq.size()) <= kmax) {
    seq.push_back(d_elem(seq.back()));
    grew = true;
  }
  if (grew) {
    std::lock_guard lock(mu);
    auto& slot = cache[{f, n}];
    if (slot.size() < seq.size()) slot = seq;
  }
  seq.resize(kmax + 1);
  return seq;
}

}  // namespace

// ---- Series ----

Series::Series(int order_q, int order_x, bool two_var) : two_var_(two_var), oq_(two_var ? order_q : 0), ox_(order_x) {
  if (order_x < 0 || order_q < 0) invalid_input("series orders must be non-negative");
}

Series Series::x(const Series& shape) {
  Series s(shape.oq_, shape.ox_, shape.two_var_);
  s.add(0, 1, RingElem::unit());
  return s;
}

RingElem Series::coeff(int q, int x) const {
  auto it = c_.find({q, x});
  return it == c_.end() ? RingElem{} : it->second;
}

void Series::add(int q, int x, const RingElem& e) {
  if (q < 0 || x < 0 || q > oq_ || x > ox_ || e.is_zero()) return;
  auto& slot = c_[{q, x}];
  slot += e;
  if (slot.is_zero()) c_.erase({q, x});
}

void Series::require_shape(const Series& o) const {
  if (two_var_ != o.two_var_ || oq_ != o.oq_ || ox_ != o.ox_)
    invalid_input("series orders or variables do not match");
}

Series Series::operator+(const Series& o) const {
  require_shape(o);
  Series r = *this;
  for (const auto& [k, e] : o.c_) r.add(k.first, k.second, e);
  return r;
}

Series Series::operator-(const Series& o) const { return *this + o * Rational(-1); }

Series Series::operator*(const Series& o) const {
  require_shape(o);
  Series r(oq_, ox_, two_var_);
  for (const auto& [ka, a] : c_)
    for (const auto& [kb, b] : o.c_) {
      int q = ka.first + kb.first, x = ka.second + kb.second;
      if (q <= oq_ && x <= ox_) r.add(q, x, a * b);
    }
  return r;
}

Series Series::operator*(const Rational& s) const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_) r.add(k.first, k.second, e * s);
  return r;
}

Series Series::operator*(const RingElem& s) const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_) r.add(k.first, k.second, e * s);
  return r;
}

bool Series::operator==(const Series& o) const {
  if (two_var_ != o.two_var_ || oq_ != o.oq_ || ox_ != o.ox_ || c_.size() != o.c_.size()) return false;
  for (const auto& [k, e] : c_)
    if (o.coeff(k.first, k.second) != e) return false;
  return true;
}

Series Series::dx() const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_)
    if (k.second > 0) r.add(k.first, k.second - 1, e * Rational(k.second));
  return r;
}

Series Series::dq() const {
  if (!two_var_) invalid_input("d/dq of a one-variable series");
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_)
    if (k.first > 0) r.add(k.first - 1, k.second, e * Rational(k.first));
  return r;
}

Series Series::shift_x(int k) const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [key, e] : c_) r.add(key.first, key.second + k, e);
  return r;
}

Series Series::apply_d() const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_) r.add(k.first, k.second, d_elem(e));
  return r;
}

Series Series::truncated(int order_q, int order_x) const {
  Series r(order_q, order_x, two_var_);
  for (const auto& [k, e] : c_) r.add(k.first, k.second, e);
  return r;
}

Series Series::canonical() const {
  Series r(oq_, ox_, two_var_);
  for (const auto& [k, e] : c_) r.add(k.first, k.second, canonicalize(e));
  return r;
}

std::string Series::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, e] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + e.to_string() + ")";
    if (two_var_ && k.first > 0) out += " q^" + std::to_string(k.first);
    if (k.second > 0) out += " x^" + std::to_string(k.second);
  }
  return out;
}

Series exp_qx(int order_q, int order_x) {
  Series s = Series::two_var(order_q, order_x);
  for (int k = 0; k <= std::min(order_q, order_x); ++k) s.add(k, k, RingElem::unit() * (1 / factorial(k)));
  return s;
}

// ---- family series ----

Series build_series(Family f, int order) {
  if (order < 1) invalid_input("series order must be at least 1");
  Series s = Series::one_var(order);
  for (const auto& t : family_terms(f, order)) s.add(0, t.xpow, sym(f, t.n) * t.a);
  return s;
}

Series two_param(Family f, int order_q, int order_x) {
  Series s = Series::two_var(order_q, order_x);
  for (const auto& t : family_terms(f, order_x)) {
    auto ds = iterated_d(f, t.n, std::min(order_q, t.n));
    for (int k = 0; k < static_cast<int>(ds.size()); ++k) s.add(k, t.xpow, ds[k] * (t.a / factorial(k)));
  }
  return s;
}

Series closed_form(Family f, int order_q, int order_x) {
  if (f != Family::Pe && f != Family::St) invalid_input("closed form is known for Pe and St only");
  Series pe = Series::two_var(order_q, order_x);
  Series pe1 = build_series(Family::Pe, std::max(order_x, 1));
  for (const auto& [k, e] : pe1.coeffs()) pe.add(0, k.second, e);
  // 1 / (1 - q Pe(x)) = sum_k q^k Pe(x)^k
  Series geo = Series::two_var(order_q, order_x);
  Series power = geo;
  power.add(0, 0, RingElem::unit());
  for (int k = 0; k <= order_q; ++k) {
    for (const auto& [key, e] : power.coeffs()) geo.add(key.first + k, key.second, e);
    power = power * pe;
  }
  if (f == Family::Pe) return pe * geo;
  Series st = Series::two_var(order_q, order_x);
  Series st1 = build_series(Family::St, std::max(order_x, 1));
  for (const auto& [k, e] : st1.coeffs()) st.add(0, k.second, e);
  return st * exp_qx(order_q, order_x) * geo;
}

// ---- identities ----

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids{Identity::dPe,      Identity::dSt,      Identity::dGamma1p,
                                         Identity::dMas1p,   Identity::PeCauchy, Identity::StCauchy,
                                         Identity::GammaCauchy, Identity::MasCauchy};
  return ids;
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::dPe: return "dPe";
    case Identity::dSt: return "dSt";
    case Identity::dGamma1p: return "dGamma_1p";
    case Identity::dMas1p: return "dMas_1p";
    case Identity::PeCauchy: return "pe_cauchy";
    case Identity::StCauchy: return "st_cauchy";
    case Identity::GammaCauchy: return "gamma_cauchy";
    case Identity::MasCauchy: return "mas_cauchy";
  }
  return "?";
}

Identity parse_identity(const std::string& s) {
  for (Identity id : all_identities())
    if (identity_name(id) == s) return id;
  invalid_input("unknown identity '" + s + "'");
}

bool is_two_param(Identity id) {
  return id == Identity::PeCauchy || id == Identity::StCauchy || id == Identity::GammaCauchy ||
         id == Identity::MasCauchy;
}

PdeReport verify_pde(Identity id, int order_q, int order_x) {
  if (order_x < 1 || order_q < 0) invalid_input("identity orders out of range");
  bool two = is_two_param(id);
  int oq = two ? order_q : 0;
  // one extra order so that derivatives are exact up to the requested ones
  auto series = [&](Family f) {
    if (two) return two_param(f, oq + 1, order_x + 1);
    return build_series(f, order_x + 1);
  };
  auto deriv = [&](const Series& s) { return two ? s.dq() : s.apply_d(); };

  Series lhs = Series::one_var(0), rhs = Series::one_var(0);
  switch (id) {
    case Identity::dPe:
    case Identity::PeCauchy: {
      Series pe = series(Family::Pe);
      lhs = deriv(pe);
      rhs = pe * pe;
      break;
    }
    case Identity::dSt:
    case Identity::StCauchy: {
      Series pe = series(Family::Pe), st = series(Family::St);
      lhs = deriv(st);
      rhs = (Series::x(pe) + pe) * st;
      break;
    }
    case Identity::dGamma1p:
    case Identity::GammaCauchy: {
      Series pe = series(Family::Pe), g = series(Family::Gamma);
      Series one = Series::x(pe).dx();
      lhs = deriv(g);
      rhs = pe * g * Rational(2) + (one + pe.dx()) * pe.dx();
      break;
    }
    case Identity::dMas1p:
    case Identity::MasCauchy: {
      Series pe = series(Family::Pe), st = series(Family::St), g = series(Family::Gamma), m = series(Family::Mas);
      lhs = deriv(m);
      Series bracket = st.dx() * Rational(2) + st * g + st.dx() * pe.dx();
      rhs = (Series::x(pe) + pe) * m + bracket.shift_x(2);
      break;
    }
  }
  PdeReport rep;
  rep.identity = id;
  rep.order_q = oq;
  rep.order_x = order_x;
  Series diff = (lhs - rhs).truncated(oq, order_x).canonical();
  for (const auto& [k, e] : diff.coeffs()) {
    rep.residuals.push_back({k.first, k.second, e});
    for (const auto& [mono, c] : e.terms())
      for (const auto& s : mono)
        if (s.unclassified) rep.partial = true;
  }
  return rep;
}

}  // namespace nesto
