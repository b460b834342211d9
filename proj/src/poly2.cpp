#include "nesto/poly2.hpp"

#include <vector>

namespace nesto {

BiPoly BiPoly::monomial(int i, int j, const Rational& c) {
  BiPoly p;
  p.add(i, j, c);
  return p;
}

void BiPoly::add(int i, int j, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.c_) r.add(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + o * Rational(-1); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [a, ca] : c_)
    for (const auto& [b, cb] : o.c_) r.add(a.first + b.first, a.second + b.second, ca * cb);
  return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
  BiPoly r;
  for (const auto& [k, c] : c_) r.add(k.first, k.second, c * s);
  return r;
}

BiPoly BiPoly::d_first() const {
  BiPoly r;
  for (const auto& [k, c] : c_)
    if (k.first > 0) r.add(k.first - 1, k.second, c * k.first);
  return r;
}

BiPoly BiPoly::d_second() const {
  BiPoly r;
  for (const auto& [k, c] : c_)
    if (k.second > 0) r.add(k.first, k.second - 1, c * k.second);
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : c_) r.add(k.second, k.first, c);
  return r;
}

BiPoly BiPoly::shear() const {
  BiPoly r;
  for (const auto& [k, c] : c_) {
    // (x - y)^i y^j
    BigInt binom = 1;
    for (int a = 0; a <= k.first; ++a) {
      Rational term = c * Rational(binom);
      if ((k.first - a) % 2) term = -term;
      r.add(a, k.second + k.first - a, term);
      binom = binom * (k.first - a) / (a + 1);
    }
  }
  return r;
}

std::string BiPoly::to_string(const std::string& x, const std::string& y) const {
  if (c_.empty()) return "0";
  std::string s;
  // descending in the first variable reads naturally for F and H
  std::vector<std::pair<std::pair<int, int>, Rational>> items(c_.rbegin(), c_.rend());
  for (std::size_t n = 0; n < items.size(); ++n) {
    auto [k, c] = items[n];
    bool neg = c < 0;
    if (neg) c = -c;
    s += n == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
    bool unit = c == 1 && (k.first || k.second);
    if (!unit) s += nesto::to_string(c);
    auto var = [&](const std::string& v, int e) {
      if (e == 0) return;
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    };
    var(x, k.first);
    var(y, k.second);
  }
  return s;
}

}  // namespace nesto
