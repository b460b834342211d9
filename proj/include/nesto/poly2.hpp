#pragma once

#include <map>
#include <string>
#include <utility>

#include "nesto/field.hpp"

namespace nesto {

/// Polynomial in two commuting variables with rational coefficients.
/// Key (i, j) is the exponent pair of the first and second variable.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly monomial(int i, int j, const Rational& c = 1);
  static BiPoly constant(const Rational& c) { return monomial(0, 0, c); }

  const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }
  Rational coeff(int i, int j) const;
  bool is_zero() const { return c_.empty(); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rational& s) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  BiPoly d_first() const;
  BiPoly d_second() const;
  /// p(y, x): exchange the variables.
  BiPoly swapped() const;
  /// p(x - y, y).
  BiPoly shear() const;

  std::string to_string(const std::string& x, const std::string& y) const;

 private:
  void add(int i, int j, const Rational& c);
  std::map<std::pair<int, int>, Rational> c_;
};

}  // namespace nesto
