#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "nesto/error.hpp"

namespace nesto {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

/// Prime field Z/P with P small.
template <unsigned P>
struct Zp {
  std::uint32_t v = 0;

  constexpr Zp() = default;
  constexpr Zp(long long x) : v(static_cast<std::uint32_t>(((x % static_cast<long long>(P)) + P) % P)) {}

  friend constexpr Zp operator+(Zp a, Zp b) { return raw((a.v + b.v) % P); }
  friend constexpr Zp operator-(Zp a, Zp b) { return raw((a.v + P - b.v) % P); }
  friend constexpr Zp operator*(Zp a, Zp b) { return raw((a.v * b.v) % P); }
  friend constexpr Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw((P - v) % P); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v == b.v; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v != b.v; }

  constexpr Zp inverse() const {
    if (v == 0) throw Error(ErrorKind::InvalidInput, "division by zero in prime field");
    // Fermat: v^(P-2)
    Zp r = 1, b = *this;
    for (unsigned e = P - 2; e; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v; }

 private:
  static constexpr Zp raw(std::uint32_t x) {
    Zp z;
    z.v = x;
    return z;
  }
};

using F2 = Zp<2>;
using F3 = Zp<3>;

enum class Field { Q, F2, F3 };

std::string field_name(Field f);
Field parse_field(const std::string& s);

template <class F>
inline bool is_zero(const F& x) {
  return x == F(0);
}

template <class F>
std::string field_elem_string(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) {
    return to_string(x);
  } else {
    return std::to_string(x.v);
  }
}

/// Calls `fn.template operator()<F>()` with the scalar type for `f`.
template <class Fn>
decltype(auto) with_field(Field f, Fn&& fn) {
  switch (f) {
    case Field::Q:
      return fn.template operator()<Rational>();
    case Field::F2:
      return fn.template operator()<F2>();
    case Field::F3:
      return fn.template operator()<F3>();
  }
  throw Error(ErrorKind::InvalidInput, "unknown field");
}

}  // namespace nesto
