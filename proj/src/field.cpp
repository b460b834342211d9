#include "nesto/field.hpp"

namespace nesto {

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt den(s.substr(slash + 1));
    if (den == 0) invalid_input("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    invalid_input("bad rational '" + s + "'");
  }
}

std::string field_name(Field f) {
  switch (f) {
    case Field::Q:
      return "q";
    case Field::F2:
      return "f2";
    case Field::F3:
      return "f3";
  }
  return "?";
}

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return Field::Q;
  if (s == "f2" || s == "F2") return Field::F2;
  if (s == "f3" || s == "F3") return Field::F3;
  invalid_input("unknown field '" + s + "' (expected q, f2 or f3)");
}

}  // namespace nesto
