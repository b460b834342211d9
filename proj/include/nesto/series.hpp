#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nesto/polyring.hpp"

namespace nesto {

/// Truncated power series in x, or in (q, x), with coefficients in the ring of
/// polytopes. Orders are inclusive; a one-variable series has order_q == 0.
class Series {
 public:
  using Key = std::pair<int, int>;  // (power of q, power of x)

  Series(int order_q, int order_x, bool two_var);
  static Series one_var(int order_x) { return Series(0, order_x, false); }
  static Series two_var(int order_q, int order_x) { return Series(order_q, order_x, true); }
  /// The scalar series x (times the point).
  static Series x(const Series& shape);

  bool is_two_var() const { return two_var_; }
  int order_q() const { return oq_; }
  int order_x() const { return ox_; }
  const std::map<Key, RingElem>& coeffs() const { return c_; }
  RingElem coeff(int q, int x) const;
  RingElem coeff(int x) const { return coeff(0, x); }
  /// Terms beyond the orders are dropped silently.
  void add(int q, int x, const RingElem& e);

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rational& s) const;
  Series operator*(const RingElem& s) const;
  bool operator==(const Series& o) const;

  Series dx() const;
  Series dq() const;
  /// Multiplies by x^k, keeping the truncation.
  Series shift_x(int k) const;
  /// Applies the boundary operator to every coefficient.
  Series apply_d() const;
  /// Drops everything above the given orders.
  Series truncated(int order_q, int order_x) const;
  Series canonical() const;
  bool is_zero() const { return c_.empty(); }

  std::string to_string() const;

 private:
  void require_shape(const Series& o) const;
  bool two_var_;
  int oq_, ox_;
  std::map<Key, RingElem> c_;
};

/// e^{qx} as a two-variable scalar series.
Series exp_qx(int order_q, int order_x);

/// Families with a generating series: Pe, St, Gamma, Mas.
Series build_series(Family f, int order);
/// Coefficient of q^k x^{n+n0} is a_n d^k(P^n)/k!.
Series two_param(Family f, int order_q, int order_x);
/// Geometric-series expansion of the known solutions for Pe and St.
Series closed_form(Family f, int order_q, int order_x);

enum class Identity { dPe, dSt, dGamma1p, dMas1p, PeCauchy, StCauchy, GammaCauchy, MasCauchy };

std::string identity_name(Identity id);
Identity parse_identity(const std::string& s);
const std::vector<Identity>& all_identities();
bool is_two_param(Identity id);

struct Residual {
  int q, x;
  RingElem value;
};

struct PdeReport {
  Identity identity;
  int order_q = 0, order_x = 0;
  std::vector<Residual> residuals;  // nonzero coefficients of LHS - RHS
  bool partial = false;             // an unclassified symbol blocked the comparison
  bool ok() const { return residuals.empty() && !partial; }
};

/// LHS - RHS of the identity, compared after canonicalisation up to the given
/// orders (order_q is ignored for one-parameter identities).
PdeReport verify_pde(Identity id, int order_q, int order_x);

}  // namespace nesto
