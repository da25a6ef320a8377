#pragma once

#include <string>
#include <string_view>

#include "symchar/check.hpp"
#include "symchar/integer.hpp"
#include "symchar/symfunc.hpp"

namespace symchar {

/// Multivariate power series over Q truncated at total degree `cap`.
class PowerSeries {
public:
  using Monomial = std::vector<int>;

  PowerSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {}
  static PowerSeries variable(int nvars, int index, int cap);
  static PowerSeries constant(int nvars, const Rational& c, int cap);
  /// Univariate series from coefficients of X^0, X^1, ...
  static PowerSeries univariate(const std::vector<Rational>& coeffs, int cap);

  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  /// Univariate coefficient of X^k.
  Rational coeff(int k) const { return coeff(Monomial{k}); }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  PowerSeries pow(int e) const;
  /// Substitutes series without constant term for the variables.
  PowerSeries compose(const std::vector<PowerSeries>& images) const;

  /// "3X + 3X^2 + X^3", "X - (1/2)X^2"; variables named X, Y, Z by default.
  std::string to_string(const std::vector<std::string>& names = {"X", "Y", "Z"}) const;

private:
  int nvars_;
  int cap_;
  std::map<Monomial, Rational> terms_;
};

/// One-dimensional formal group law F(X,Y) = X + Y + sum c_{i,j} X^i Y^j,
/// i, j >= 1, truncated at total degree cap.
class FGL1 {
public:
  FGL1(std::string name, int cap, std::map<std::pair<int, int>, Rational> coeffs);
  static FGL1 additive(int cap);
  /// X + Y + bXY.
  static FGL1 multiplicative(const Rational& b, int cap);
  /// "ga", "gm" or "gm:<b>" with b an integer or a fraction p/q.
  static FGL1 parse(std::string_view text, int cap);

  const std::string& name() const { return name_; }
  int cap() const { return cap_; }
  const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }
  /// F(a, b) for series a, b without constant term.
  PowerSeries operator()(const PowerSeries& a, const PowerSeries& b) const;
  /// F(X, Y) itself.
  PowerSeries series() const;

private:
  std::string name_;
  int cap_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

/// Identity, commutativity, associativity and existence of the inverse,
/// modulo degree cap + 1.
CheckResult check_axioms(const FGL1& f);
/// lambda(X) with F(X, lambda(X)) = 0.
PowerSeries antipode_series(const FGL1& f);
/// [n](X): [1] = X, [m] = F([m-1](X), X), [-m] = lambda([m](X)).
PowerSeries loop_n(const FGL1& f, int n);
/// Logarithm: l(X) = X + ..., l(F(X,Y)) = l(X) + l(Y).
PowerSeries fgl_log(const FGL1& f);
/// g with f(g(X)) = X; needs f = aX + ..., a != 0.
PowerSeries compositional_inverse(const PowerSeries& f);

/// ((1 + bX)^n - 1)/b truncated, nX when b = 0.
PowerSeries multiplicative_loop_closed_form(const Rational& b, int n, int cap);
/// ln(1 + X) truncated.
PowerSeries log1p_series(int cap);

enum class FglKind { additive, multiplicative };
/// additive: the outer coproduct.  multiplicative: s_lambda(X + Y + XY) as
/// (m (x) m)(1 (x) sw (x) 1)(1 (x) delta (x) 1) Delta^(3).
TensorSymFunc coproduct_from_fgl(FglKind kind, const SymFunc& f);

} // namespace symchar
