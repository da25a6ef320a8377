#pragma once

#include <map>
#include <string>
#include <vector>

#include "symchar/integer.hpp"

namespace symchar {

/// Sparse multivariate polynomial with integer coefficients.  Exponent vectors
/// all have the same length (the number of variables).
class Polynomial {
public:
  using Monomial = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Integer& c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  void add(const Monomial& m, const Integer& c);
  Integer coeff(const Monomial& m) const;
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value with every variable set to 1.
  Integer sum_of_coefficients() const;
  /// Substitutes polynomial images for each variable.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  int nvars_ = 0;
  std::map<Monomial, Integer> terms_;
};

Polynomial pow(const Polynomial& p, int e);

} // namespace symchar
