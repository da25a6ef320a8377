#pragma once

#include <functional>
#include <memory>
#include <string>

#include "symchar/check.hpp"
#include "symchar/symfunc.hpp"

namespace symchar {

/// Linear map Sym -> Sym given on the Schur basis, memoized.  Copies share the
/// memo table.
class Cochain1 {
public:
  using Action = std::function<SymFunc(const Partition&)>;
  /// Body receiving the cochain itself, for recursive definitions.
  using RecursiveAction = std::function<SymFunc(const Cochain1& self, const Partition&)>;

  /// normalized: f(1) = 1.  conormalized: eps o f = eps.
  Cochain1(std::string name, Action action, bool normalized, bool conormalized);
  static Cochain1 recursive(std::string name, RecursiveAction body, bool normalized, bool conormalized);

  const std::string& name() const;
  bool normalized() const;
  bool conormalized() const;

  const SymFunc& operator()(const Partition& p) const;
  SymFunc apply(const SymFunc& f) const;

private:
  struct State;
  explicit Cochain1(std::shared_ptr<State> s);
  std::shared_ptr<State> state_;
};

/// Bilinear map Sym x Sym -> Sym (a 2-cochain) given on basis pairs, memoized.
class Pairing {
public:
  using Action = std::function<SymFunc(const Partition&, const Partition&)>;
  using RecursiveAction = std::function<SymFunc(const Pairing& self, const Partition&, const Partition&)>;

  /// unital: a(1,1) = 1.  normalized: a(x,1) = a(1,x) = eps(x) 1.
  Pairing(std::string name, Action action, bool unital, bool normalized);
  static Pairing recursive(std::string name, RecursiveAction body, bool unital, bool normalized);

  const std::string& name() const;
  bool unital() const;
  bool normalized() const;

  const SymFunc& operator()(const Partition& x, const Partition& y) const;
  SymFunc apply(const SymFunc& f, const SymFunc& g) const;

private:
  struct State;
  explicit Pairing(std::shared_ptr<State> s);
  std::shared_ptr<State> state_;
};

/// Comultiplication given on the basis.
using Comultiplication = std::function<TensorSymFunc(const Partition&)>;

// Named cochains: "id", "S" (antipode), "m" (eta o eps^1), "e" (eta o eps).
Cochain1 identity_cochain();
Cochain1 antipode_cochain();
Cochain1 eps1_cochain();
Cochain1 unit_cochain();
Cochain1 named_cochain(std::string_view name);

// Named pairings: "inner", "outer", "schur-hall", "e2" and
// "derived:<cochain>:<pairing>".
Pairing inner_pairing();
Pairing outer_pairing();
Pairing schur_hall_pairing();
Pairing unit_pairing();
Pairing named_pairing(std::string_view name);

/// (f * g)(x) = f(x_(1)) g(x_(2)).
Cochain1 convolve1(const Cochain1& f, const Cochain1& g);
/// (a * b)(x, y) = a(x_(1), y_(1)) b(x_(2), y_(2)).
Pairing convolve2(const Pairing& a, const Pairing& b);

/// Recursive inverse over the cut coproduct; needs f(1) = 1.
Cochain1 milnor_moore_inverse1(const Cochain1& f);
/// Same recursion over the cut coproduct of Sym (x) Sym; needs a(1,1) = 1.
Pairing milnor_moore_inverse2(const Pairing& a);

/// (eps (x) f) * (fbar o m) * (f (x) eps).  Needs f normalized and conormalized.
Pairing coboundary1(const Cochain1& f);

/// Inverse free 2-cocycle identity
///   c(x_(1), y_(1)) c(x_(2) y_(2), z) = c(y_(1), z_(1)) c(x, y_(2) z_(2))
/// on all basis triples of total weight <= max_degree.
CheckResult is_cocycle2(const Pairing& c, int max_degree);
/// f(1) = 1 and f(xy) = f(x) f(y) on basis pairs of total weight <= max_degree.
CheckResult is_algebra_hom(const Cochain1& f, int max_degree);
/// Both straightening laws on basis triples of total weight <= max_degree.
/// Triples without a unit factor are tried first.
CheckResult is_laplace(const Pairing& a, int max_degree);

/// Comultiplication dual to a grade-preserving pairing under the Schur-Hall
/// product.
Comultiplication dual_coproduct(const Pairing& a);
/// Checks in order: a grade-preserving, delta cocommutative, counit eps^1,
/// unit h_n, the Frobenius law and the mixed bialgebra law, for degrees up to
/// max_degree.  Unit and counit are only required in degrees where a is not
/// identically zero.
CheckResult is_frobenius(const Pairing& a, const Comultiplication& delta, int max_degree);
CheckResult is_frobenius(const Pairing& a, int max_degree);

/// phi o a, after checking phi is an algebra map up to check_degree.
Pairing derived_pairing(const Pairing& a, const Cochain1& phi, int check_degree = 4);
/// S o a, after checking a is Frobenius up to check_degree.
Pairing frobenius_inverse(const Pairing& a, int check_degree = 4);

/// Equality on basis elements (pairs) up to the given weight.
CheckResult same_cochain(const Cochain1& f, const Cochain1& g, int max_degree);
CheckResult same_pairing(const Pairing& a, const Pairing& b, int max_degree);

} // namespace symchar
