#pragma once

#include "symchar/polynomial.hpp"
#include "symchar/symfunc.hpp"

namespace symchar {

// Outer Hopf algebra structure of Sym in the Schur basis.

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_mu * s_nu by Littlewood-Richardson strip enumeration (memoized).
const SymFunc& outer_mul_basis(const Partition& mu, const Partition& nu);
SymFunc outer_mul(const SymFunc& f, const SymFunc& g);
/// Product of several factors; the empty product is s_().
SymFunc outer_product(std::span<const SymFunc> factors);

/// s_{lambda/mu} expanded in Schur functions (zero unless mu is inside lambda).
const SymFunc& skew_basis(const Partition& lambda, const Partition& mu);
/// s_g^perp applied to f, extended bilinearly in both slots.
SymFunc skew(const SymFunc& f, const SymFunc& g);

const TensorSymFunc& coproduct_basis(const Partition& lambda);
TensorSymFunc coproduct(const SymFunc& f);
/// Coproduct with every leg of degree zero removed; zero on degree zero.
TensorSymFunc cut_coproduct(const SymFunc& f);

/// Iterated coproduct into k legs (k = 1 is the identity, k = 0 the counit).
TensorN iterated_coproduct(const SymFunc& f, int k);

Integer counit(const SymFunc& f);
SymFunc antipode(const SymFunc& f);
Integer scalar(const SymFunc& f, const SymFunc& g);
Integer scalar(const TensorSymFunc& f, const TensorSymFunc& g);

/// Loop operator [r] = m^(r) o Delta^(r).
SymFunc loop(int r, const SymFunc& f);

/// Multiplication of Sym (x) Sym, legwise.
TensorSymFunc tensor_mul(const TensorSymFunc& a, const TensorSymFunc& b);
/// Product map m : Sym (x) Sym -> Sym.
SymFunc multiply_legs(const TensorSymFunc& t);
TensorSymFunc tensor_product(const SymFunc& f, const SymFunc& g);
/// (f (x) g) applied legwise by linear maps.
template <class F, class G>
TensorSymFunc apply_legs(const TensorSymFunc& t, F&& f, G&& g) {
  TensorSymFunc out;
  for (const auto& [k, c] : t) {
    const SymFunc a = f(s(k.first));
    const SymFunc b = g(s(k.second));
    for (const auto& [pa, ca] : a)
      for (const auto& [pb, cb] : b) out.add({pa, pb}, c * ca * cb);
  }
  return out;
}

/// s_lambda(x_1, ..., x_n) by semistandard tableau enumeration.
Polynomial eval_monomials(const Partition& lambda, int n);
/// Expansion of a whole symmetric function in n variables.
Polynomial eval_monomials(const SymFunc& f, int n);

/// s_lambda(1^d) by the hook-content formula.
Integer dimension_gl(const Partition& lambda, int d);

/// Drops all memoized products, skews and coproducts.
void clear_schur_caches();

} // namespace symchar
