#pragma once

#include "symchar/check.hpp"
#include "symchar/symfunc.hpp"

namespace symchar {

/// Symmetric functions with two formal parameters, keyed by (z, w) exponents.
using ParamPolySym = std::map<std::pair<int, int>, SymFunc>;

/// B_m(f) = sum_i (-1)^i h_{m+i} (f / e_i), the z^m coefficient of V(z) f.
SymFunc bernstein(int m, const SymFunc& f);
/// B_{l_1} ... B_{l_k} applied to s_(); equals s_lambda.
SymFunc bernstein_chain(const Partition& lambda);

/// M(1) L^perp(1) s_mu truncated at cap.
SymFunc reduced_embedding(const Partition& mu, int cap);

/// L^perp(z) M(w) f with z and w exponents up to cap.
ParamPolySym commutator_lhs(const SymFunc& f, int cap);
/// (1 - zw) M(w) L^perp(z) f with z and w exponents up to cap.
ParamPolySym commutator_rhs(const SymFunc& f, int cap);
/// Compares both sides on every Schur function of weight <= cap.
CheckResult check_commutation(int cap);

/// Coefficients of the degreewise pairing <L(z)|M(w)> up to cap.
std::map<std::pair<int, int>, Integer> series_pairing_lm(int cap);

} // namespace symchar
