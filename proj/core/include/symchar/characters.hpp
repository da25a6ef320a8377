#pragma once

#include <string_view>

#include "symchar/symfunc.hpp"

namespace symchar {

// Character decompositions built on the hash products.

enum class BranchRule { gl_to_o, o_to_gl, gl_to_sp, sp_to_gl, gl_to_glm1, glm1_to_gl };

BranchRule parse_branch_rule(std::string_view name);
std::string_view to_string(BranchRule r);

/// gl_to_o: f/D, o_to_gl: f/C, gl_to_sp: f/B, sp_to_gl: f/A,
/// gl_to_glm1: f/M, glm1_to_gl: f/L.
SymFunc branch(const SymFunc& f, BranchRule rule);

/// [mu].[nu] = sum_zeta [(mu/zeta)(nu/zeta)]; the same rule holds for Sp.
SymFunc newell_littlewood(const SymFunc& f, const SymFunc& g);
/// Same product through the derived hash with stages [(inner, eta eps^1)].
SymFunc newell_littlewood_hash(const SymFunc& f, const SymFunc& g);

/// Rational GL characters live in Sym (x) Sym: first leg covariant, second leg
/// contravariant (the bar is only applied when printing).
using RationalChar = TensorSymFunc;

/// {k;l}.{m;n} = sum_{s,t} {(k/s)(m/t); (l/t)(n/s)}.
RationalChar rational_mul(const RationalChar& x, const RationalChar& y);
/// Derived hash on Sym (x) Sym with the contraction m2(k(x)l, m(x)n) =
/// <k|n><l|m>, followed by the legwise product.
RationalChar rational_mul_hash(const RationalChar& x, const RationalChar& y);

enum class RationalDirection { to_irreducible, to_reducible };
/// to_irreducible: {l}(x){m} = sum_z {l/z; m/z}.
/// to_reducible:   {l;m} = sum_z (-1)^|z| {l/z}(x){m/z'}.
RationalChar rational_convert(const RationalChar& x, RationalDirection direction);

/// Thibon labels to Schur functions: <<l>> = {l M}, truncated at cap.
SymFunc thibon_to_schur(const SymFunc& thibon, int cap);
/// Schur functions to Thibon labels: {l} = <<l L>>, truncated at cap.
SymFunc schur_to_thibon(const SymFunc& f, int cap);
/// Inner product of Thibon characters through the Thibon hash.
SymFunc thibon_inner(const SymFunc& x, const SymFunc& y);
/// sum_{s,t} <<(s*t)(mu/s)(nu/t)>>.
SymFunc thibon_inner_direct(const SymFunc& x, const SymFunc& y);

/// Reduced symmetric group characters through the hash [(inner, eta eps^1), (inner, id)].
SymFunc murnaghan_littlewood(const SymFunc& x, const SymFunc& y);
/// sum_{a,b,z} <(mu/(a z))(nu/(b z))(a*b)>.
SymFunc murnaghan_littlewood_recursive(const SymFunc& x, const SymFunc& y);
/// Reconstructs {n-|mu|, mu} in S_n, multiplies with the Kronecker product and
/// drops the first row again.  n <= 0 selects 2(|mu|+|nu|)+2.
SymFunc reduced_oracle(const SymFunc& x, const SymFunc& y, int n = 0);
/// The S_n character {n-|mu|, mu} after standardization.
SymFunc unreduce(const SymFunc& reduced, int n);

/// (A_(1)*C_(1))(A_(2)*D_(1))(B_(1)*C_(2))(B_(2)*D_(2)).
SymFunc cummins_expand(const SymFunc& a, const SymFunc& b, const SymFunc& c, const SymFunc& d);

} // namespace symchar
