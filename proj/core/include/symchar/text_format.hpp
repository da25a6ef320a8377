#pragma once

#include <string>
#include <string_view>

#include "symchar/symfunc.hpp"

namespace symchar {

/// How a partition label is read: Schur function / GL character, orthogonal
/// [..], symplectic <..>, Thibon <<..>>, reduced symmetric group <..>.
enum class LabelKind { gl, o, sp, thibon, reduced };

std::string_view kind_name(LabelKind k);

/// Accepts "4,2,2,1", "0", "" and the exponent form "[1,2^2,4]" (any order).
/// Throws std::invalid_argument naming the offending token.
Partition parse_partition(std::string_view text);
/// "kappa;lambda" for a rational GL label.
PartitionPair parse_rational_label(std::string_view text);

std::string format_label(const Partition& p, LabelKind k);
/// Signed sum in stored (reverse lexicographic) order, e.g. "s[2] + s[1,1]".
std::string format(const SymFunc& f, LabelKind k = LabelKind::gl);
std::string format(const TensorSymFunc& t);
/// Rational GL characters with the contravariant leg second, "{2;1} + {0;0}".
std::string format_rational(const TensorSymFunc& t);

} // namespace symchar
