#include "symchar/symfunc.hpp"

#include <algorithm>

namespace symchar {

SymFunc homogeneous_part(const SymFunc& f, int d) {
  SymFunc out;
  for (const auto& [p, c] : f)
    if (p.weight() == d) out.add(p, c);
  return out;
}

SymFunc truncate(const SymFunc& f, int cap) {
  SymFunc out;
  for (const auto& [p, c] : f)
    if (p.weight() <= cap) out.add(p, c);
  return out;
}

int max_degree(const SymFunc& f) {
  int d = -1;
  for (const auto& [p, c] : f) d = std::max(d, p.weight());
  return d;
}

int min_degree(const SymFunc& f) {
  int d = -1;
  for (const auto& [p, c] : f) d = d < 0 ? p.weight() : std::min(d, p.weight());
  return d;
}

bool is_homogeneous(const SymFunc& f) { return f.is_zero() || min_degree(f) == max_degree(f); }

TensorSymFunc swap_legs(const TensorSymFunc& t) {
  TensorSymFunc out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

TensorSymFunc truncate_total(const TensorSymFunc& t, int cap) {
  TensorSymFunc out;
  for (const auto& [k, c] : t)
    if (k.first.weight() + k.second.weight() <= cap) out.add(k, c);
  return out;
}

} // namespace symchar
