#include "symchar/vertex.hpp"

#include <stdexcept>

#include "symchar/schur.hpp"
#include "symchar/series.hpp"
#include "symchar/text_format.hpp"

namespace symchar {

namespace {

// (-1)^i e_i^perp f
SymFunc l_perp(int i, const SymFunc& f) { return skew(f, s(column(i))) * Integer(i % 2 ? -1 : 1); }

void add_to(ParamPolySym& p, std::pair<int, int> key, const SymFunc& f, const Integer& c = 1) {
  if (f.is_zero()) return;
  SymFunc& slot = p[key];
  slot.add(f, c);
  if (slot.is_zero()) p.erase(key);
}

} // namespace

SymFunc bernstein(int m, const SymFunc& f) {
  if (m < 0) throw std::invalid_argument("Bernstein operators need m >= 0");
  SymFunc out;
  const int top = std::max(max_degree(f), 0);
  for (int i = 0; i <= top; ++i) {
    const SymFunc sk = skew(f, s(column(i)));
    if (sk.is_zero()) continue;
    out.add(outer_mul(s(row(m + i)), sk), i % 2 ? -1 : 1);
  }
  return out;
}

SymFunc bernstein_chain(const Partition& lambda) {
  SymFunc f = one();
  for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) f = bernstein(*it, f);
  return f;
}

SymFunc reduced_embedding(const Partition& mu, int cap) {
  if (cap < mu.weight()) throw std::invalid_argument("reduced embedding needs cap >= |mu|");
  return mul_by_series(skew_by_series(s(mu), SeriesId::L), SeriesId::M, cap);
}

ParamPolySym commutator_lhs(const SymFunc& f, int cap) {
  ParamPolySym out;
  for (int j = 0; j <= cap; ++j) {
    const SymFunc mf = outer_mul(s(row(j)), f);
    for (int i = 0; i <= cap; ++i) add_to(out, {i, j}, l_perp(i, mf));
  }
  return out;
}

ParamPolySym commutator_rhs(const SymFunc& f, int cap) {
  ParamPolySym plain;
  for (int i = 0; i <= cap; ++i) {
    const SymFunc lf = l_perp(i, f);
    for (int j = 0; j <= cap; ++j) add_to(plain, {i, j}, outer_mul(s(row(j)), lf));
  }
  ParamPolySym out = plain;
  for (const auto& [key, g] : plain)
    if (key.first < cap && key.second < cap) add_to(out, {key.first + 1, key.second + 1}, g, -1);
  return out;
}

CheckResult check_commutation(int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  for (const Partition& p : partitions_up_to(cap)) {
    const ParamPolySym lhs = commutator_lhs(s(p), cap);
    const ParamPolySym rhs = commutator_rhs(s(p), cap);
    if (lhs == rhs) continue;
    for (int i = 0; i <= cap; ++i) {
      for (int j = 0; j <= cap; ++j) {
        auto a = lhs.find({i, j});
        auto b = rhs.find({i, j});
        const SymFunc fa = a == lhs.end() ? SymFunc{} : a->second;
        const SymFunc fb = b == rhs.end() ? SymFunc{} : b->second;
        if (fa != fb)
          return CheckResult::fail("on " + format_label(p, LabelKind::gl) + " at z^" + std::to_string(i) + " w^" +
                                   std::to_string(j) + ": " + format(fa) + " != " + format(fb));
      }
    }
  }
  return CheckResult::pass();
}

std::map<std::pair<int, int>, Integer> series_pairing_lm(int cap) {
  std::map<std::pair<int, int>, Integer> out;
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; j <= cap; ++j) {
      const Integer v = scalar(series_term(SeriesId::L, i), series_term(SeriesId::M, j));
      if (v != 0) out[{i, j}] = v;
    }
  return out;
}

} // namespace symchar
