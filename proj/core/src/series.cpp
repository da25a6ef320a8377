#include "symchar/series.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "symchar/schur.hpp"

namespace symchar {

namespace {

SymFunc compute_term(SeriesId id, int d) {
  SymFunc out;
  if (d == 0) return one();
  switch (id) {
  case SeriesId::M:
    return s(row(d));
  case SeriesId::L:
    return s(column(d)) * Integer(d % 2 ? -1 : 1);
  default:
    break;
  }
  if (d % 2) return out;
  const int sign = (d / 2) % 2 ? -1 : 1;
  PartitionClass cls = PartitionClass::P;
  int coeff = 1;
  switch (id) {
  case SeriesId::A: cls = PartitionClass::A; coeff = sign; break;
  case SeriesId::B: cls = PartitionClass::B; break;
  case SeriesId::C: cls = PartitionClass::C; coeff = sign; break;
  case SeriesId::D: cls = PartitionClass::D; break;
  default: break;
  }
  for (const Partition& p : partitions_of(d))
    if (in_class(p, cls)) out.add(p, coeff);
  return out;
}

} // namespace

SeriesId parse_series_id(std::string_view name) {
  if (name == "M") return SeriesId::M;
  if (name == "L") return SeriesId::L;
  if (name == "A") return SeriesId::A;
  if (name == "B") return SeriesId::B;
  if (name == "C") return SeriesId::C;
  if (name == "D") return SeriesId::D;
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

std::string_view to_string(SeriesId id) {
  switch (id) {
  case SeriesId::M: return "M";
  case SeriesId::L: return "L";
  case SeriesId::A: return "A";
  case SeriesId::B: return "B";
  case SeriesId::C: return "C";
  case SeriesId::D: return "D";
  }
  return "?";
}

SeriesId inverse_series(SeriesId id) {
  switch (id) {
  case SeriesId::M: return SeriesId::L;
  case SeriesId::L: return SeriesId::M;
  case SeriesId::A: return SeriesId::B;
  case SeriesId::B: return SeriesId::A;
  case SeriesId::C: return SeriesId::D;
  case SeriesId::D: return SeriesId::C;
  }
  return id;
}

SymFunc TruncatedSeries::sum() const {
  SymFunc out;
  for (const auto& [d, f] : coeffs) out += f;
  return out;
}

const SymFunc& series_term(SeriesId id, int d) {
  static std::shared_mutex mutex;
  static std::map<std::pair<SeriesId, int>, SymFunc> cache;
  if (d < 0) throw std::invalid_argument("series degree must be non-negative");
  {
    std::shared_lock lock(mutex);
    auto it = cache.find({id, d});
    if (it != cache.end()) return it->second;
  }
  SymFunc t = compute_term(id, d);
  std::unique_lock lock(mutex);
  return cache.try_emplace({id, d}, std::move(t)).first->second;
}

TruncatedSeries series_terms(SeriesId id, int cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be non-negative");
  TruncatedSeries out;
  out.cap = cap;
  for (int d = 0; d <= cap; ++d) out.coeffs[d] = series_term(id, d);
  return out;
}

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.cap = std::min(a.cap, b.cap);
  for (int d = 0; d <= out.cap; ++d) {
    SymFunc acc;
    for (int i = 0; i <= d; ++i) {
      auto ia = a.coeffs.find(i);
      auto ib = b.coeffs.find(d - i);
      if (ia != a.coeffs.end() && ib != b.coeffs.end()) acc += outer_mul(ia->second, ib->second);
    }
    out.coeffs[d] = std::move(acc);
  }
  return out;
}

SymFunc skew_by_series(const SymFunc& f, SeriesId id) {
  SymFunc out;
  const int top = max_degree(f);
  for (int d = 0; d <= top; ++d) out += skew(f, series_term(id, d));
  return out;
}

SymFunc mul_by_series(const SymFunc& f, SeriesId id, int cap) {
  SymFunc out;
  for (const auto& [p, c] : f)
    for (int d = 0; p.weight() + d <= cap; ++d) out.add(outer_mul(s(p), series_term(id, d)), c);
  return out;
}

Integer linear_form_m(const SymFunc& f) {
  Integer r = 0;
  for (const auto& [p, c] : f) r += c * series_term(SeriesId::M, p.weight()).coeff(p);
  return r;
}

Integer linear_form_l(const SymFunc& f) {
  Integer r = 0;
  for (const auto& [p, c] : f) r += c * series_term(SeriesId::L, p.weight()).coeff(p);
  return r;
}

CheckResult is_group_like(SeriesId id, int cap) {
  for (int d = 0; d <= cap; ++d) {
    TensorSymFunc expected;
    for (int i = 0; i <= d; ++i) expected += tensor_product(series_term(id, i), series_term(id, d - i));
    if (coproduct(series_term(id, d)) != expected)
      return CheckResult::fail("degree " + std::to_string(d) + ": Delta(" + std::string(to_string(id)) + "_" +
                               std::to_string(d) + ") differs from the sum of tensor squares");
  }
  return CheckResult::pass();
}

} // namespace symchar
