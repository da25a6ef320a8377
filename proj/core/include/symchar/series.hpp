#pragma once

#include <string_view>

#include "symchar/check.hpp"
#include "symchar/symfunc.hpp"

namespace symchar {

// Schur function series at t = 1, graded by degree.
//   M = sum h_n, L = sum (-1)^n e_n,
//   A = sum over class A of (-1)^{|a|/2} s_a, B = sum over class B of s_b,
//   C = sum over class C of (-1)^{|c|/2} s_c, D = sum over class D of s_d.
enum class SeriesId { M, L, A, B, C, D };

SeriesId parse_series_id(std::string_view name);
std::string_view to_string(SeriesId id);
/// M <-> L, A <-> B, C <-> D.
SeriesId inverse_series(SeriesId id);

struct TruncatedSeries {
  int cap = 0;
  std::map<int, SymFunc> coeffs;  // degree -> homogeneous term

  SymFunc sum() const;
};

/// Homogeneous degree d term (cached).
const SymFunc& series_term(SeriesId id, int d);
TruncatedSeries series_terms(SeriesId id, int cap);

/// Degreewise product of two truncated series, up to the smaller cap.
TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b);

/// f / series = sum_d skew(f, term_d); finite.
SymFunc skew_by_series(const SymFunc& f, SeriesId id);
/// f * series truncated to total degree <= cap.
SymFunc mul_by_series(const SymFunc& f, SeriesId id, int cap);

/// m(f) = <M(1)|f>, l(f) = <L(1)|f>.
Integer linear_form_m(const SymFunc& f);
Integer linear_form_l(const SymFunc& f);

/// Delta(term_d) = sum_{i+j=d} term_i (x) term_j for every d <= cap.
CheckResult is_group_like(SeriesId id, int cap);

} // namespace symchar
