// One PASS/FAIL line per acceptance criterion.  All comparisons are exact;
// criteria with a runtime budget also fail when the budget is exceeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symchar/characters.hpp"
#include "symchar/convolution.hpp"
#include "symchar/fgl.hpp"
#include "symchar/hash.hpp"
#include "symchar/inner.hpp"
#include "symchar/schur.hpp"
#include "symchar/series.hpp"
#include "symchar/text_format.hpp"
#include "symchar/vertex.hpp"

using namespace symchar;

namespace {

struct Failure {
  std::string what;
};

// Collects the first failure; later checks are skipped once one failed.
class Check {
public:
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void expect(bool cond, const std::function<std::string()>& what) {
    ++cases_;
    if (!cond && ok()) failure_ = what();
  }
  void expect(const CheckResult& r, const std::string& what) {
    expect(r.ok, [&] { return what + ": " + r.witness; });
  }
  int cases() const { return cases_; }

private:
  std::string failure_;
  int cases_ = 0;
};

std::string show(const SymFunc& f) { return format(f); }

std::vector<Partition> upto(int n) { return partitions_up_to(n); }

// ---------------------------------------------------------------------------

void newell_littlewood_suite(Check& c) {
  const SymFunc golden = newell_littlewood(s({1}), s({1}));
  c.expect(golden == s({2}) + s({1, 1}) + one(), [&] { return "[1].[1] = " + format(golden, LabelKind::o); });
  for (const Partition& mu : upto(5))
    for (const Partition& nu : upto(5)) {
      const SymFunc direct = newell_littlewood(s(mu), s(nu));
      const SymFunc hashed = newell_littlewood_hash(s(mu), s(nu));
      c.expect(direct == hashed, [&] {
        return to_string(mu) + " x " + to_string(nu) + ": " + show(direct) + " != " + show(hashed);
      });
      if (!c.ok()) return;
    }
}

void kronecker_suite(Check& c) {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const Partition& nu : partitions_of(n)) {
        const SymFunc lib = inner_mul(s(mu), s(nu));
        const SymFunc ref = oracle::kronecker(mu, nu);
        c.expect(lib == ref, [&] { return to_string(mu) + " * " + to_string(nu) + ": " + show(lib) + " != " + show(ref); });
      }
  for (int n = 0; n <= 7; ++n) {
    const CharacterTable& t = character_table(n);
    const auto& labels = t.labels();
    for (std::size_t r = 0; r < labels.size(); ++r)
      for (std::size_t q = 0; q < labels.size(); ++q) {
        Integer sum = 0;
        for (std::size_t l = 0; l < labels.size(); ++l) sum += t.matrix()[l][r] * t.matrix()[l][q];
        const Integer expected = r == q ? z_and_n(labels[r]).first : Integer(0);
        c.expect(sum == expected, [&] { return "column orthogonality n=" + std::to_string(n) + " at " + to_string(labels[r]) + ", " + to_string(labels[q]); });
      }
  }
}

void lr_suite(Check& c) {
  for (const Partition& mu : upto(8))
    for (const Partition& nu : upto(8 - mu.weight())) {
      if (nu < mu) continue;  // commutativity is checked elsewhere; halve the work
      const int n = std::max(1, mu.weight() + nu.weight());
      const Polynomial product = oracle::schur_tableaux(mu, n) * oracle::schur_tableaux(nu, n);
      const SymFunc lr = outer_mul(s(mu), s(nu));
      c.expect(oracle::schur_tableaux(lr, n) == product,
               [&] { return to_string(mu) + " . " + to_string(nu) + " = " + show(lr) + " disagrees with the monomial expansion"; });
      if (!c.ok()) return;
    }
}

TensorN apply_first(const TensorSymFunc& t) {
  TensorN out;
  for (const auto& [k, c] : t)
    for (const auto& [l, d] : coproduct(s(k.first))) out.add({l.first, l.second, k.second}, c * d);
  return out;
}

TensorN apply_second(const TensorSymFunc& t) {
  TensorN out;
  for (const auto& [k, c] : t)
    for (const auto& [l, d] : coproduct(s(k.second))) out.add({k.first, l.first, l.second}, c * d);
  return out;
}

void hopf_suite(Check& c) {
  const auto basis = upto(6);
  for (const Partition& x : basis) {
    const SymFunc fx = s(x);
    const TensorSymFunc dx = coproduct(fx);
    c.expect(apply_first(dx) == apply_second(dx), [&] { return "coassociativity at " + to_string(x); });
    c.expect(outer_mul(one(), fx) == fx && outer_mul(fx, one()) == fx, [&] { return "unit at " + to_string(x); });
    SymFunc left;
    SymFunc right;
    SymFunc s_id;
    SymFunc id_s;
    for (const auto& [k, v] : dx) {
      left.add(s(k.second), counit(s(k.first)) * v);
      right.add(s(k.first), counit(s(k.second)) * v);
      s_id.add(outer_mul(antipode(s(k.first)), s(k.second)), v);
      id_s.add(outer_mul(s(k.first), antipode(s(k.second))), v);
    }
    c.expect(left == fx && right == fx, [&] { return "counit at " + to_string(x); });
    const SymFunc unit_counit = one() * counit(fx);
    c.expect(s_id == unit_counit && id_s == unit_counit, [&] { return "antipode law at " + to_string(x); });
    for (const Partition& y : upto(6 - x.weight())) {
      const SymFunc xy = outer_mul(fx, s(y));
      c.expect(xy == outer_mul(s(y), fx), [&] { return "commutativity at " + to_string(x) + ", " + to_string(y); });
      c.expect(coproduct(xy) == tensor_mul(dx, coproduct(s(y))),
               [&] { return "bialgebra law at " + to_string(x) + ", " + to_string(y); });
      for (const Partition& z : upto(6 - x.weight() - y.weight()))
        c.expect(outer_mul(xy, s(z)) == outer_mul(fx, outer_mul(s(y), s(z))),
                 [&] { return "associativity at " + to_string(x) + ", " + to_string(y) + ", " + to_string(z); });
    }
    if (!c.ok()) return;
  }
  c.expect(same_cochain(convolve1(antipode_cochain(), identity_cochain()), unit_cochain(), 6), "S * Id = e");
  c.expect(same_cochain(antipode_cochain(), milnor_moore_inverse1(identity_cochain()), 8),
           "closed antipode vs Milnor-Moore recursion");
}

void classification_suite(Check& c) {
  const Pairing inner = inner_pairing();
  c.expect(is_laplace(inner, 6), "inner is_laplace");
  c.expect(is_cocycle2(inner, 6), "inner is_cocycle2");
  c.expect(is_frobenius(inner, 6), "inner is_frobenius");
  const CheckResult outer = is_laplace(outer_pairing(), 6);
  c.expect(!outer.ok, [] { return std::string("outer passed is_laplace"); });
  c.expect(outer.witness.rfind("x=s[1] y=s[1] z=s[1]", 0) == 0,
           [&] { return "outer witness differs from x=y=z=s[1]: " + outer.witness; });
  // m o (S (x) S) written out directly
  const Pairing twisted("m(SxS)", [](const Partition& x, const Partition& y) {
    return outer_mul(antipode(s(x)), antipode(s(y)));
  }, true, false);
  c.expect(same_pairing(milnor_moore_inverse2(outer_pairing()), twisted, 6), "inverse of m vs m o (S (x) S)");
}

void thibon_suite(Check& c) {
  const SymFunc golden = thibon_inner(s({1}), s({1}));
  c.expect(golden == s({2}) + s({1, 1}) + s({1}), [&] { return "<<1>>*<<1>> = " + format(golden, LabelKind::thibon); });
  for (const Partition& mu : upto(4))
    for (const Partition& nu : upto(4)) {
      const SymFunc a = thibon_inner(s(mu), s(nu));
      const SymFunc b = thibon_inner_direct(s(mu), s(nu));
      c.expect(a == b, [&] { return to_string(mu) + " * " + to_string(nu) + ": " + show(a) + " != " + show(b); });
    }
  c.expect(hash_is_hopf(named_hash_spec("thibon"), 5), "hash_is_hopf(thibon)");
  const auto basis = upto(8);
  for (const Partition& a : basis)
    for (const Partition& b : upto(8 - a.weight()))
      for (const Partition& x : upto(8 - a.weight() - b.weight()))
        for (const Partition& y : upto(8 - a.weight() - b.weight() - x.weight())) {
          const SymFunc lhs = cummins_expand(s(a), s(b), s(x), s(y));
          const SymFunc rhs = inner_mul(outer_mul(s(a), s(b)), outer_mul(s(x), s(y)));
          c.expect(lhs == rhs, [&] {
            return "Cummins at " + to_string(a) + "; " + to_string(b) + "; " + to_string(x) + "; " + to_string(y);
          });
          if (!c.ok()) return;
        }
}

void murnaghan_littlewood_suite(Check& c) {
  const SymFunc golden = murnaghan_littlewood(s({1}), s({1}));
  c.expect(golden == s({2}) + s({1, 1}) + s({1}) + one(),
           [&] { return "<1>*<1> = " + format(golden, LabelKind::reduced); });
  for (const Partition& mu : upto(6))
    for (const Partition& nu : upto(6 - mu.weight())) {
      const SymFunc hashed = murnaghan_littlewood(s(mu), s(nu));
      const SymFunc recursive = murnaghan_littlewood_recursive(s(mu), s(nu));
      const SymFunc table = reduced_oracle(s(mu), s(nu), 12);
      c.expect(hashed == recursive && hashed == table, [&] {
        return to_string(mu) + " * " + to_string(nu) + ": hash " + show(hashed) + ", recursive " + show(recursive) +
               ", S_12 " + show(table);
      });
      if (!c.ok()) return;
    }
}

void rational_suite(Check& c) {
  const RationalChar golden = rational_mul(tensor({1}, {1}), tensor({1}, {}));
  const RationalChar expected = tensor({2}, {1}) + tensor({1, 1}, {1}) + tensor({1}, {});
  c.expect(golden == expected, [&] { return "{1;1}.{1;0} = " + format_rational(golden); });
  const auto small = upto(3);
  for (const Partition& k : small)
    for (const Partition& l : small)
      for (const Partition& m : small)
        for (const Partition& n : small) {
          const RationalChar x = tensor(k, l);
          const RationalChar y = tensor(m, n);
          const RationalChar direct = rational_mul(x, y);
          const RationalChar hashed = rational_mul_hash(x, y);
          c.expect(direct == hashed, [&] {
            return "{" + to_string(k) + ";" + to_string(l) + "}.{" + to_string(m) + ";" + to_string(n) + "}: " +
                   format_rational(direct) + " != " + format_rational(hashed);
          });
          if (!c.ok()) return;
        }
  for (const Partition& k : upto(4))
    for (const Partition& l : upto(4)) {
      const RationalChar x = tensor(k, l);
      const auto there = rational_convert(x, RationalDirection::to_reducible);
      const auto back = rational_convert(there, RationalDirection::to_irreducible);
      const auto there2 = rational_convert(x, RationalDirection::to_irreducible);
      const auto back2 = rational_convert(there2, RationalDirection::to_reducible);
      c.expect(back == x && back2 == x, [&] { return "round trip at {" + to_string(k) + ";" + to_string(l) + "}"; });
    }
}

void vertex_suite(Check& c) {
  for (const Partition& lambda : upto(6)) {
    const SymFunc built = bernstein_chain(lambda);
    c.expect(built == s(lambda), [&] { return "B-chain " + to_string(lambda) + " = " + show(built); });
  }
  c.expect(check_commutation(4), "L^perp(z)M(w) = (1-zw)M(w)L^perp(z) at cap 4");
}

// coefficient of X^k in ((1+bX)^n - 1)/b, by the generalized binomial theorem
Rational binomial_loop_coeff(const Rational& b, int n, int k) {
  Rational c = 1;
  for (int i = 0; i < k; ++i) c = c * Rational(n - i) / Rational(i + 1);
  for (int i = 1; i < k; ++i) c *= b;
  return c;
}

void fgl_suite(Check& c) {
  constexpr int cap = 6;
  const FGL1 ga = FGL1::additive(cap);
  for (const Rational b : {Rational(1), Rational(2), Rational(-1, 3)}) {
    const FGL1 gm = FGL1::multiplicative(b, cap);
    for (int n = -4; n <= 4; ++n) {
      const PowerSeries got_a = loop_n(ga, n);
      const PowerSeries got_m = loop_n(gm, n);
      PowerSeries want_a(1, cap);
      want_a.add({1}, n);
      PowerSeries want_m(1, cap);
      for (int k = 1; k <= cap; ++k) want_m.add({k}, binomial_loop_coeff(b, n, k));
      c.expect(got_a == want_a, [&] { return "Ga [" + std::to_string(n) + "] = " + got_a.to_string(); });
      std::ostringstream bs;
      bs << b;
      c.expect(got_m == want_m, [&] {
        return "Gm^" + bs.str() + " [" + std::to_string(n) + "] = " + got_m.to_string() + ", expected " + want_m.to_string();
      });
    }
  }
  PowerSeries ln(1, cap);
  for (int k = 1; k <= cap; ++k) ln.add({k}, Rational(k % 2 ? 1 : -1, k));
  const PowerSeries lg = fgl_log(FGL1::multiplicative(1, cap));
  c.expect(lg == ln, [&] { return "log(Gm) = " + lg.to_string(); });

  const HashProduct thibon = build_hash(named_hash_spec("thibon"));
  for (const Partition& lambda : upto(4)) {
    const TensorSymFunc dm = coproduct_from_fgl(FglKind::multiplicative, s(lambda));
    for (const Partition& mu : upto(4))
      for (const Partition& nu : upto(4)) {
        const Integer lhs = dm.coeff({mu, nu});
        const Integer rhs = thibon.basis(mu, nu).coeff(lambda);
        c.expect(lhs == rhs, [&] {
          return "duality at " + to_string(lambda) + " | " + to_string(mu) + " (x) " + to_string(nu);
        });
      }
    c.expect(oracle::on_multiplicative_alphabet(s(lambda), 3, 3) == oracle::tensor_eval(dm, 3, 3),
             [&] { return "alphabet oracle at " + to_string(lambda); });
  }
}

void series_suite(Check& c) {
  constexpr int cap = 8;
  const std::pair<SeriesId, SeriesId> pairs[] = {{SeriesId::M, SeriesId::L}, {SeriesId::A, SeriesId::B}, {SeriesId::C, SeriesId::D}};
  for (const auto& [a, b] : pairs)
    for (int d = 0; d <= cap; ++d) {
      SymFunc conv;
      for (int i = 0; i <= d; ++i) conv += outer_mul(series_term(a, i), series_term(b, d - i));
      const SymFunc expected = d == 0 ? one() : SymFunc{};
      c.expect(conv == expected, [&] {
        return std::string(to_string(a)) + std::string(to_string(b)) + " degree " + std::to_string(d) + ": " + show(conv);
      });
    }
  c.expect(is_group_like(SeriesId::M, cap), "M group-like");
  c.expect(is_group_like(SeriesId::L, cap), "L group-like");
  const CheckResult d = is_group_like(SeriesId::D, cap);
  c.expect(!d.ok && !d.witness.empty(), [] { return std::string("D reported group-like"); });
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no budget
  std::function<void(Check&)> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "newell-littlewood golden + hash = sum over zeta, labels of weight <= 5", 10, newell_littlewood_suite},
      {2, "kronecker = Frobenius-formula oracle n <= 6; column orthogonality n <= 7", 60, kronecker_suite},
      {3, "outer product = monomial expansion, |mu|+|nu| <= 8", 120, lr_suite},
      {4, "Hopf axioms to weight 6; closed antipode = Milnor-Moore to weight 8", 0, hopf_suite},
      {5, "inner Laplace/cocycle/Frobenius to 6; outer not Laplace; inverse of m = m(SxS) to 6", 0, classification_suite},
      {6, "Thibon golden, hash = double sum |mu|,|nu| <= 4, Hopf, Cummins to weight 8", 60, thibon_suite},
      {7, "Murnaghan-Littlewood hash = recursive = S_12 table, |mu|+|nu| <= 6", 120, murnaghan_littlewood_suite},
      {8, "rational golden, hash = direct to (3,3), conversions round-trip to (4,4)", 0, rational_suite},
      {9, "Bernstein chain |lambda| <= 6; commutation relation to cap 4", 0, vertex_suite},
      {10, "FGL loops |n| <= 4 at cap 6, log Gm, Delta_m duality and alphabet oracle to weight 4", 0, fgl_suite},
      {11, "series inverse pairs to degree 8; M, L group-like; D not", 0, series_suite},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string why = !error.empty() ? error : check.failure();
    if (why.empty() && cr.budget_seconds > 0 && seconds > cr.budget_seconds)
      why = "over the " + std::to_string(static_cast<int>(cr.budget_seconds)) + " s budget";
    const bool pass = why.empty();
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << " (tol=exact, " << check.cases()
              << " cases, " << timing;
    if (cr.budget_seconds > 0) std::cout << " <= " << cr.budget_seconds << "s";
    std::cout << ")";
    if (!pass) std::cout << ": " << why;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
