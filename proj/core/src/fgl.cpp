#include "symchar/fgl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symchar/inner.hpp"
#include "symchar/schur.hpp"

namespace symchar {

namespace {

int total_degree(const PowerSeries::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    const Integer num(std::string(text.substr(0, slash)));
    if (slash == std::string_view::npos) return Rational(num);
    const Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
}

} // namespace

PowerSeries PowerSeries::variable(int nvars, int index, int cap) {
  PowerSeries p(nvars, cap);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m.at(static_cast<std::size_t>(index)) = 1;
  p.add(m, 1);
  return p;
}

PowerSeries PowerSeries::constant(int nvars, const Rational& c, int cap) {
  PowerSeries p(nvars, cap);
  p.add(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

PowerSeries PowerSeries::univariate(const std::vector<Rational>& coeffs, int cap) {
  PowerSeries p(1, cap);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add({static_cast<int>(k)}, coeffs[k]);
  return p;
}

void PowerSeries::add(const Monomial& m, const Rational& c) {
  if (c == 0 || total_degree(m) > cap_) return;
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PowerSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  cap_ = std::min(cap_, o.cap_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  std::erase_if(terms_, [&](const auto& kv) { return total_degree(kv.first) > cap_; });
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  cap_ = std::min(cap_, o.cap_);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  std::erase_if(terms_, [&](const auto& kv) { return total_degree(kv.first) > cap_; });
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
  if (s == 0) terms_.clear();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("series arity mismatch");
  PowerSeries out(a.nvars_, std::min(a.cap_, b.cap_));
  PowerSeries::Monomial m(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    const int da = total_degree(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (da + total_degree(mb) > out.cap_) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

PowerSeries PowerSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a power series");
  PowerSeries out = constant(nvars_, 1, cap_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

PowerSeries PowerSeries::compose(const std::vector<PowerSeries>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
  if (images.empty()) return *this;
  const int target = images.front().nvars();
  int cap = cap_;
  for (const auto& im : images) {
    if (im.coeff(Monomial(static_cast<std::size_t>(target), 0)) != 0)
      throw std::invalid_argument("substituted series must have no constant term");
    cap = std::min(cap, im.cap());
  }
  // powers are cached per variable since the same ones recur in every monomial
  std::vector<std::vector<PowerSeries>> powers(images.size());
  PowerSeries out(target, cap);
  for (const auto& [m, c] : terms_) {
    PowerSeries term = constant(target, c, cap);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto& cache = powers[i];
      while (static_cast<int>(cache.size()) <= m[i])
        cache.push_back(cache.empty() ? constant(target, 1, cap) : cache.back() * images[i]);
      if (m[i] > 0) term = term * cache[static_cast<std::size_t>(m[i])];
    }
    out += term;
  }
  return out;
}

std::string PowerSeries::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // by total degree, then lexicographically with earlier variables first
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      vars += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    const bool integral = denominator(mag) == 1;
    if (vars.empty()) os << mag;
    else if (mag == 1) os << vars;
    else if (integral) os << mag << vars;
    else os << '(' << mag << ')' << vars;
  }
  return os.str();
}

FGL1::FGL1(std::string name, int cap, std::map<std::pair<int, int>, Rational> coeffs)
    : name_(std::move(name)), cap_(cap), coeffs_(std::move(coeffs)) {
  if (cap < 1) throw std::invalid_argument("formal group law cap must be >= 1");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first.first < 1 || it->first.second < 1)
      throw std::invalid_argument("formal group law coefficients need i, j >= 1");
    if (it->second == 0 || it->first.first + it->first.second > cap_) it = coeffs_.erase(it);
    else ++it;
  }
}

FGL1 FGL1::additive(int cap) { return FGL1("ga", cap, {}); }

FGL1 FGL1::multiplicative(const Rational& b, int cap) {
  std::ostringstream name;
  name << "gm";
  if (b != 1) name << ':' << b;
  return FGL1(name.str(), cap, {{{1, 1}, b}});
}

FGL1 FGL1::parse(std::string_view text, int cap) {
  if (text == "ga") return additive(cap);
  if (text == "gm") return multiplicative(1, cap);
  if (text.rfind("gm:", 0) == 0) return multiplicative(parse_rational(text.substr(3)), cap);
  throw std::invalid_argument("unknown formal group law '" + std::string(text) + "'");
}

PowerSeries FGL1::operator()(const PowerSeries& a, const PowerSeries& b) const {
  PowerSeries out = a + b;
  for (const auto& [ij, c] : coeffs_) out += a.pow(ij.first) * b.pow(ij.second) * c;
  return out;
}

PowerSeries FGL1::series() const {
  return (*this)(PowerSeries::variable(2, 0, cap_), PowerSeries::variable(2, 1, cap_));
}

CheckResult check_axioms(const FGL1& f) {
  const int cap = f.cap();
  const PowerSeries x = PowerSeries::variable(1, 0, cap);
  const PowerSeries zero(1, cap);
  if (f(x, zero) != x) return CheckResult::fail("F(X,0) != X");
  if (f(zero, x) != x) return CheckResult::fail("F(0,Y) != Y");
  for (const auto& [ij, c] : f.coeffs()) {
    auto it = f.coeffs().find({ij.second, ij.first});
    const Rational mirror = it == f.coeffs().end() ? Rational(0) : it->second;
    if (mirror != c) {
      std::ostringstream w;
      w << "not commutative: c_" << ij.first << ',' << ij.second << " = " << c << " but c_" << ij.second << ','
        << ij.first << " = " << mirror;
      return CheckResult::fail(w.str());
    }
  }
  const PowerSeries X = PowerSeries::variable(3, 0, cap);
  const PowerSeries Y = PowerSeries::variable(3, 1, cap);
  const PowerSeries Z = PowerSeries::variable(3, 2, cap);
  const PowerSeries left = f(f(X, Y), Z);
  const PowerSeries right = f(X, f(Y, Z));
  if (left != right) return CheckResult::fail("not associative: F(F(X,Y),Z) - F(X,F(Y,Z)) = " + (left - right).to_string());
  const PowerSeries lam = antipode_series(f);
  if (f(x, lam) != zero) return CheckResult::fail("no inverse series");
  return CheckResult::pass();
}

PowerSeries antipode_series(const FGL1& f) {
  const int cap = f.cap();
  const PowerSeries x = PowerSeries::variable(1, 0, cap);
  PowerSeries lam = x * Rational(-1);
  for (int d = 2; d <= cap; ++d) {
    // lambda_d enters the X^d coefficient of F(X, lambda) only through the Y term
    const Rational c = f(x, lam).coeff(d);
    lam.add({d}, -c);
  }
  return lam;
}

PowerSeries loop_n(const FGL1& f, int n) {
  const int cap = f.cap();
  const PowerSeries x = PowerSeries::variable(1, 0, cap);
  PowerSeries acc(1, cap);
  for (int m = 0; m < std::abs(n); ++m) acc = f(acc, x);
  if (n >= 0) return acc;
  return antipode_series(f).compose({acc});
}

PowerSeries fgl_log(const FGL1& f) {
  const int cap = f.cap();
  // l'(X) = 1 / F_Y(X, 0), with F_Y(X, 0) = 1 + sum_i c_{i,1} X^i
  std::vector<Rational> dy(static_cast<std::size_t>(cap) + 1, 0);
  dy[0] = 1;
  for (const auto& [ij, c] : f.coeffs())
    if (ij.second == 1 && ij.first <= cap) dy[static_cast<std::size_t>(ij.first)] += c;
  std::vector<Rational> inv(static_cast<std::size_t>(cap) + 1, 0);
  inv[0] = 1;
  for (std::size_t k = 1; k < inv.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += dy[i] * inv[k - i];
    inv[k] = -acc;
  }
  PowerSeries log(1, cap);
  for (int k = 1; k <= cap; ++k) log.add({k}, inv[static_cast<std::size_t>(k - 1)] / k);

  const PowerSeries X = PowerSeries::variable(2, 0, cap);
  const PowerSeries Y = PowerSeries::variable(2, 1, cap);
  if (log.compose({f(X, Y)}) != log.compose({X}) + log.compose({Y}))
    throw std::logic_error("logarithm of '" + f.name() + "' does not linearize the group law");
  return log;
}

PowerSeries compositional_inverse(const PowerSeries& f) {
  if (f.nvars() != 1) throw std::invalid_argument("compositional inverse needs a univariate series");
  const Rational a = f.coeff(1);
  if (f.coeff(0) != 0 || a == 0) throw std::invalid_argument("compositional inverse needs f = aX + ..., a != 0");
  PowerSeries g(1, f.cap());
  g.add({1}, 1 / a);
  for (int d = 2; d <= f.cap(); ++d) {
    const Rational c = f.compose({g}).coeff(d);
    g.add({d}, -c / a);
  }
  return g;
}

PowerSeries multiplicative_loop_closed_form(const Rational& b, int n, int cap) {
  PowerSeries out(1, cap);
  // coefficient of X^k is binom(n, k) b^(k-1), with the generalized binomial
  Rational binom = 1;
  Rational bpow = 1;
  for (int k = 1; k <= cap; ++k) {
    binom = binom * (n - k + 1) / k;
    out.add({k}, binom * bpow);
    bpow *= b;
  }
  return out;
}

PowerSeries log1p_series(int cap) {
  PowerSeries out(1, cap);
  for (int k = 1; k <= cap; ++k) out.add({k}, Rational(k % 2 ? 1 : -1, k));
  return out;
}

TensorSymFunc coproduct_from_fgl(FglKind kind, const SymFunc& f) {
  if (kind == FglKind::additive) return coproduct(f);
  TensorSymFunc out;
  for (const auto& [p, c] : f) {
    for (const auto& [legs, v] : iterated_coproduct(s(p), 3)) {
      for (const auto& [mid, cm] : inner_coproduct(s(legs[1]))) {
        const SymFunc& x = outer_mul_basis(legs[0], mid.first);
        const SymFunc& y = outer_mul_basis(legs[2], mid.second);
        out.add(tensor_product(x, y), c * v * cm);
      }
    }
  }
  return out;
}

} // namespace symchar
