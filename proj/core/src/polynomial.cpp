#include "symchar/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace symchar {

Polynomial Polynomial::constant(int nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Polynomial p(nvars);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m.at(static_cast<std::size_t>(index)) = 1;
  p.add(m, 1);
  return p;
}

void Polynomial::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
  const int target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * pow(images[i], m[i]);
    out += term;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial out(a.nvars_);
  Polynomial::Monomial m(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomials first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (has_var) vars << '*';
      has_var = true;
      vars << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (m[i] > 1) vars << '^' << m[i];
    }
    if (!has_var) os << mag;
    else {
      if (mag != 1) os << mag << '*';
      os << vars.str();
    }
  }
  return os.str();
}

} // namespace symchar
