#include "symchar/convolution.hpp"

#include <mutex>
#include <shared_mutex>

#include "symchar/inner.hpp"
#include "symchar/schur.hpp"
#include "symchar/text_format.hpp"

namespace symchar {

struct Cochain1::State {
  std::string name;
  Action action;
  bool normalized = false;
  bool conormalized = false;
  mutable std::shared_mutex mutex;
  mutable std::map<Partition, SymFunc> memo;
};

struct Pairing::State {
  std::string name;
  Action action;
  bool unital = false;
  bool normalized = false;
  mutable std::shared_mutex mutex;
  mutable std::map<PartitionPair, SymFunc> memo;
};

namespace {

template <class Map, class Key, class Compute>
const SymFunc& memo_get(std::shared_mutex& mutex, Map& memo, const Key& key, Compute&& compute) {
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  SymFunc v = compute();
  std::unique_lock lock(mutex);
  return memo.try_emplace(key, std::move(v)).first->second;
}

std::string show(const Partition& p) { return format_label(p, LabelKind::gl); }

// Basis triples with total weight <= d; those with no unit factor come first,
// each group by increasing total weight.
template <class Fn>
CheckResult for_triples(int d, Fn&& fn) {
  const std::vector<Partition> basis = partitions_up_to(d);
  for (int pass = 0; pass < 2; ++pass) {
    for (int total = 0; total <= d; ++total) {
      for (const Partition& x : basis) {
        for (const Partition& y : basis) {
          for (const Partition& z : basis) {
            if (x.weight() + y.weight() + z.weight() != total) continue;
            const bool has_unit = x.empty() || y.empty() || z.empty();
            if (has_unit != (pass == 1)) continue;
            if (CheckResult r = fn(x, y, z); !r) return r;
          }
        }
      }
    }
  }
  return CheckResult::pass();
}

template <class Fn>
CheckResult for_pairs(int d, Fn&& fn) {
  const std::vector<Partition> basis = partitions_up_to(d);
  for (const Partition& x : basis)
    for (const Partition& y : basis)
      if (x.weight() + y.weight() <= d)
        if (CheckResult r = fn(x, y); !r) return r;
  return CheckResult::pass();
}

SymFunc eps_times_one(const Partition& p) { return p.empty() ? one() : SymFunc{}; }

TensorSymFunc apply_comultiplication(const Comultiplication& delta, const SymFunc& f) {
  TensorSymFunc out;
  for (const auto& [p, c] : f) out.add(delta(p), c);
  return out;
}

} // namespace

Cochain1::Cochain1(std::string name, Action action, bool normalized, bool conormalized)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->action = std::move(action);
  state_->normalized = normalized;
  state_->conormalized = conormalized;
}

Cochain1::Cochain1(std::shared_ptr<State> s) : state_(std::move(s)) {}
const std::string& Cochain1::name() const { return state_->name; }
bool Cochain1::normalized() const { return state_->normalized; }
bool Cochain1::conormalized() const { return state_->conormalized; }

Cochain1 Cochain1::recursive(std::string name, RecursiveAction body, bool normalized, bool conormalized) {
  auto state = std::make_shared<State>();
  state->name = std::move(name);
  state->normalized = normalized;
  state->conormalized = conormalized;
  // the action lives inside the state, so a non-owning handle is always valid
  State* raw = state.get();
  state->action = [raw, body = std::move(body)](const Partition& p) {
    return body(Cochain1(std::shared_ptr<State>(std::shared_ptr<State>{}, raw)), p);
  };
  return Cochain1(std::move(state));
}

const SymFunc& Cochain1::operator()(const Partition& p) const {
  return memo_get(state_->mutex, state_->memo, p, [&] { return state_->action(p); });
}

SymFunc Cochain1::apply(const SymFunc& f) const {
  SymFunc out;
  for (const auto& [p, c] : f) out.add((*this)(p), c);
  return out;
}

Pairing::Pairing(std::string name, Action action, bool unital, bool normalized) : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->action = std::move(action);
  state_->unital = unital;
  state_->normalized = normalized;
}

Pairing::Pairing(std::shared_ptr<State> s) : state_(std::move(s)) {}
const std::string& Pairing::name() const { return state_->name; }
bool Pairing::unital() const { return state_->unital; }
bool Pairing::normalized() const { return state_->normalized; }

Pairing Pairing::recursive(std::string name, RecursiveAction body, bool unital, bool normalized) {
  auto state = std::make_shared<State>();
  state->name = std::move(name);
  state->unital = unital;
  state->normalized = normalized;
  State* raw = state.get();
  state->action = [raw, body = std::move(body)](const Partition& x, const Partition& y) {
    return body(Pairing(std::shared_ptr<State>(std::shared_ptr<State>{}, raw)), x, y);
  };
  return Pairing(std::move(state));
}

const SymFunc& Pairing::operator()(const Partition& x, const Partition& y) const {
  return memo_get(state_->mutex, state_->memo, PartitionPair{x, y}, [&] { return state_->action(x, y); });
}

SymFunc Pairing::apply(const SymFunc& f, const SymFunc& g) const {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add((*this)(a, b), ca * cb);
  return out;
}

Cochain1 identity_cochain() {
  return Cochain1("id", [](const Partition& p) { return s(p); }, true, true);
}

Cochain1 antipode_cochain() {
  return Cochain1("S", [](const Partition& p) { return antipode(s(p)); }, true, true);
}

Cochain1 eps1_cochain() {
  return Cochain1("m", [](const Partition& p) { return p.length() <= 1 ? one() : SymFunc{}; }, true, false);
}

Cochain1 unit_cochain() { return Cochain1("e", eps_times_one, true, true); }

Cochain1 named_cochain(std::string_view name) {
  if (name == "id" || name == "Id" || name == "1") return identity_cochain();
  if (name == "S") return antipode_cochain();
  if (name == "m") return eps1_cochain();
  if (name == "e") return unit_cochain();
  throw std::invalid_argument("unknown cochain '" + std::string(name) + "'");
}

Pairing inner_pairing() {
  return Pairing("inner", [](const Partition& x, const Partition& y) { return inner_mul_basis(x, y); }, true, true);
}

Pairing outer_pairing() {
  return Pairing("outer", [](const Partition& x, const Partition& y) { return outer_mul_basis(x, y); }, true, false);
}

Pairing schur_hall_pairing() {
  return Pairing("schur-hall", [](const Partition& x, const Partition& y) { return x == y ? one() : SymFunc{}; }, true,
                 true);
}

Pairing unit_pairing() {
  return Pairing("e2", [](const Partition& x, const Partition& y) { return x.empty() && y.empty() ? one() : SymFunc{}; },
                 true, true);
}

Pairing named_pairing(std::string_view name) {
  if (name == "inner") return inner_pairing();
  if (name == "outer") return outer_pairing();
  if (name == "schur-hall") return schur_hall_pairing();
  if (name == "e2") return unit_pairing();
  if (name.rfind("derived:", 0) == 0) {
    const std::string_view rest = name.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected derived:<cochain>:<pairing>, got '" + std::string(name) + "'");
    return derived_pairing(named_pairing(rest.substr(colon + 1)), named_cochain(rest.substr(0, colon)));
  }
  throw std::invalid_argument("unknown pairing '" + std::string(name) + "'");
}

Cochain1 convolve1(const Cochain1& f, const Cochain1& g) {
  return Cochain1(
      "(" + f.name() + "*" + g.name() + ")",
      [f, g](const Partition& p) {
        SymFunc out;
        for (const auto& [k, c] : coproduct_basis(p)) out.add(outer_mul(f(k.first), g(k.second)), c);
        return out;
      },
      f.normalized() && g.normalized(), f.conormalized() && g.conormalized());
}

Pairing convolve2(const Pairing& a, const Pairing& b) {
  return Pairing(
      "(" + a.name() + "*" + b.name() + ")",
      [a, b](const Partition& x, const Partition& y) {
        SymFunc out;
        for (const auto& [kx, cx] : coproduct_basis(x)) {
          for (const auto& [ky, cy] : coproduct_basis(y)) {
            const SymFunc& left = a(kx.first, ky.first);
            if (left.is_zero()) continue;
            const SymFunc& right = b(kx.second, ky.second);
            if (right.is_zero()) continue;
            out.add(outer_mul(left, right), cx * cy);
          }
        }
        return out;
      },
      a.unital() && b.unital(), a.normalized() && b.normalized());
}

Cochain1 milnor_moore_inverse1(const Cochain1& f) {
  if (!f.normalized() || f(Partition{}) != one())
    throw std::invalid_argument("Milnor-Moore inverse of '" + f.name() + "' needs a normalized cochain (f(1) = 1)");
  return Cochain1::recursive(
      "bar(" + f.name() + ")",
      [f](const Cochain1& self, const Partition& p) {
        if (p.empty()) return one();
        SymFunc out = f(p) * Integer(-1);
        for (const auto& [k, c] : cut_coproduct(s(p))) out.add(outer_mul(f(k.first), self(k.second)), -c);
        return out;
      },
      true, f.conormalized());
}

Pairing milnor_moore_inverse2(const Pairing& a) {
  if (a(Partition{}, Partition{}) != one())
    throw std::invalid_argument("Milnor-Moore inverse of '" + a.name() + "' needs a unital pairing (a(1,1) = 1)");
  return Pairing::recursive(
      "bar(" + a.name() + ")",
      [a](const Pairing& self, const Partition& x, const Partition& y) {
        if (x.empty() && y.empty()) return one();
        SymFunc out = a(x, y) * Integer(-1);
        // cut coproduct of Sym (x) Sym: neither half may be the unit 1 (x) 1
        for (const auto& [kx, cx] : coproduct_basis(x)) {
          for (const auto& [ky, cy] : coproduct_basis(y)) {
            if (kx.first.empty() && ky.first.empty()) continue;
            if (kx.second.empty() && ky.second.empty()) continue;
            const SymFunc& left = a(kx.first, ky.first);
            if (left.is_zero()) continue;
            out.add(outer_mul(left, self(kx.second, ky.second)), -(cx * cy));
          }
        }
        return out;
      },
      true, a.normalized());
}

Pairing coboundary1(const Cochain1& f) {
  if (!f.normalized() || f(Partition{}) != one())
    throw std::invalid_argument("coboundary of '" + f.name() + "' needs a normalized cochain");
  if (!f.conormalized()) throw std::invalid_argument("coboundary of '" + f.name() + "' needs a conormalized cochain");
  const Cochain1 fbar = milnor_moore_inverse1(f);
  const Pairing left("eps(x)" + f.name(),
                     [f](const Partition& x, const Partition& y) { return x.empty() ? f(y) : SymFunc{}; }, true, false);
  const Pairing middle(fbar.name() + "(m)",
                       [fbar](const Partition& x, const Partition& y) { return fbar.apply(outer_mul_basis(x, y)); },
                       true, false);
  const Pairing right(f.name() + "(x)eps",
                      [f](const Partition& x, const Partition& y) { return y.empty() ? f(x) : SymFunc{}; }, true, false);
  return convolve2(convolve2(left, middle), right);
}

CheckResult is_cocycle2(const Pairing& c, int max_degree) {
  return for_triples(max_degree, [&](const Partition& x, const Partition& y, const Partition& z) {
    SymFunc lhs;
    for (const auto& [kx, cx] : coproduct_basis(x)) {
      for (const auto& [ky, cy] : coproduct_basis(y)) {
        const SymFunc& first = c(kx.first, ky.first);
        if (first.is_zero()) continue;
        lhs.add(outer_mul(first, c.apply(outer_mul_basis(kx.second, ky.second), s(z))), cx * cy);
      }
    }
    SymFunc rhs;
    for (const auto& [ky, cy] : coproduct_basis(y)) {
      for (const auto& [kz, cz] : coproduct_basis(z)) {
        const SymFunc& first = c(ky.first, kz.first);
        if (first.is_zero()) continue;
        rhs.add(outer_mul(first, c.apply(s(x), outer_mul_basis(ky.second, kz.second))), cy * cz);
      }
    }
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("x=" + show(x) + " y=" + show(y) + " z=" + show(z) + ": " + format(lhs) + " != " +
                             format(rhs));
  });
}

CheckResult is_algebra_hom(const Cochain1& f, int max_degree) {
  if (f(Partition{}) != one()) return CheckResult::fail(f.name() + "(1) = " + format(f(Partition{})));
  return for_pairs(max_degree, [&](const Partition& x, const Partition& y) {
    const SymFunc lhs = f.apply(outer_mul_basis(x, y));
    const SymFunc rhs = outer_mul(f(x), f(y));
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("x=" + show(x) + " y=" + show(y) + ": f(xy) = " + format(lhs) + " but f(x)f(y) = " +
                             format(rhs));
  });
}

CheckResult is_laplace(const Pairing& a, int max_degree) {
  return for_triples(max_degree, [&](const Partition& x, const Partition& y, const Partition& z) {
    const std::string where = "x=" + show(x) + " y=" + show(y) + " z=" + show(z);
    const SymFunc right_lhs = a.apply(s(x), outer_mul_basis(y, z));
    SymFunc right_rhs;
    for (const auto& [k, c] : coproduct_basis(x)) right_rhs.add(outer_mul(a(k.first, y), a(k.second, z)), c);
    if (right_lhs != right_rhs)
      return CheckResult::fail(where + ": a(x,yz) = " + format(right_lhs) + " but sum a(x1,y)a(x2,z) = " +
                               format(right_rhs));
    const SymFunc left_lhs = a.apply(outer_mul_basis(x, y), s(z));
    SymFunc left_rhs;
    for (const auto& [k, c] : coproduct_basis(z)) left_rhs.add(outer_mul(a(x, k.first), a(y, k.second)), c);
    if (left_lhs != left_rhs)
      return CheckResult::fail(where + ": a(xy,z) = " + format(left_lhs) + " but sum a(x,z1)a(y,z2) = " +
                               format(left_rhs));
    return CheckResult::pass();
  });
}

Comultiplication dual_coproduct(const Pairing& a) {
  return [a](const Partition& lambda) {
    TensorSymFunc out;
    const auto labels = partitions_of(lambda.weight());
    for (const Partition& mu : labels)
      for (const Partition& nu : labels) out.add({mu, nu}, a(mu, nu).coeff(lambda));
    return out;
  };
}

CheckResult is_frobenius(const Pairing& a, const Comultiplication& delta, int max_degree) {
  const std::vector<Partition> basis = partitions_up_to(max_degree);

  for (const Partition& x : basis) {
    for (const Partition& y : basis) {
      const SymFunc& v = a(x, y);
      if (v.is_zero()) continue;
      if (x.weight() != y.weight() || min_degree(v) != x.weight() || symchar::max_degree(v) != x.weight())
        return CheckResult::fail("not grade-preserving: a(" + show(x) + "," + show(y) + ") = " + format(v));
    }
  }

  std::vector<bool> active(static_cast<std::size_t>(max_degree) + 1, false);
  for (int n = 0; n <= max_degree; ++n) {
    const auto labels = partitions_of(n);
    for (const Partition& x : labels)
      for (const Partition& y : labels)
        if (!a(x, y).is_zero()) active[static_cast<std::size_t>(n)] = true;
  }

  for (const Partition& x : basis) {
    const TensorSymFunc d = delta(x);
    if (d != swap_legs(d)) return CheckResult::fail("comultiplication not cocommutative on " + show(x));
  }

  for (const Partition& x : basis) {
    const int n = x.weight();
    if (!active[static_cast<std::size_t>(n)]) continue;
    SymFunc counit_side;
    for (const auto& [k, c] : delta(x)) counit_side.add(k.second, c * counit_eps1(s(k.first)));
    if (counit_side != s(x)) return CheckResult::fail("counit law fails on " + show(x) + ": " + format(counit_side));
    if (a(row(n), x) != s(x) || a(x, row(n)) != s(x))
      return CheckResult::fail("h_" + std::to_string(n) + " is not a unit for " + show(x));
  }

  for (int n = 0; n <= max_degree; ++n) {
    const auto labels = partitions_of(n);
    for (const Partition& x : labels) {
      for (const Partition& y : labels) {
        const TensorSymFunc middle = apply_comultiplication(delta, a(x, y));
        TensorSymFunc left;
        for (const auto& [k, c] : delta(y))
          for (const auto& [p, cp] : a(x, k.first)) left.add({p, k.second}, c * cp);
        TensorSymFunc right;
        for (const auto& [k, c] : delta(x))
          for (const auto& [p, cp] : a(k.second, y)) right.add({k.first, p}, c * cp);
        if (left != middle || right != middle)
          return CheckResult::fail("Frobenius law fails on x=" + show(x) + " y=" + show(y));
      }
    }
  }

  return for_pairs(max_degree, [&](const Partition& x, const Partition& y) {
    const TensorSymFunc lhs = apply_comultiplication(delta, outer_mul_basis(x, y));
    const TensorSymFunc rhs = tensor_mul(delta(x), delta(y));
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("mixed bialgebra law fails on x=" + show(x) + " y=" + show(y) + ": " + format(lhs) +
                             " != " + format(rhs));
  });
}

CheckResult is_frobenius(const Pairing& a, int max_degree) { return is_frobenius(a, dual_coproduct(a), max_degree); }

Pairing derived_pairing(const Pairing& a, const Cochain1& phi, int check_degree) {
  if (CheckResult r = is_algebra_hom(phi, check_degree); !r)
    throw std::invalid_argument("derived pairing needs an algebra map; '" + phi.name() + "' fails: " + r.witness);
  return Pairing(
      "derived:" + phi.name() + ":" + a.name(),
      [a, phi](const Partition& x, const Partition& y) { return phi.apply(a(x, y)); },
      a.unital() && phi.normalized(), a.normalized() && phi.normalized());
}

Pairing frobenius_inverse(const Pairing& a, int check_degree) {
  if (CheckResult r = is_frobenius(a, check_degree); !r)
    throw std::invalid_argument("'" + a.name() + "' is not a Frobenius pairing: " + r.witness);
  return Pairing(
      "S(" + a.name() + ")", [a](const Partition& x, const Partition& y) { return antipode(a(x, y)); }, a.unital(),
      a.normalized());
}

CheckResult same_cochain(const Cochain1& f, const Cochain1& g, int max_degree) {
  for (const Partition& p : partitions_up_to(max_degree))
    if (f(p) != g(p))
      return CheckResult::fail(f.name() + " and " + g.name() + " differ on " + show(p) + ": " + format(f(p)) +
                               " vs " + format(g(p)));
  return CheckResult::pass();
}

CheckResult same_pairing(const Pairing& a, const Pairing& b, int max_degree) {
  return for_pairs(max_degree, [&](const Partition& x, const Partition& y) {
    if (a(x, y) == b(x, y)) return CheckResult::pass();
    return CheckResult::fail(a.name() + " and " + b.name() + " differ on (" + show(x) + "," + show(y) + "): " +
                             format(a(x, y)) + " vs " + format(b(x, y)));
  });
}

} // namespace symchar
