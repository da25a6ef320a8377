#include "symchar/hash.hpp"

#include "symchar/schur.hpp"
#include "symchar/text_format.hpp"

namespace symchar {

namespace {

Pairing derived_stage(const HashStage& st) {
  // cocycles were validated when the product was built
  const Pairing a = st.pairing;
  const Cochain1 phi = st.cocycle;
  return Pairing(
      "derived:" + phi.name() + ":" + a.name(),
      [a, phi](const Partition& x, const Partition& y) { return phi.apply(a(x, y)); },
      a.unital() && phi.normalized(), a.normalized() && phi.normalized());
}

SymFunc evaluate(const std::vector<Pairing>& stages, const Cochain1& final_cocycle, const Partition& x,
                 const Partition& y) {
  const int legs = static_cast<int>(stages.size()) + 1;
  const TensorN dx = iterated_coproduct(s(x), legs);
  const TensorN dy = iterated_coproduct(s(y), legs);
  SymFunc out;
  for (const auto& [lx, cx] : dx) {
    for (const auto& [ly, cy] : dy) {
      SymFunc acc = one();
      bool zero = false;
      for (std::size_t i = 0; i < stages.size() && !zero; ++i) {
        const SymFunc& v = stages[i](lx[i], ly[i]);
        if (v.is_zero()) zero = true;
        else acc = outer_mul(acc, v);
      }
      if (zero) continue;
      const SymFunc last = final_cocycle.apply(outer_mul_basis(lx.back(), ly.back()));
      out.add(outer_mul(acc, last), cx * cy);
    }
  }
  return out;
}

std::string show(const Partition& p) { return format_label(p, LabelKind::gl); }

} // namespace

HashSpec named_hash_spec(std::string_view name) {
  HashSpec spec;
  spec.name = std::string(name);
  if (name == "trivial") return spec;
  if (name == "thibon") {
    spec.stages.push_back({inner_pairing(), identity_cochain()});
    return spec;
  }
  if (name == "newell-littlewood") {
    spec.stages.push_back({inner_pairing(), eps1_cochain()});
    return spec;
  }
  if (name == "murnaghan-littlewood") {
    spec.stages.push_back({inner_pairing(), eps1_cochain()});
    spec.stages.push_back({inner_pairing(), identity_cochain()});
    return spec;
  }
  throw std::invalid_argument("unknown hash spec '" + std::string(name) + "'");
}

HashSpec hash_spec_from_names(const std::vector<std::pair<std::string, std::string>>& stages,
                              std::string_view final_cocycle) {
  HashSpec spec;
  spec.name = "custom";
  for (const auto& [pairing, cocycle] : stages) spec.stages.push_back({named_pairing(pairing), named_cochain(cocycle)});
  spec.final_cocycle = named_cochain(final_cocycle);
  return spec;
}

HashProduct::HashProduct(HashSpec spec)
    : spec_(std::move(spec)), memo_("#", [](const Partition&, const Partition&) { return SymFunc{}; }, true, false) {
  std::vector<Pairing> stages;
  for (const HashStage& st : spec_.stages) stages.push_back(derived_stage(st));
  const Cochain1 last = spec_.final_cocycle;
  memo_ = Pairing(
      "#" + spec_.name,
      [stages, last](const Partition& x, const Partition& y) { return evaluate(stages, last, x, y); }, true, false);
}

const SymFunc& HashProduct::basis(const Partition& x, const Partition& y) const { return memo_(x, y); }

SymFunc HashProduct::operator()(const SymFunc& f, const SymFunc& g) const { return memo_.apply(f, g); }

Pairing HashProduct::composite_pairing() const {
  if (spec_.stages.empty()) return unit_pairing();
  Pairing acc = derived_stage(spec_.stages.front());
  for (std::size_t i = 1; i < spec_.stages.size(); ++i) acc = convolve2(acc, derived_stage(spec_.stages[i]));
  return acc;
}

HashProduct build_hash(const HashSpec& spec, int check_degree) {
  for (const HashStage& st : spec.stages) {
    if (CheckResult r = is_laplace(st.pairing, check_degree); !r)
      throw std::invalid_argument("hash stage pairing '" + st.pairing.name() + "' is not Laplace: " + r.witness);
    if (CheckResult r = is_algebra_hom(st.cocycle, check_degree); !r)
      throw std::invalid_argument("hash stage cocycle '" + st.cocycle.name() + "' is not an algebra map: " + r.witness);
  }
  if (CheckResult r = is_algebra_hom(spec.final_cocycle, check_degree); !r)
    throw std::invalid_argument("final cocycle '" + spec.final_cocycle.name() + "' is not an algebra map: " + r.witness);
  return HashProduct(spec);
}

CheckResult hash_is_hopf(const HashSpec& spec, int max_degree) {
  return is_frobenius(HashProduct(spec).composite_pairing(), max_degree);
}

CheckResult hash_bialgebra_law(const HashSpec& spec, int max_degree) {
  const HashProduct hash(spec);
  for (const Partition& x : partitions_up_to(max_degree)) {
    for (const Partition& y : partitions_up_to(max_degree - x.weight())) {
      const TensorSymFunc lhs = coproduct(hash.basis(x, y));
      TensorSymFunc rhs;
      for (const auto& [kx, cx] : coproduct_basis(x)) {
        for (const auto& [ky, cy] : coproduct_basis(y)) {
          const SymFunc& left = hash.basis(kx.first, ky.first);
          const SymFunc& right = hash.basis(kx.second, ky.second);
          rhs.add(tensor_product(left, right), cx * cy);
        }
      }
      if (lhs != rhs)
        return CheckResult::fail("bialgebra law fails on x=" + show(x) + " y=" + show(y) + ": " + format(lhs) +
                                 " != " + format(rhs));
    }
  }
  return CheckResult::pass();
}

CheckResult hash_is_associative(const HashSpec& spec, int max_degree) {
  const HashProduct hash(spec);
  const std::vector<Partition> basis = partitions_up_to(max_degree);
  for (const Partition& x : basis) {
    if (hash.basis(Partition{}, x) != s(x) || hash.basis(x, Partition{}) != s(x))
      return CheckResult::fail("s[0] is not a unit for " + show(x));
    for (const Partition& y : basis) {
      for (const Partition& z : basis) {
        if (x.weight() + y.weight() + z.weight() > max_degree) continue;
        const SymFunc lhs = hash(hash.basis(x, y), s(z));
        const SymFunc rhs = hash(s(x), hash.basis(y, z));
        if (lhs != rhs)
          return CheckResult::fail("associativity fails on x=" + show(x) + " y=" + show(y) + " z=" + show(z));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_inverse_pair(SeriesId m_pi, SeriesId l_pi, int cap) {
  const TruncatedSeries prod = series_product(series_terms(m_pi, cap), series_terms(l_pi, cap));
  for (const auto& [d, f] : prod.coeffs) {
    const SymFunc expected = d == 0 ? one() : SymFunc{};
    if (f != expected)
      return CheckResult::fail("degree " + std::to_string(d) + " of " + std::string(to_string(m_pi)) +
                               std::string(to_string(l_pi)) + " is " + format(f));
  }
  return CheckResult::pass();
}

TensorSymFunc deformed_coproduct(const SymFunc& f, SeriesId m_pi, SeriesId l_pi) {
  if (CheckResult r = is_inverse_pair(m_pi, l_pi, std::max(max_degree(f), 0)); !r)
    throw std::invalid_argument("not an inverse series pair: " + r.witness);
  TensorSymFunc out;
  for (const auto& [p, c] : f) {
    for (const auto& [legs, v] : iterated_coproduct(s(p), 3)) {
      const Integer weight = scalar(series_term(m_pi, legs[2].weight()), s(legs[2]));
      if (weight != 0) out.add({legs[0], legs[1]}, c * v * weight);
    }
  }
  return out;
}

SymFunc basis_change(const SymFunc& f, BasisDirection direction, SeriesId m_pi, SeriesId l_pi) {
  if (CheckResult r = is_inverse_pair(m_pi, l_pi, std::max(max_degree(f), 0)); !r)
    throw std::invalid_argument("not an inverse series pair: " + r.witness);
  return skew_by_series(f, direction == BasisDirection::to_subgroup ? m_pi : l_pi);
}

} // namespace symchar
