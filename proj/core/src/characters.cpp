#include "symchar/characters.hpp"

#include "symchar/hash.hpp"
#include "symchar/inner.hpp"
#include "symchar/schur.hpp"
#include "symchar/series.hpp"

namespace symchar {

namespace {

const HashProduct& named_product(std::string_view name) {
  static const HashProduct thibon = build_hash(named_hash_spec("thibon"));
  static const HashProduct nl = build_hash(named_hash_spec("newell-littlewood"));
  static const HashProduct ml = build_hash(named_hash_spec("murnaghan-littlewood"));
  if (name == "thibon") return thibon;
  if (name == "newell-littlewood") return nl;
  return ml;
}

// Partitions contained in both a and b.
std::vector<Partition> common_subpartitions(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  const int top = std::min(a.weight(), b.weight());
  for (const Partition& z : partitions_up_to(top))
    if (contains(a, z) && contains(b, z)) out.push_back(z);
  return out;
}

} // namespace

BranchRule parse_branch_rule(std::string_view name) {
  std::string n(name);
  for (char& c : n)
    if (c == '-') c = '_';
  if (n == "gl_to_o") return BranchRule::gl_to_o;
  if (n == "o_to_gl") return BranchRule::o_to_gl;
  if (n == "gl_to_sp") return BranchRule::gl_to_sp;
  if (n == "sp_to_gl") return BranchRule::sp_to_gl;
  if (n == "gl_to_glm1") return BranchRule::gl_to_glm1;
  if (n == "glm1_to_gl") return BranchRule::glm1_to_gl;
  throw std::invalid_argument("unknown branching rule '" + std::string(name) + "'");
}

std::string_view to_string(BranchRule r) {
  switch (r) {
  case BranchRule::gl_to_o: return "gl-to-o";
  case BranchRule::o_to_gl: return "o-to-gl";
  case BranchRule::gl_to_sp: return "gl-to-sp";
  case BranchRule::sp_to_gl: return "sp-to-gl";
  case BranchRule::gl_to_glm1: return "gl-to-glm1";
  case BranchRule::glm1_to_gl: return "glm1-to-gl";
  }
  return "?";
}

SymFunc branch(const SymFunc& f, BranchRule rule) {
  switch (rule) {
  case BranchRule::gl_to_o: return skew_by_series(f, SeriesId::D);
  case BranchRule::o_to_gl: return skew_by_series(f, SeriesId::C);
  case BranchRule::gl_to_sp: return skew_by_series(f, SeriesId::B);
  case BranchRule::sp_to_gl: return skew_by_series(f, SeriesId::A);
  case BranchRule::gl_to_glm1: return skew_by_series(f, SeriesId::M);
  case BranchRule::glm1_to_gl: return skew_by_series(f, SeriesId::L);
  }
  return f;
}

SymFunc newell_littlewood(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [mu, cm] : f) {
    for (const auto& [nu, cn] : g) {
      for (const Partition& z : common_subpartitions(mu, nu))
        out.add(outer_mul(skew_basis(mu, z), skew_basis(nu, z)), cm * cn);
    }
  }
  return out;
}

SymFunc newell_littlewood_hash(const SymFunc& f, const SymFunc& g) { return named_product("newell-littlewood")(f, g); }

RationalChar rational_mul(const RationalChar& x, const RationalChar& y) {
  RationalChar out;
  for (const auto& [kx, cx] : x) {
    const Partition& kappa = kx.first;
    const Partition& lambda = kx.second;
    for (const auto& [ky, cy] : y) {
      const Partition& mu = ky.first;
      const Partition& nu = ky.second;
      for (const Partition& sigma : common_subpartitions(kappa, nu)) {
        for (const Partition& tau : common_subpartitions(mu, lambda)) {
          const SymFunc cov = outer_mul(skew_basis(kappa, sigma), skew_basis(mu, tau));
          const SymFunc contra = outer_mul(skew_basis(lambda, tau), skew_basis(nu, sigma));
          out.add(tensor_product(cov, contra), cx * cy);
        }
      }
    }
  }
  return out;
}

RationalChar rational_mul_hash(const RationalChar& x, const RationalChar& y) {
  // Delta on Sym (x) Sym is Delta (x) Delta followed by the middle swap, so
  // x_(1) = k1 (x) l1 and x_(2) = k2 (x) l2 with k1, k2 the legs of Delta(k).
  RationalChar out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const TensorSymFunc& dk = coproduct_basis(kx.first);
      const TensorSymFunc& dl = coproduct_basis(kx.second);
      const TensorSymFunc& dm = coproduct_basis(ky.first);
      const TensorSymFunc& dn = coproduct_basis(ky.second);
      for (const auto& [k, ck] : dk) {
        for (const auto& [n, cn] : dn) {
          if (k.first != n.first) continue;  // <k1|n1>
          for (const auto& [l, cl] : dl) {
            for (const auto& [m, cm] : dm) {
              if (l.first != m.first) continue;  // <l1|m1>
              const SymFunc& cov = outer_mul_basis(k.second, m.second);
              const SymFunc& contra = outer_mul_basis(l.second, n.second);
              out.add(tensor_product(cov, contra), cx * cy * ck * cn * cl * cm);
            }
          }
        }
      }
    }
  }
  return out;
}

RationalChar rational_convert(const RationalChar& x, RationalDirection direction) {
  RationalChar out;
  for (const auto& [k, c] : x) {
    const Partition& lambda = k.first;
    const Partition& mu = k.second;
    const int top = std::min(lambda.weight(), mu.weight());
    for (const Partition& z : partitions_up_to(top)) {
      if (!contains(lambda, z)) continue;
      if (direction == RationalDirection::to_irreducible) {
        out.add(tensor_product(skew_basis(lambda, z), skew(s(mu), s(z))), c);
      } else {
        const Integer sign = z.weight() % 2 ? -1 : 1;
        out.add(tensor_product(skew_basis(lambda, z), skew(s(mu), s(conjugate(z)))), c * sign);
      }
    }
  }
  return out;
}

SymFunc thibon_to_schur(const SymFunc& thibon, int cap) { return mul_by_series(thibon, SeriesId::M, cap); }

SymFunc schur_to_thibon(const SymFunc& f, int cap) { return mul_by_series(f, SeriesId::L, cap); }

SymFunc thibon_inner(const SymFunc& x, const SymFunc& y) { return named_product("thibon")(x, y); }

SymFunc thibon_inner_direct(const SymFunc& x, const SymFunc& y) {
  SymFunc out;
  for (const auto& [mu, cm] : x) {
    for (const auto& [nu, cn] : y) {
      const int top = std::min(mu.weight(), nu.weight());
      for (int d = 0; d <= top; ++d) {
        for (const Partition& sigma : partitions_of(d)) {
          if (!contains(mu, sigma)) continue;
          for (const Partition& tau : partitions_of(d)) {
            if (!contains(nu, tau)) continue;
            const SymFunc prod = outer_mul(skew_basis(mu, sigma), skew_basis(nu, tau));
            out.add(outer_mul(inner_mul_basis(sigma, tau), prod), cm * cn);
          }
        }
      }
    }
  }
  return out;
}

SymFunc murnaghan_littlewood(const SymFunc& x, const SymFunc& y) { return named_product("murnaghan-littlewood")(x, y); }

SymFunc murnaghan_littlewood_recursive(const SymFunc& x, const SymFunc& y) {
  SymFunc out;
  for (const auto& [mu, cm] : x) {
    for (const auto& [nu, cn] : y) {
      for (const Partition& zeta : common_subpartitions(mu, nu)) {
        const SymFunc mu_z = skew_basis(mu, zeta);
        const SymFunc nu_z = skew_basis(nu, zeta);
        const int top = std::min(max_degree(mu_z), max_degree(nu_z));
        for (int d = 0; d <= top; ++d) {
          for (const Partition& alpha : partitions_of(d)) {
            const SymFunc left = skew(mu_z, s(alpha));
            if (left.is_zero()) continue;
            for (const Partition& beta : partitions_of(d)) {
              const SymFunc right = skew(nu_z, s(beta));
              if (right.is_zero()) continue;
              out.add(outer_mul(outer_mul(left, right), inner_mul_basis(alpha, beta)), cm * cn);
            }
          }
        }
      }
    }
  }
  return out;
}

SymFunc unreduce(const SymFunc& reduced, int n) {
  SymFunc out;
  for (const auto& [mu, c] : reduced) {
    Composition comp;
    comp.parts.push_back(n - mu.weight());
    comp.parts.insert(comp.parts.end(), mu.begin(), mu.end());
    const Standardized st = standardize(comp);
    if (st.sign != 0) out.add(st.partition, c * st.sign);
  }
  return out;
}

SymFunc reduced_oracle(const SymFunc& x, const SymFunc& y, int n) {
  if (n <= 0) n = 2 * (std::max(max_degree(x), 0) + std::max(max_degree(y), 0)) + 2;
  const SymFunc product = inner_mul(unreduce(x, n), unreduce(y, n));
  SymFunc out;
  for (const auto& [lambda, c] : product) {
    std::vector<int> rest(lambda.begin() + (lambda.empty() ? 0 : 1), lambda.end());
    out.add(Partition(std::move(rest)), c);
  }
  return out;
}

SymFunc cummins_expand(const SymFunc& a, const SymFunc& b, const SymFunc& c, const SymFunc& d) {
  const TensorSymFunc da = coproduct(a);
  const TensorSymFunc db = coproduct(b);
  const TensorSymFunc dc = coproduct(c);
  const TensorSymFunc dd = coproduct(d);
  SymFunc out;
  for (const auto& [ka, ca] : da) {
    for (const auto& [kc, cc] : dc) {
      const SymFunc& ac = inner_mul_basis(ka.first, kc.first);
      if (ac.is_zero()) continue;
      for (const auto& [kd, cd] : dd) {
        const SymFunc& ad = inner_mul_basis(ka.second, kd.first);
        if (ad.is_zero()) continue;
        for (const auto& [kb, cb] : db) {
          const SymFunc& bc = inner_mul_basis(kb.first, kc.second);
          if (bc.is_zero()) continue;
          const SymFunc& bd = inner_mul_basis(kb.second, kd.second);
          if (bd.is_zero()) continue;
          out.add(outer_mul(outer_mul(ac, ad), outer_mul(bc, bd)), ca * cb * cc * cd);
        }
      }
    }
  }
  return out;
}

} // namespace symchar
