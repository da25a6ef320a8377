#pragma once

#include <optional>

#include "symchar/convolution.hpp"
#include "symchar/series.hpp"

namespace symchar {

/// Higher derived hash product
///   x # y = a_1(phi_1)(x_(1), y_(1)) ... a_k(phi_k)(x_(k), y_(k)) phi_{k+1}(x_(k+1) y_(k+1)).
struct HashStage {
  Pairing pairing;
  Cochain1 cocycle;
};

struct HashSpec {
  std::string name;
  std::vector<HashStage> stages;
  Cochain1 final_cocycle = identity_cochain();
};

/// "trivial", "thibon", "newell-littlewood" or "murnaghan-littlewood".
HashSpec named_hash_spec(std::string_view name);
/// Spec from (pairing name, cochain name) stages and a final cochain name.
HashSpec hash_spec_from_names(const std::vector<std::pair<std::string, std::string>>& stages,
                              std::string_view final_cocycle);

/// Built product; copies share the basis memo.
class HashProduct {
public:
  explicit HashProduct(HashSpec spec);

  const HashSpec& spec() const { return spec_; }
  const SymFunc& basis(const Partition& x, const Partition& y) const;
  SymFunc operator()(const SymFunc& f, const SymFunc& g) const;
  /// The convolution of the derived stage pairings (e2 when there are none).
  Pairing composite_pairing() const;

private:
  HashSpec spec_;
  Pairing memo_;
};

/// Validates every stage pairing as Laplace and every cocycle as an algebra
/// map up to check_degree, then builds the product.
HashProduct build_hash(const HashSpec& spec, int check_degree = 3);

/// True iff the composite pairing is Frobenius up to max_degree.
CheckResult hash_is_hopf(const HashSpec& spec, int max_degree);
/// Direct test of Delta(x # y) = (x_(1) # y_(1)) (x) (x_(2) # y_(2)).
CheckResult hash_bialgebra_law(const HashSpec& spec, int max_degree);
/// Associativity and the unit s_() on basis triples of total weight <= max_degree.
CheckResult hash_is_associative(const HashSpec& spec, int max_degree);

/// Checks that the two series are degreewise inverse up to cap.
CheckResult is_inverse_pair(SeriesId m_pi, SeriesId l_pi, int cap);

/// Delta_pi(x) = x_(1) (x) x_(2) <M_pi | x_(3)>.
TensorSymFunc deformed_coproduct(const SymFunc& f, SeriesId m_pi, SeriesId l_pi);

enum class BasisDirection { to_subgroup, to_group };
/// to_subgroup: f / M_pi; to_group: f / L_pi.
SymFunc basis_change(const SymFunc& f, BasisDirection direction, SeriesId m_pi, SeriesId l_pi);

} // namespace symchar
