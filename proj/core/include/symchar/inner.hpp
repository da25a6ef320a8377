#pragma once

#include <filesystem>
#include <optional>

#include "symchar/symfunc.hpp"

namespace symchar {

// Inner (Kronecker) structure of Sym and symmetric group characters.

/// Character table of S_n; rows and columns both indexed by partitions of n in
/// reverse lexicographic order.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  const Integer& value(const Partition& lambda, const Partition& rho) const;
  const std::vector<std::vector<Integer>>& matrix() const { return values_; }
  std::size_t index(const Partition& p) const;

  void write(const std::filesystem::path& file) const;
  /// Returns nullopt when the file is missing, has a foreign header, or a
  /// malformed body.
  static std::optional<CharacterTable> read(const std::filesystem::path& file);

private:
  CharacterTable() = default;

  int n_ = 0;
  std::vector<Partition> labels_;
  std::vector<std::vector<Integer>> values_;
};

/// Cached table for S_n.  With a cache directory set, tables are loaded from
/// and stored to `chartable-<n>.txt` there.
const CharacterTable& character_table(int n);
void set_character_table_cache_dir(std::optional<std::filesystem::path> dir);

/// Murnaghan-Nakayama by rim hook removal on the beta-set of lambda.
Integer character(const Partition& lambda, const Partition& rho);

/// s_mu * s_nu; zero unless |mu| = |nu|.
const SymFunc& inner_mul_basis(const Partition& mu, const Partition& nu);
SymFunc inner_mul(const SymFunc& f, const SymFunc& g);
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// delta(s_lambda) = sum g^lambda_{mu,nu} s_mu (x) s_nu.
TensorSymFunc inner_coproduct(const SymFunc& f);

/// Coefficient sum over the one row partitions, () included.
Integer counit_eps1(const SymFunc& f);

} // namespace symchar
