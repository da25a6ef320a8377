#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symchar/integer.hpp"

namespace symchar {

/// Largest weight accepted by the parsers and enumerators.
inline constexpr int kMaxPartitionWeight = 64;

/// Integer partition stored without trailing zeros; the empty sequence is the
/// zero partition.  Construction from an unsorted or negative sequence throws.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
};

/// Order used for every stored linear combination: reverse lexicographic, so
/// that (2) precedes (1,1) precedes ().
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;
  friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

/// Sequence of integers, not necessarily sorted nor positive.
struct Composition {
  std::vector<int> parts;
  int weight() const;
};

enum class PartitionClass { P, A, B, C, D, E };

struct Cell {
  int row;     // 1-based
  int col;     // 1-based
  int content;
  int hook;
};

struct Standardized {
  int sign = 0;  // -1, 0 or +1
  Partition partition;
};

Partition conjugate(const Partition& p);

/// Returns (z_lambda, n(lambda)).
std::pair<Integer, Integer> z_and_n(const Partition& p);

FrobeniusForm frobenius(const Partition& p);
/// Throws std::invalid_argument unless arms and legs are strictly decreasing,
/// non-negative and of equal length.
Partition from_frobenius(const FrobeniusForm& f);
int frobenius_rank(const Partition& p);

bool in_class(const Partition& p, PartitionClass c);

/// Sorts a composition with the raising operators
///   R_{i,i+1}[..., a, b, ...] = -[..., b - 1, a + 1, ...]
/// Sign 0 means the composition is annihilated.
Standardized standardize(const Composition& c);

std::vector<Cell> hooks_and_contents(const Partition& p);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions with weight <= n, by weight then reverse lexicographic.
std::vector<Partition> partitions_up_to(int n);
/// Partitions of n with at most max_len parts and parts at most max_part.
std::vector<Partition> partitions_in_box(int n, int max_len, int max_part);

bool contains(const Partition& outer, const Partition& inner);

Partition add_parts(const Partition& a, const Partition& b);

std::string to_string(const Partition& p);

} // namespace symchar

template <>
struct std::hash<symchar::Partition> {
  std::size_t operator()(const symchar::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
