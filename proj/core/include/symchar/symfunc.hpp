#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symchar/integer.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Finite integer combination of basis keys with no zero coefficients stored.
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
  using map_type = std::map<Key, Integer, Compare>;

  LinComb() = default;
  explicit LinComb(const Key& k, Integer c = 1) { add(k, std::move(c)); }

  void add(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Integer& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Integer coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
  LinComb& operator*=(const Integer& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Integer(-1); }
  friend LinComb operator*(LinComb a, const Integer& s) { return a *= s; }
  friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
  map_type terms_;
};

using SymFunc = LinComb<Partition, ReverseLex>;

using PartitionPair = std::pair<Partition, Partition>;

struct ReverseLexPair {
  bool operator()(const PartitionPair& a, const PartitionPair& b) const {
    if (a.first != b.first) return b.first < a.first;
    return b.second < a.second;
  }
};

/// Element of Sym (x) Sym.
using TensorSymFunc = LinComb<PartitionPair, ReverseLexPair>;

/// Element of the k-fold tensor power, keyed by the leg sequence.
using TensorN = LinComb<std::vector<Partition>>;

/// Schur function s_lambda.
inline SymFunc s(const Partition& p) { return SymFunc(p); }
inline SymFunc s(std::initializer_list<int> parts) { return SymFunc(Partition(parts)); }
inline SymFunc one() { return SymFunc(Partition{}); }

inline TensorSymFunc tensor(const Partition& a, const Partition& b, Integer c = 1) {
  return TensorSymFunc({a, b}, std::move(c));
}

/// Partition of n with one row, h_n.
inline Partition row(int n) { return n <= 0 ? Partition{} : Partition{n}; }
/// Partition of n with one column, e_n.
inline Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1)); }

/// Homogeneous component of degree d.
SymFunc homogeneous_part(const SymFunc& f, int d);
/// Terms with degree <= cap.
SymFunc truncate(const SymFunc& f, int cap);
/// Highest weight occurring, or -1 for zero.
int max_degree(const SymFunc& f);
int min_degree(const SymFunc& f);
bool is_homogeneous(const SymFunc& f);

TensorSymFunc swap_legs(const TensorSymFunc& t);
TensorSymFunc truncate_total(const TensorSymFunc& t, int cap);

/// Bilinear extension of a basis operation.
template <class BasisOp>
SymFunc bilinear(const SymFunc& f, const SymFunc& g, BasisOp&& op) {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(op(a, b), ca * cb);
  return out;
}

template <class BasisOp>
auto linear(const SymFunc& f, BasisOp&& op) {
  decltype(op(std::declval<const Partition&>())) out;
  for (const auto& [a, ca] : f) out.add(op(a), ca);
  return out;
}

} // namespace symchar
