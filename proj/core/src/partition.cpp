#include "symchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symchar {

namespace {

std::vector<int> normalized_parts(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  // interior zeros are impossible once decreasing and trailing zeros are gone
  return parts;
}

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(normalized_parts(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(normalized_parts(std::move(parts))) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::pair<Integer, Integer> z_and_n(const Partition& p) {
  Integer z = 1;
  Integer n = 0;
  std::size_t i = 0;
  while (i < p.length()) {
    std::size_t j = i;
    while (j < p.length() && p[j] == p[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int k = 1; k <= mult; ++k) z *= Integer(p[i]) * k;
    i = j;
  }
  for (std::size_t k = 0; k < p.length(); ++k) n += Integer(k) * p[k];
  return {z, n};
}

int frobenius_rank(const Partition& p) {
  int r = 0;
  while (static_cast<std::size_t>(r) < p.length() && p[static_cast<std::size_t>(r)] >= r + 1) ++r;
  return r;
}

FrobeniusForm frobenius(const Partition& p) {
  const Partition c = conjugate(p);
  const int r = frobenius_rank(p);
  FrobeniusForm f;
  for (int k = 0; k < r; ++k) {
    f.arms.push_back(p[static_cast<std::size_t>(k)] - k - 1);
    f.legs.push_back(c[static_cast<std::size_t>(k)] - k - 1);
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  if (f.arms.size() != f.legs.size())
    throw std::invalid_argument("Frobenius arms and legs differ in length");
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing(f.arms) || !strictly_decreasing(f.legs))
    throw std::invalid_argument("Frobenius arms and legs must be strictly decreasing and non-negative");
  const std::size_t r = f.arms.size();
  if (r == 0) return {};
  // rows 1..r from arms, rows below the diagonal from the legs
  std::vector<int> rows(r + static_cast<std::size_t>(f.legs[0]), 0);
  for (std::size_t k = 0; k < r; ++k) rows[k] = f.arms[k] + static_cast<int>(k) + 1;
  for (std::size_t k = 0; k < r; ++k) {
    // column k+1 has length legs[k] + k + 1
    const std::size_t col_len = static_cast<std::size_t>(f.legs[k]) + k + 1;
    for (std::size_t i = r; i < col_len; ++i) rows[i] = std::max(rows[i], static_cast<int>(k) + 1);
  }
  return Partition(rows);
}

bool in_class(const Partition& p, PartitionClass c) {
  switch (c) {
    case PartitionClass::P:
      return true;
    case PartitionClass::D:
      return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    case PartitionClass::B:
      return in_class(conjugate(p), PartitionClass::D);
    case PartitionClass::A:
    case PartitionClass::C:
    case PartitionClass::E: {
      const int diff = c == PartitionClass::A ? -1 : (c == PartitionClass::C ? 1 : 0);
      const FrobeniusForm f = frobenius(p);
      for (std::size_t k = 0; k < f.arms.size(); ++k)
        if (f.arms[k] - f.legs[k] != diff) return false;
      return true;
    }
  }
  return false;
}

Standardized standardize(const Composition& comp) {
  std::vector<int> t = comp.parts;
  int sign = 1;
  // Bubble the raising operator until sorted.  Each swap permutes the shifted
  // values t_i - i, so the loop terminates after at most len^2 swaps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] >= t[i + 1]) continue;
      if (t[i + 1] == t[i] + 1) return {0, {}};
      const int a = t[i];
      t[i] = t[i + 1] - 1;
      t[i + 1] = a + 1;
      sign = -sign;
      changed = true;
    }
  }
  while (!t.empty() && t.back() == 0) t.pop_back();
  if (!t.empty() && t.back() < 0) return {0, {}};
  return {sign, Partition(std::move(t))};
}

std::vector<Cell> hooks_and_contents(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int row = static_cast<int>(i) + 1;
      const int col = j + 1;
      cells.push_back({row, col, col - row, p[i] + c[static_cast<std::size_t>(j)] - row - col + 1});
    }
  }
  return cells;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_in_box(int n, int max_len, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, max_part, max_len, cur, out);
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition add_parts(const Partition& a, const Partition& b) {
  std::vector<int> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

} // namespace symchar
