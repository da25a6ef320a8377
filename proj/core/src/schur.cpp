#include "symchar/schur.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace symchar {

namespace {

// Memo table with idempotent inserts; references stay valid until cleared
// because std::map nodes never move.
template <class Key, class Value>
class Memo {
public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

Memo<PartitionPair, SymFunc>& product_memo() {
  static Memo<PartitionPair, SymFunc> m;
  return m;
}
Memo<PartitionPair, SymFunc>& skew_memo() {
  static Memo<PartitionPair, SymFunc> m;
  return m;
}
Memo<Partition, TensorSymFunc>& coproduct_memo() {
  static Memo<Partition, TensorSymFunc> m;
  return m;
}

// Littlewood-Richardson product: add nu_1 ones, nu_2 twos, ... to mu as
// horizontal strips, keeping the reverse reading word a lattice word.
class StripFiller {
public:
  StripFiller(const Partition& mu, const Partition& nu) : nu_(nu.parts()) {
    shape_ = mu.parts();
    counts_.assign(nu_.size(), {});
  }

  SymFunc run() {
    fill_label(0);
    return std::move(result_);
  }

private:
  void fill_label(std::size_t label) {
    if (label == nu_.size()) {
      result_.add(Partition(shape_), 1);
      return;
    }
    const std::vector<int> old = shape_;
    std::vector<int> added(old.size() + 1, 0);
    distribute(label, 0, nu_[label], old, added, 0, 0);
  }

  // row: current row; remaining: boxes still to place; prefix_mine: label
  // count in rows < row; prefix_prev: count of (label-1) in rows < row.
  void distribute(std::size_t label, std::size_t row, int remaining, const std::vector<int>& old,
                  std::vector<int>& added, int prefix_mine, int prefix_prev) {
    if (remaining == 0) {
      apply(label, old, added);
      return;
    }
    if (row > old.size()) return;
    const int old_row = row < old.size() ? old[row] : 0;
    int cap = row == 0 ? remaining : std::min(remaining, old[row - 1] - old_row);
    if (label > 0) cap = std::min(cap, prefix_prev - prefix_mine);
    const int prev_here = label > 0 ? count(label - 1, row) : 0;
    for (int k = cap; k >= 0; --k) {
      added[row] = k;
      distribute(label, row + 1, remaining - k, old, added, prefix_mine + k, prefix_prev + prev_here);
    }
    added[row] = 0;
  }

  void apply(std::size_t label, const std::vector<int>& old, const std::vector<int>& added) {
    std::vector<int> next = old;
    if (added.size() > old.size() && added.back() > 0) next.push_back(0);
    for (std::size_t r = 0; r < next.size(); ++r) next[r] += added[r];
    auto& cnt = counts_[label];
    const auto saved = cnt;
    cnt.assign(next.size(), 0);
    for (std::size_t r = 0; r < next.size(); ++r) cnt[r] = added[r];
    shape_ = next;
    fill_label(label + 1);
    shape_ = old;
    cnt = saved;
  }

  int count(std::size_t label, std::size_t row) const {
    const auto& c = counts_[label];
    return row < c.size() ? c[row] : 0;
  }

  std::vector<int> nu_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> counts_;
  SymFunc result_;
};

// Skew expansion s_{lambda/mu}: backtracking over LR fillings of the skew
// diagram in reverse reading order (rows top to bottom, right to left).
class SkewFiller {
public:
  SkewFiller(const Partition& lambda, const Partition& mu) : lambda_(lambda), mu_(mu) {
    for (std::size_t r = 0; r < lambda.length(); ++r)
      for (int c = lambda[r] - 1; c >= mu[r]; --c) cells_.push_back({static_cast<int>(r), c});
    grid_.assign(lambda.length(), std::vector<int>(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0));
    content_.assign(cells_.size() + 1, 0);
  }

  SymFunc run() {
    place(0);
    return std::move(result_);
  }

private:
  void place(std::size_t idx) {
    if (idx == cells_.size()) {
      std::vector<int> parts;
      for (int x : content_)
        if (x > 0) parts.push_back(x);
      result_.add(Partition(std::move(parts)), 1);
      return;
    }
    const auto [r, c] = cells_[idx];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int hi = static_cast<int>(cells_.size());
    // weakly increasing along the row: the cell to the right was filled first
    if (c + 1 < lambda_[ur]) hi = std::min(hi, grid_[ur][uc + 1]);
    int lo = 1;
    if (r > 0 && c >= mu_[ur - 1]) lo = grid_[ur - 1][uc] + 1;
    for (int v = lo; v <= hi; ++v) {
      // lattice: after appending v, count(v) <= count(v-1)
      if (v > 1 && content_[static_cast<std::size_t>(v - 1)] + 1 > content_[static_cast<std::size_t>(v - 2)]) continue;
      ++content_[static_cast<std::size_t>(v - 1)];
      grid_[ur][uc] = v;
      place(idx + 1);
      grid_[ur][uc] = 0;
      --content_[static_cast<std::size_t>(v - 1)];
    }
  }

  struct RC {
    int r;
    int c;
  };
  const Partition& lambda_;
  const Partition& mu_;
  std::vector<RC> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> content_;
  SymFunc result_;
};

void ssyt_rec(const Partition& shape, int n, std::size_t r, int c, std::vector<std::vector<int>>& t,
              Polynomial::Monomial& m, Polynomial& out) {
  if (r == shape.length()) {
    out.add(m, 1);
    return;
  }
  if (c == shape[r]) {
    ssyt_rec(shape, n, r + 1, 0, t, m, out);
    return;
  }
  const auto uc = static_cast<std::size_t>(c);
  int lo = 1;
  if (c > 0) lo = t[r][uc - 1];
  if (r > 0) lo = std::max(lo, t[r - 1][uc] + 1);
  for (int v = lo; v <= n; ++v) {
    t[r][uc] = v;
    ++m[static_cast<std::size_t>(v - 1)];
    ssyt_rec(shape, n, r, c + 1, t, m, out);
    --m[static_cast<std::size_t>(v - 1)];
  }
}

} // namespace

const SymFunc& outer_mul_basis(const Partition& mu, const Partition& nu) {
  // commutativity: key on the ordered pair
  const bool swap = nu < mu;
  const PartitionPair key = swap ? PartitionPair{nu, mu} : PartitionPair{mu, nu};
  return product_memo().get(key, [&] {
    // fewer labels keeps the strip recursion shallow
    const Partition& a = key.first.weight() >= key.second.weight() ? key.first : key.second;
    const Partition& b = key.first.weight() >= key.second.weight() ? key.second : key.first;
    return StripFiller(a, b).run();
  });
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return outer_mul_basis(mu, nu).coeff(lambda);
}

SymFunc outer_mul(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(outer_mul_basis(a, b), ca * cb);
  return out;
}

SymFunc outer_product(std::span<const SymFunc> factors) {
  SymFunc out = one();
  for (const auto& f : factors) out = outer_mul(out, f);
  return out;
}

const SymFunc& skew_basis(const Partition& lambda, const Partition& mu) {
  return skew_memo().get({lambda, mu}, [&] {
    if (!contains(lambda, mu)) return SymFunc{};
    if (mu.empty()) return s(lambda);
    return SkewFiller(lambda, mu).run();
  });
}

SymFunc skew(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(skew_basis(a, b), ca * cb);
  return out;
}

const TensorSymFunc& coproduct_basis(const Partition& lambda) {
  return coproduct_memo().get(lambda, [&] {
    TensorSymFunc t;
    const int n = lambda.weight();
    for (int k = 0; k <= n; ++k) {
      for (const Partition& eta : partitions_of(k)) {
        if (!contains(lambda, eta)) continue;
        for (const auto& [nu, c] : skew_basis(lambda, eta)) t.add({nu, eta}, c);
      }
    }
    return t;
  });
}

TensorSymFunc coproduct(const SymFunc& f) {
  TensorSymFunc out;
  for (const auto& [p, c] : f) out.add(coproduct_basis(p), c);
  return out;
}

TensorSymFunc cut_coproduct(const SymFunc& f) {
  TensorSymFunc out;
  for (const auto& [p, c] : f) {
    if (p.empty()) continue;
    for (const auto& [k, v] : coproduct_basis(p))
      if (!k.first.empty() && !k.second.empty()) out.add(k, c * v);
  }
  return out;
}

TensorN iterated_coproduct(const SymFunc& f, int k) {
  TensorN out;
  if (k <= 0) {
    const Integer e = counit(f);
    if (e != 0) out.add(std::vector<Partition>{}, e);
    return out;
  }
  for (const auto& [p, c] : f) out.add(std::vector<Partition>{p}, c);
  for (int legs = 1; legs < k; ++legs) {
    TensorN next;
    for (const auto& [key, c] : out) {
      for (const auto& [pair, v] : coproduct_basis(key.back())) {
        std::vector<Partition> nk(key.begin(), key.end() - 1);
        nk.push_back(pair.first);
        nk.push_back(pair.second);
        next.add(nk, c * v);
      }
    }
    out = std::move(next);
  }
  return out;
}

Integer counit(const SymFunc& f) { return f.coeff(Partition{}); }

SymFunc antipode(const SymFunc& f) {
  SymFunc out;
  for (const auto& [p, c] : f) out.add(conjugate(p), p.weight() % 2 ? Integer(-c) : c);
  return out;
}

Integer scalar(const SymFunc& f, const SymFunc& g) {
  Integer r = 0;
  const SymFunc& small = f.size() <= g.size() ? f : g;
  const SymFunc& large = f.size() <= g.size() ? g : f;
  for (const auto& [p, c] : small) r += c * large.coeff(p);
  return r;
}

Integer scalar(const TensorSymFunc& f, const TensorSymFunc& g) {
  Integer r = 0;
  for (const auto& [k, c] : f) r += c * g.coeff(k);
  return r;
}

SymFunc loop(int r, const SymFunc& f) {
  if (r < 1) throw std::invalid_argument("loop operator needs r >= 1");
  if (r == 1) return f;
  SymFunc out;
  for (const auto& [k, c] : coproduct(f)) out.add(outer_mul(s(k.first), loop(r - 1, s(k.second))), c);
  return out;
}

TensorSymFunc tensor_mul(const TensorSymFunc& a, const TensorSymFunc& b) {
  TensorSymFunc out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const SymFunc& left = outer_mul_basis(ka.first, kb.first);
      const SymFunc& right = outer_mul_basis(ka.second, kb.second);
      const Integer c = ca * cb;
      for (const auto& [pl, cl] : left)
        for (const auto& [pr, cr] : right) out.add({pl, pr}, c * cl * cr);
    }
  }
  return out;
}

SymFunc multiply_legs(const TensorSymFunc& t) {
  SymFunc out;
  for (const auto& [k, c] : t) out.add(outer_mul_basis(k.first, k.second), c);
  return out;
}

TensorSymFunc tensor_product(const SymFunc& f, const SymFunc& g) {
  TensorSymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add({a, b}, ca * cb);
  return out;
}

Polynomial eval_monomials(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("number of variables must be non-negative");
  Polynomial out(n);
  if (static_cast<int>(lambda.length()) > n) return out;
  std::vector<std::vector<int>> t(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  Polynomial::Monomial m(static_cast<std::size_t>(n), 0);
  ssyt_rec(lambda, n, 0, 0, t, m, out);
  return out;
}

Polynomial eval_monomials(const SymFunc& f, int n) {
  Polynomial out(n);
  for (const auto& [p, c] : f) out += eval_monomials(p, n) * c;
  return out;
}

Integer dimension_gl(const Partition& lambda, int d) {
  if (d < 0) throw std::invalid_argument("dimension needs d >= 0");
  if (static_cast<int>(lambda.length()) > d) return 0;
  Integer num = 1;
  Integer den = 1;
  for (const Cell& cell : hooks_and_contents(lambda)) {
    num *= d + cell.content;
    den *= cell.hook;
  }
  return num / den;
}

void clear_schur_caches() {
  product_memo().clear();
  skew_memo().clear();
  coproduct_memo().clear();
}

} // namespace symchar
