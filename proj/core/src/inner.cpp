#include "symchar/inner.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <thread>

namespace symchar {

namespace {

using CharMemo = std::map<PartitionPair, Integer>;

Integer mn_rec(const Partition& lambda, const Partition& rho, CharMemo& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  auto it = memo.find({lambda, rho});
  if (it != memo.end()) return it->second;

  const int k = rho[0];
  const Partition rest(std::vector<int>(rho.begin() + 1, rho.end()));
  const std::size_t len = lambda.length();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);

  Integer total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int b : beta) {
      if (b == target) occupied = true;
      if (b > target && b < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(len);
    for (std::size_t j = 0; j < len; ++j) parts[j] = moved[j] - static_cast<int>(len - 1 - j);
    const Integer v = mn_rec(Partition(std::move(parts)), rest, memo);
    if (between % 2) total -= v;
    else total += v;
  }
  memo.emplace(PartitionPair{lambda, rho}, total);
  return total;
}

constexpr const char* kHeader = "symchar-chartable v1";

struct TableCache {
  std::shared_mutex mutex;
  std::map<int, std::unique_ptr<CharacterTable>> tables;
  std::optional<std::filesystem::path> dir;
};

// Writes through a temporary name so concurrent writers never expose a partial
// file.
void persist(const CharacterTable& t, const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp" << std::this_thread::get_id();
  const std::filesystem::path tmp = file.string() + suffix.str();
  t.write(tmp);
  std::filesystem::rename(tmp, file);
}

TableCache& table_cache() {
  static TableCache c;
  return c;
}

std::map<PartitionPair, SymFunc>& inner_memo() {
  static std::map<PartitionPair, SymFunc> m;
  return m;
}
std::shared_mutex& inner_mutex() {
  static std::shared_mutex m;
  return m;
}

} // namespace

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
  if (n < 0) throw std::invalid_argument("character table needs n >= 0");
  CharMemo memo;
  values_.assign(labels_.size(), std::vector<Integer>(labels_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < labels_.size(); ++j) values_[i][j] = mn_rec(labels_[i], labels_[j], memo);
}

std::size_t CharacterTable::index(const Partition& p) const {
  // labels are sorted in reverse lexicographic order
  auto it = std::lower_bound(labels_.begin(), labels_.end(), p, ReverseLex{});
  if (it == labels_.end() || *it != p) throw std::invalid_argument("partition " + to_string(p) + " is not a label of S_" + std::to_string(n_));
  return static_cast<std::size_t>(it - labels_.begin());
}

const Integer& CharacterTable::value(const Partition& lambda, const Partition& rho) const {
  return values_[index(lambda)][index(rho)];
}

void CharacterTable::write(const std::filesystem::path& file) const {
  std::ofstream os(file);
  if (!os) throw std::runtime_error("cannot write " + file.string());
  os << kHeader << " n=" << n_ << '\n';
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    os << to_string(labels_[i]) << ':';
    for (const auto& v : values_[i]) os << ' ' << v;
    os << '\n';
  }
}

std::optional<CharacterTable> CharacterTable::read(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) return std::nullopt;
  std::string line;
  if (!std::getline(is, line)) return std::nullopt;
  const std::string prefix = std::string(kHeader) + " n=";
  if (line.rfind(prefix, 0) != 0) return std::nullopt;
  CharacterTable t;
  try {
    t.n_ = std::stoi(line.substr(prefix.size()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (t.n_ < 0) return std::nullopt;
  t.labels_ = partitions_of(t.n_);
  for (const Partition& label : t.labels_) {
    if (!std::getline(is, line)) return std::nullopt;
    const auto colon = line.find(':');
    if (colon == std::string::npos || line.substr(0, colon) != to_string(label)) return std::nullopt;
    std::istringstream row(line.substr(colon + 1));
    std::vector<Integer> values;
    std::string tok;
    while (row >> tok) {
      try {
        values.emplace_back(tok);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (values.size() != t.labels_.size()) return std::nullopt;
    t.values_.push_back(std::move(values));
  }
  return t;
}

void set_character_table_cache_dir(std::optional<std::filesystem::path> dir) {
  auto& c = table_cache();
  std::unique_lock lock(c.mutex);
  c.dir = std::move(dir);
}

const CharacterTable& character_table(int n) {
  auto& c = table_cache();
  std::optional<std::filesystem::path> file;
  const CharacterTable* known = nullptr;
  {
    std::shared_lock lock(c.mutex);
    if (c.dir) file = *c.dir / ("chartable-" + std::to_string(n) + ".txt");
    auto it = c.tables.find(n);
    if (it != c.tables.end()) known = it->second.get();
  }
  if (known) {
    // a table computed before the directory was set still gets persisted
    if (file && !std::filesystem::exists(*file)) persist(*known, *file);
    return *known;
  }
  std::unique_ptr<CharacterTable> table;
  if (file) {
    if (auto loaded = CharacterTable::read(*file); loaded && loaded->n() == n)
      table = std::make_unique<CharacterTable>(std::move(*loaded));
  }
  const bool computed = !table;
  if (computed) table = std::make_unique<CharacterTable>(n);
  if (file && computed) persist(*table, *file);
  std::unique_lock lock(c.mutex);
  return *c.tables.try_emplace(n, std::move(table)).first->second;
}

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight()) throw std::invalid_argument("character needs |lambda| = |rho|");
  return character_table(lambda.weight()).value(lambda, rho);
}

const SymFunc& inner_mul_basis(const Partition& mu, const Partition& nu) {
  const PartitionPair key = nu < mu ? PartitionPair{nu, mu} : PartitionPair{mu, nu};
  {
    std::shared_lock lock(inner_mutex());
    auto it = inner_memo().find(key);
    if (it != inner_memo().end()) return it->second;
  }
  SymFunc out;
  if (mu.weight() == nu.weight()) {
    const CharacterTable& t = character_table(mu.weight());
    const auto& labels = t.labels();
    const auto& m = t.matrix();
    const std::size_t im = t.index(mu);
    const std::size_t in = t.index(nu);
    std::vector<Integer> z(labels.size());
    // n!/z_rho is the class size, so dividing by n! at the end stays integral
    Integer nfact = 1;
    for (int k = 2; k <= mu.weight(); ++k) nfact *= k;
    for (std::size_t r = 0; r < labels.size(); ++r) z[r] = nfact / z_and_n(labels[r]).first;
    for (std::size_t l = 0; l < labels.size(); ++l) {
      Integer num = 0;
      for (std::size_t r = 0; r < labels.size(); ++r) num += m[l][r] * m[im][r] * m[in][r] * z[r];
      out.add(labels[l], num / nfact);
    }
  }
  std::unique_lock lock(inner_mutex());
  return inner_memo().try_emplace(key, std::move(out)).first->second;
}

SymFunc inner_mul(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(inner_mul_basis(a, b), ca * cb);
  return out;
}

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return inner_mul_basis(mu, nu).coeff(lambda);
}

TensorSymFunc inner_coproduct(const SymFunc& f) {
  TensorSymFunc out;
  for (const auto& [lambda, c] : f) {
    // g^lambda_{mu,nu} is symmetric, so s_lambda * s_mu lists the nu's
    for (const Partition& mu : partitions_of(lambda.weight()))
      for (const auto& [nu, g] : inner_mul_basis(lambda, mu)) out.add({mu, nu}, c * g);
  }
  return out;
}

Integer counit_eps1(const SymFunc& f) {
  Integer r = 0;
  for (const auto& [p, c] : f)
    if (p.length() <= 1) r += c;
  return r;
}

} // namespace symchar
