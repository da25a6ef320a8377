#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symchar::cli {

enum class Command { decompose, branch, series, check, hash, vertex, fgl, table };

/// Parsed command line.  `action` is the first word after the command for
/// check/vertex/fgl/branch/series/table; `operands` are the remaining
/// positionals.
struct Query {
  Command command = Command::decompose;
  std::string action;
  std::vector<std::string> operands;
  std::string product;  // decompose
  std::string spec;     // hash
  std::optional<int> max_degree;
  std::optional<int> cap;
  bool json = false;
  std::optional<int> max_weight;
  std::string cache_dir;

  friend bool operator==(const Query&, const Query&) = default;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws UsageError naming the offending token.
Query parse(const std::vector<std::string>& args);
/// Canonical argument vector; parse(to_argv(q)) == q.
std::vector<std::string> to_argv(const Query& q);
std::string command_name(Command c);

/// Weight guard: SYMCHAR_MAX_WEIGHT if set, else 20; --max-weight wins.
int effective_max_weight(const Query& q);

int run(const Query& q, std::ostream& out, std::ostream& err);
/// parse + run with usage errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symchar::cli
