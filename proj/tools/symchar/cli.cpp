#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "symchar/characters.hpp"
#include "symchar/convolution.hpp"
#include "symchar/fgl.hpp"
#include "symchar/hash.hpp"
#include "symchar/inner.hpp"
#include "symchar/schur.hpp"
#include "symchar/series.hpp"
#include "symchar/text_format.hpp"
#include "symchar/vertex.hpp"

namespace symchar::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultMaxWeight = 20;
constexpr int kDefaultCheckDegree = 4;
constexpr int kDefaultCap = 6;

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kProducts = {"outer",  "kronecker", "newell-littlewood-o", "newell-littlewood-sp",
                                            "thibon", "reduced",   "rational"};
const std::vector<std::string> kChecks = {"laplace", "cocycle2", "frobenius", "alghom"};

bool one_of(const std::string& s, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), s) != options.end();
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "|") + s;
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer for " + what + ", got '" + s + "'");
}

Partition partition_arg(const std::string& s) {
  try {
    return parse_partition(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

PartitionPair rational_arg(const std::string& s) {
  try {
    return parse_rational_label(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void expect_operands(const Query& q, std::size_t n, const std::string& usage) {
  if (q.operands.size() < n) throw UsageError(command_name(q.command) + ": missing operand; usage: " + usage);
  if (q.operands.size() > n)
    throw UsageError(command_name(q.command) + ": unexpected operand '" + q.operands[n] + "'; usage: " + usage);
}

// Structural validation shared by parse and run.
void validate(const Query& q) {
  switch (q.command) {
  case Command::decompose:
    if (!one_of(q.product, kProducts)) throw UsageError("unknown product '" + q.product + "' (" + joined(kProducts) + ")");
    expect_operands(q, 2, "decompose --product <kind> <lhs> <rhs>");
    for (const auto& op : q.operands) {
      if (q.product == "rational") rational_arg(op);
      else partition_arg(op);
    }
    break;
  case Command::branch:
    try {
      parse_branch_rule(q.action);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    expect_operands(q, 1, "branch <rule> <partition>");
    partition_arg(q.operands[0]);
    break;
  case Command::series:
    try {
      parse_series_id(q.action);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    expect_operands(q, 0, "series <M|L|A|B|C|D> --cap d");
    break;
  case Command::check:
    if (!one_of(q.action, kChecks)) throw UsageError("unknown check '" + q.action + "' (" + joined(kChecks) + ")");
    expect_operands(q, 1, "check <property> <name> --max-degree d");
    break;
  case Command::hash:
    if (q.spec.empty()) throw UsageError("hash: --spec is required");
    expect_operands(q, 2, "hash --spec <name|json> <lhs> <rhs>");
    for (const auto& op : q.operands) partition_arg(op);
    break;
  case Command::vertex:
    if (q.action == "schur") {
      expect_operands(q, 1, "vertex schur <partition>");
      partition_arg(q.operands[0]);
    } else if (q.action == "check-commutation") {
      expect_operands(q, 0, "vertex check-commutation --cap d");
    } else {
      throw UsageError("unknown vertex action '" + q.action + "' (schur|check-commutation)");
    }
    break;
  case Command::fgl:
    if (q.action == "loop") {
      expect_operands(q, 2, "fgl loop <ga|gm[:b]> <n> --cap d");
      to_int(q.operands[1], "n");
    } else if (q.action == "log") {
      expect_operands(q, 1, "fgl log <ga|gm[:b]> --cap d");
    } else if (q.action == "coproduct") {
      expect_operands(q, 2, "fgl coproduct <additive|multiplicative> <partition>");
      if (q.operands[0] != "additive" && q.operands[0] != "multiplicative")
        throw UsageError("unknown coproduct kind '" + q.operands[0] + "'");
      partition_arg(q.operands[1]);
    } else {
      throw UsageError("unknown fgl action '" + q.action + "' (loop|log|coproduct)");
    }
    break;
  case Command::table:
    to_int(q.action, "n");
    expect_operands(q, 0, "table <n>");
    break;
  }
  if (q.cap && *q.cap < 0) throw UsageError("--cap must be non-negative");
  if (q.max_degree && *q.max_degree < 0) throw UsageError("--max-degree must be non-negative");
  if (q.max_weight && *q.max_weight < 0) throw UsageError("--max-weight must be non-negative");
}

void guard(int value, int bound, const std::string& what) {
  if (value > bound)
    throw ResourceError(what + " " + std::to_string(value) + " exceeds the weight bound " + std::to_string(bound) +
                        " (raise with --max-weight or SYMCHAR_MAX_WEIGHT)");
}

json coeff_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(c));
  return json(c.str());
}

json partition_json(const Partition& p) { return json(p.parts()); }

json terms_json(const SymFunc& f, LabelKind kind) {
  json terms = json::array();
  for (const auto& [p, c] : f)
    terms.push_back({{"label", {{"kind", std::string(kind_name(kind))}, {"partition", partition_json(p)}}},
                     {"coeff", coeff_json(c)}});
  return terms;
}

json rational_terms_json(const TensorSymFunc& t) {
  json terms = json::array();
  for (const auto& [k, c] : t)
    terms.push_back(
        {{"label", {{"kind", "rational"}, {"partition", partition_json(k.first)}, {"contra", partition_json(k.second)}}},
         {"coeff", coeff_json(c)}});
  return terms;
}

json tensor_terms_json(const TensorSymFunc& t) {
  json terms = json::array();
  for (const auto& [k, c] : t)
    terms.push_back(
        {{"label", {{"kind", "tensor"}, {"partition", partition_json(k.first)}, {"right", partition_json(k.second)}}},
         {"coeff", coeff_json(c)}});
  return terms;
}

json document(json terms, std::optional<int> cap, const Query& q) {
  json meta = {{"command", command_name(q.command)}};
  meta["cap"] = cap ? json(*cap) : json(nullptr);
  return {{"terms", std::move(terms)}, {"meta", std::move(meta)}};
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json series_json(const PowerSeries& p) {
  json coeffs = json::array();
  for (const auto& [m, c] : p.terms()) coeffs.push_back({{"exponent", m.at(0)}, {"coeff", rational_string(c)}});
  return {{"variable", "X"}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

LabelKind product_kind(const std::string& product) {
  if (product == "newell-littlewood-o") return LabelKind::o;
  if (product == "newell-littlewood-sp") return LabelKind::sp;
  if (product == "thibon") return LabelKind::thibon;
  if (product == "reduced") return LabelKind::reduced;
  return LabelKind::gl;
}

HashSpec hash_spec_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad hash spec JSON: ") + e.what());
    }
    try {
      std::vector<std::pair<std::string, std::string>> stages;
      for (const auto& st : j.at("stages"))
        stages.emplace_back(st.at("pairing").get<std::string>(), st.value("cocycle", std::string("id")));
      return hash_spec_from_names(stages, j.value("final", std::string("id")));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad hash spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad hash spec: ") + e.what());
    }
  }
  try {
    return named_hash_spec(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int emit_check(const Query& q, const std::string& property, const std::string& subject, const CheckResult& r,
               std::optional<int> degree, std::ostream& out) {
  if (q.json) {
    json doc = document(json::array(), degree, q);
    doc["check"] = {{"property", property}, {"subject", subject}, {"ok", r.ok}};
    if (!r.ok) doc["check"]["witness"] = r.witness;
    out << doc.dump(2) << '\n';
  } else {
    out << property << ' ' << subject << ": " << (r.ok ? "pass" : "fail") << '\n';
    if (!r.ok) out << "witness: " << r.witness << '\n';
  }
  return r.ok ? kOk : kCheckFailed;
}

int run_decompose(const Query& q, int bound, std::ostream& out) {
  if (q.product == "rational") {
    const PartitionPair a = rational_arg(q.operands[0]);
    const PartitionPair b = rational_arg(q.operands[1]);
    guard(a.first.weight() + a.second.weight() + b.first.weight() + b.second.weight(), bound, "total weight");
    const RationalChar r = rational_mul(tensor(a.first, a.second), tensor(b.first, b.second));
    if (q.json) out << document(rational_terms_json(r), std::nullopt, q).dump(2) << '\n';
    else out << format_rational(r) << '\n';
    return kOk;
  }
  const Partition a = partition_arg(q.operands[0]);
  const Partition b = partition_arg(q.operands[1]);
  guard(a.weight() + b.weight(), bound, "total weight");
  SymFunc r;
  if (q.product == "outer") r = outer_mul(s(a), s(b));
  else if (q.product == "kronecker") r = inner_mul(s(a), s(b));
  else if (q.product == "newell-littlewood-o" || q.product == "newell-littlewood-sp") r = newell_littlewood(s(a), s(b));
  else if (q.product == "thibon") r = thibon_inner(s(a), s(b));
  else r = murnaghan_littlewood(s(a), s(b));
  const LabelKind kind = product_kind(q.product);
  if (q.json) out << document(terms_json(r, kind), std::nullopt, q).dump(2) << '\n';
  else out << format(r, kind) << '\n';
  return kOk;
}

int run_branch(const Query& q, int bound, std::ostream& out) {
  const BranchRule rule = parse_branch_rule(q.action);
  const Partition p = partition_arg(q.operands[0]);
  guard(p.weight(), bound, "weight");
  const SymFunc r = branch(s(p), rule);
  LabelKind kind = LabelKind::gl;
  if (rule == BranchRule::gl_to_o) kind = LabelKind::o;
  if (rule == BranchRule::gl_to_sp) kind = LabelKind::sp;
  if (q.json) out << document(terms_json(r, kind), std::nullopt, q).dump(2) << '\n';
  else out << format(r, kind) << '\n';
  return kOk;
}

int run_series(const Query& q, int bound, std::ostream& out) {
  const SeriesId id = parse_series_id(q.action);
  const int cap = q.cap.value_or(kDefaultCap);
  guard(cap, bound, "cap");
  const TruncatedSeries t = series_terms(id, cap);
  if (q.json) {
    out << document(terms_json(t.sum(), LabelKind::gl), cap, q).dump(2) << '\n';
  } else {
    for (const auto& [d, f] : t.coeffs) out << d << ": " << format(f) << '\n';
  }
  return kOk;
}

int run_check(const Query& q, int bound, std::ostream& out) {
  const int d = q.max_degree.value_or(kDefaultCheckDegree);
  guard(d, bound, "max degree");
  const std::string& name = q.operands[0];
  CheckResult r;
  try {
    if (q.action == "alghom") {
      r = is_algebra_hom(named_cochain(name), d);
    } else {
      const Pairing a = named_pairing(name);
      if (q.action == "laplace") r = is_laplace(a, d);
      else if (q.action == "cocycle2") r = is_cocycle2(a, d);
      else r = is_frobenius(a, d);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return emit_check(q, q.action, name, r, d, out);
}

int run_hash(const Query& q, int bound, std::ostream& out) {
  const HashSpec spec = hash_spec_arg(q.spec);
  const Partition a = partition_arg(q.operands[0]);
  const Partition b = partition_arg(q.operands[1]);
  guard(a.weight() + b.weight(), bound, "total weight");
  HashProduct product = [&] {
    try {
      return build_hash(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const SymFunc r = product(s(a), s(b));
  if (q.json) out << document(terms_json(r, LabelKind::gl), std::nullopt, q).dump(2) << '\n';
  else out << format(r) << '\n';
  return kOk;
}

int run_vertex(const Query& q, int bound, std::ostream& out) {
  if (q.action == "check-commutation") {
    const int cap = q.cap.value_or(4);
    guard(cap, bound, "cap");
    return emit_check(q, "commutation", "L^perp(z)M(w)", check_commutation(cap), cap, out);
  }
  const Partition p = partition_arg(q.operands[0]);
  guard(p.weight(), bound, "weight");
  const SymFunc built = bernstein_chain(p);
  const bool ok = built == s(p);
  if (q.json) {
    json doc = document(terms_json(built, LabelKind::gl), std::nullopt, q);
    doc["check"] = {{"property", "bernstein-chain"}, {"subject", to_string(p)}, {"ok", ok}};
    out << doc.dump(2) << '\n';
  } else {
    out << format(built) << '\n' << (ok ? "matches " : "differs from ") << format_label(p, LabelKind::gl) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int run_fgl(const Query& q, int bound, std::ostream& out) {
  if (q.action == "coproduct") {
    const Partition p = partition_arg(q.operands[1]);
    guard(p.weight(), bound, "weight");
    const FglKind kind = q.operands[0] == "additive" ? FglKind::additive : FglKind::multiplicative;
    const TensorSymFunc t = coproduct_from_fgl(kind, s(p));
    if (q.json) out << document(tensor_terms_json(t), std::nullopt, q).dump(2) << '\n';
    else out << format(t) << '\n';
    return kOk;
  }
  const int cap = q.cap.value_or(kDefaultCap);
  guard(cap, bound, "cap");
  const FGL1 law = [&] {
    try {
      return FGL1::parse(q.operands[0], std::max(cap, 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  PowerSeries result(1, cap);
  if (q.action == "loop") result = loop_n(law, to_int(q.operands[1], "n"));
  else result = fgl_log(law);
  if (q.json) {
    json doc = document(json::array(), cap, q);
    doc["series"] = series_json(result);
    out << doc.dump(2) << '\n';
  } else {
    out << result.to_string() << '\n';
  }
  return kOk;
}

int run_table(const Query& q, int bound, std::ostream& out) {
  const int n = to_int(q.action, "n");
  if (n < 0) throw UsageError("table size must be non-negative");
  guard(n, bound, "table size");
  const CharacterTable& t = character_table(n);
  if (q.json) {
    json labels = json::array();
    for (const Partition& p : t.labels()) labels.push_back(partition_json(p));
    json rows = json::array();
    for (const auto& row : t.matrix()) {
      json r = json::array();
      for (const Integer& v : row) r.push_back(coeff_json(v));
      rows.push_back(r);
    }
    json doc = document(json::array(), std::nullopt, q);
    doc["table"] = {{"n", n}, {"labels", labels}, {"values", rows}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  std::size_t label_width = 1;
  std::size_t cell_width = 1;
  for (const Partition& p : t.labels()) label_width = std::max(label_width, to_string(p).size());
  for (const auto& row : t.matrix())
    for (const Integer& v : row) cell_width = std::max(cell_width, v.str().size());
  cell_width = std::max(cell_width, label_width);
  out << std::setw(static_cast<int>(label_width)) << "" << " |";
  for (const Partition& p : t.labels()) out << ' ' << std::setw(static_cast<int>(cell_width)) << to_string(p);
  out << '\n';
  for (std::size_t i = 0; i < t.labels().size(); ++i) {
    out << std::setw(static_cast<int>(label_width)) << to_string(t.labels()[i]) << " |";
    for (const Integer& v : t.matrix()[i]) out << ' ' << std::setw(static_cast<int>(cell_width)) << v.str();
    out << '\n';
  }
  return kOk;
}

} // namespace

std::string command_name(Command c) {
  switch (c) {
  case Command::decompose: return "decompose";
  case Command::branch: return "branch";
  case Command::series: return "series";
  case Command::check: return "check";
  case Command::hash: return "hash";
  case Command::vertex: return "vertex";
  case Command::fgl: return "fgl";
  case Command::table: return "table";
  }
  return "?";
}

Query parse(const std::vector<std::string>& args) {
  CLI::App app{"symmetric function character calculator", "symchar"};
  app.require_subcommand(1);
  app.set_help_flag();

  Query q;
  bool json_flag = false;
  std::optional<int> max_weight;
  std::string cache_dir;
  app.add_flag("--json", json_flag, "emit JSON");
  app.add_option("--max-weight", max_weight, "weight guard (default 20, env SYMCHAR_MAX_WEIGHT)");
  app.add_option("--cache-dir", cache_dir, "directory for character table files");

  std::vector<std::string> positionals;
  std::string product;
  std::string spec;
  std::optional<int> cap;
  std::optional<int> max_degree;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", positionals, "operands");
    return sub;
  };
  CLI::App* decompose = add("decompose", "decompose a product of two characters");
  decompose->add_option("--product", product, "outer|kronecker|newell-littlewood-o|newell-littlewood-sp|thibon|reduced|rational")
      ->required();
  add("branch", "branch a GL character");
  CLI::App* series = add("series", "print a truncated Schur function series");
  series->add_option("--cap", cap, "truncation degree");
  CLI::App* check = add("check", "bounded property check of a pairing or cochain");
  check->add_option("--max-degree", max_degree, "total weight bound");
  CLI::App* hash = add("hash", "evaluate a derived hash product");
  hash->add_option("--spec", spec, "named spec or JSON")->required();
  CLI::App* vertex = add("vertex", "Bernstein vertex operators");
  vertex->add_option("--cap", cap, "truncation degree");
  CLI::App* fgl = add("fgl", "formal group laws");
  fgl->add_option("--cap", cap, "truncation degree");
  add("table", "symmetric group character table");

  const std::vector<std::string> names = {"decompose", "branch", "series", "check", "hash", "vertex", "fgl", "table"};
  if (!args.empty() && args.front().rfind("-", 0) != 0 && !one_of(args.front(), names))
    throw UsageError("unknown command '" + args.front() + "' (" + joined(names) + ")");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::vector<std::pair<CLI::App*, Command>> commands = {
      {decompose, Command::decompose}, {app.get_subcommand("branch"), Command::branch},
      {series, Command::series},       {check, Command::check},
      {hash, Command::hash},           {vertex, Command::vertex},
      {fgl, Command::fgl},             {app.get_subcommand("table"), Command::table}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) q.command = cmd;

  if (q.command != Command::decompose && q.command != Command::hash) {
    if (positionals.empty()) throw UsageError(command_name(q.command) + ": missing operand");
    q.action = positionals.front();
    positionals.erase(positionals.begin());
  }
  q.operands = positionals;
  q.product = product;
  q.spec = spec;
  q.cap = cap;
  q.max_degree = max_degree;
  q.json = json_flag;
  q.max_weight = max_weight;
  q.cache_dir = cache_dir;
  validate(q);
  return q;
}

std::vector<std::string> to_argv(const Query& q) {
  std::vector<std::string> out{command_name(q.command)};
  if (!q.product.empty()) out.insert(out.end(), {"--product", q.product});
  if (!q.spec.empty()) out.insert(out.end(), {"--spec", q.spec});
  if (q.cap) out.insert(out.end(), {"--cap", std::to_string(*q.cap)});
  if (q.max_degree) out.insert(out.end(), {"--max-degree", std::to_string(*q.max_degree)});
  if (q.json) out.emplace_back("--json");
  if (q.max_weight) out.insert(out.end(), {"--max-weight", std::to_string(*q.max_weight)});
  if (!q.cache_dir.empty()) out.insert(out.end(), {"--cache-dir", q.cache_dir});
  // operands last, after "--" so negative integers stay positional
  out.emplace_back("--");
  if (!q.action.empty()) out.push_back(q.action);
  out.insert(out.end(), q.operands.begin(), q.operands.end());
  return out;
}

int effective_max_weight(const Query& q) {
  if (q.max_weight) return *q.max_weight;
  if (const char* env = std::getenv("SYMCHAR_MAX_WEIGHT")) {
    try {
      return to_int(env, "SYMCHAR_MAX_WEIGHT");
    } catch (const UsageError&) {
      return kDefaultMaxWeight;
    }
  }
  return kDefaultMaxWeight;
}

int run(const Query& q, std::ostream& out, std::ostream& err) {
  try {
    validate(q);
    set_character_table_cache_dir(q.cache_dir.empty() ? std::nullopt
                                                      : std::optional<std::filesystem::path>(q.cache_dir));
    const int bound = effective_max_weight(q);
    switch (q.command) {
    case Command::decompose: return run_decompose(q, bound, out);
    case Command::branch: return run_branch(q, bound, out);
    case Command::series: return run_series(q, bound, out);
    case Command::check: return run_check(q, bound, out);
    case Command::hash: return run_hash(q, bound, out);
    case Command::vertex: return run_vertex(q, bound, out);
    case Command::fgl: return run_fgl(q, bound, out);
    case Command::table: return run_table(q, bound, out);
    }
  } catch (const UsageError& e) {
    err << "symchar: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "symchar: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    (args.empty() ? err : out)
        << "usage: symchar <command> [options] operands\n"
           "  decompose --product <outer|kronecker|newell-littlewood-o|newell-littlewood-sp|thibon|reduced|rational> <lhs> <rhs>\n"
           "  branch <gl-to-o|o-to-gl|gl-to-sp|sp-to-gl|gl-to-glm1|glm1-to-gl> <partition>\n"
           "  series <M|L|A|B|C|D> --cap d\n"
           "  check <laplace|cocycle2|frobenius|alghom> <name> --max-degree d\n"
           "  hash --spec <name|json> <lhs> <rhs>\n"
           "  vertex schur <partition> | vertex check-commutation --cap d\n"
           "  fgl loop <ga|gm[:b]> <n> --cap d | fgl log <ga|gm[:b]> --cap d | fgl coproduct <additive|multiplicative> <partition>\n"
           "  table <n>\n"
           "global: --json --max-weight N --cache-dir DIR\n";
    return args.empty() ? kUsage : kOk;
  }
  Query q;
  try {
    q = parse(args);
  } catch (const UsageError& e) {
    err << "symchar: " << e.what() << '\n';
    return kUsage;
  }
  return run(q, out, err);
}

} // namespace symchar::cli
