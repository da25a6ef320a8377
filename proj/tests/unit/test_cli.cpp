#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace symchar::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(CliParse, Examples) {
  const Query a = parse({"decompose", "--product", "newell-littlewood-o", "1", "1"});
  EXPECT_EQ(a.command, Command::decompose);
  EXPECT_EQ(a.product, "newell-littlewood-o");
  EXPECT_EQ(a.operands, (std::vector<std::string>{"1", "1"}));

  const Query b = parse({"check", "laplace", "inner", "--max-degree", "6"});
  EXPECT_EQ(b.command, Command::check);
  EXPECT_EQ(b.action, "laplace");
  EXPECT_EQ(b.operands, std::vector<std::string>{"inner"});
  EXPECT_EQ(b.max_degree, 6);

  const Query c = parse({"decompose", "--product", "rational", "1;1", "1;0"});
  EXPECT_EQ(c.operands, (std::vector<std::string>{"1;1", "1;0"}));

  const Query d = parse({"fgl", "loop", "gm", "-2", "--cap", "4", "--json"});
  EXPECT_EQ(d.operands, (std::vector<std::string>{"gm", "-2"}));
  EXPECT_EQ(d.cap, 4);
  EXPECT_TRUE(d.json);
}

TEST(CliParse, GlobalFlagsAnywhere) {
  const Query a = parse({"--json", "--max-weight", "9", "table", "4"});
  const Query b = parse({"table", "4", "--max-weight", "9", "--json"});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.max_weight, 9);
}

TEST(CliParse, RoundTrip) {
  const std::vector<std::vector<std::string>> corpus = {
      {"decompose", "--product", "outer", "2,1", "1"},
      {"decompose", "--product", "rational", "1;1", "1;0", "--json"},
      {"branch", "gl-to-o", "2"},
      {"series", "D", "--cap", "4"},
      {"check", "frobenius", "derived:S:inner", "--max-degree", "3"},
      {"hash", "--spec", "thibon", "1", "1"},
      {"hash", "--spec", R"({"stages":[{"pairing":"inner","cocycle":"m"}],"final":"id"})", "1", "1"},
      {"vertex", "schur", "3,2,2,1"},
      {"vertex", "check-commutation", "--cap", "3"},
      {"fgl", "loop", "gm:2", "-3", "--cap", "5"},
      {"fgl", "log", "gm", "--cap", "4"},
      {"fgl", "coproduct", "multiplicative", "2"},
      {"table", "5", "--cache-dir", "/tmp/x", "--max-weight", "30"},
  };
  for (const auto& args : corpus) {
    const Query q = parse(args);
    ASSERT_EQ(parse(to_argv(q)), q) << args.front();
  }
}

TEST(CliParse, Errors) {
  EXPECT_THROW(parse({"frobnicate"}), UsageError);
  EXPECT_THROW(parse({"decompose", "1", "1"}), UsageError);
  EXPECT_THROW(parse({"decompose", "--product", "tensor", "1", "1"}), UsageError);
  EXPECT_THROW(parse({"decompose", "--product", "outer", "1"}), UsageError);
  EXPECT_THROW(parse({"decompose", "--product", "outer", "1", "2,x"}), UsageError);
  EXPECT_THROW(parse({"check", "laplace"}), UsageError);
  EXPECT_THROW(parse({"series", "Q"}), UsageError);
  EXPECT_THROW(parse({"fgl", "loop", "gm", "two"}), UsageError);
  EXPECT_THROW(parse({"table", "4", "--bogus"}), UsageError);
  try {
    parse({"decompose", "--product", "outer", "1", "2,x"});
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos) << e.what();
  }
}

TEST(CliRun, GoldenOutputs) {
  EXPECT_EQ(call({"decompose", "--product", "newell-littlewood-o", "1", "1"}).out, "[2] + [1,1] + [0]\n");
  EXPECT_EQ(call({"decompose", "--product", "newell-littlewood-sp", "1,1", "1"}).out, "<2,1> + <1,1,1> + <1>\n");
  EXPECT_EQ(call({"decompose", "--product", "outer", "1", "1"}).out, "s[2] + s[1,1]\n");
  EXPECT_EQ(call({"decompose", "--product", "kronecker", "2,1", "2,1"}).out, "s[3] + s[2,1] + s[1,1,1]\n");
  EXPECT_EQ(call({"decompose", "--product", "thibon", "1", "1"}).out, "<<2>> + <<1,1>> + <<1>>\n");
  EXPECT_EQ(call({"decompose", "--product", "reduced", "1", "1"}).out, "<2> + <1,1> + <1> + <0>\n");
  EXPECT_EQ(call({"decompose", "--product", "rational", "1;1", "1;0"}).out, "{2;1} + {1,1;1} + {1;0}\n");
  EXPECT_EQ(call({"branch", "gl-to-o", "2"}).out, "[2] + [0]\n");
  EXPECT_EQ(call({"fgl", "loop", "gm", "3", "--cap", "6"}).out, "3X + 3X^2 + X^3\n");
  EXPECT_EQ(call({"fgl", "log", "gm", "--cap", "3"}).out, "X - (1/2)X^2 + (1/3)X^3\n");
  EXPECT_EQ(call({"hash", "--spec", "newell-littlewood", "1", "1"}).out, "s[2] + s[1,1] + s[0]\n");
  EXPECT_EQ(call({"series", "C", "--cap", "2"}).out, "0: s[0]\n1: 0\n2: -s[2]\n");
  EXPECT_EQ(call({"table", "2"}).out, "    |   2 1,1\n  2 |   1   1\n1,1 |  -1   1\n");
}

TEST(CliRun, ChecksAndExitCodes) {
  const Result laplace_outer = call({"check", "laplace", "outer", "--max-degree", "3"});
  EXPECT_EQ(laplace_outer.code, kCheckFailed);
  EXPECT_NE(laplace_outer.out.find("witness: x=s[1] y=s[1] z=s[1]"), std::string::npos) << laplace_outer.out;
  EXPECT_EQ(call({"check", "laplace", "inner", "--max-degree", "4"}).code, kOk);
  EXPECT_EQ(call({"check", "alghom", "S", "--max-degree", "4"}).code, kOk);
  EXPECT_EQ(call({"vertex", "schur", "3,2,2,1"}).code, kOk);
  EXPECT_EQ(call({"vertex", "check-commutation", "--cap", "3"}).code, kOk);
  EXPECT_EQ(call({"check", "laplace", "nonsense"}).code, kUsage);
  EXPECT_EQ(call({"decompose", "--product", "outer", "2,x", "1"}).code, kUsage);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"decompose", "--product", "outer", "10", "11"}).code, kResource);
  EXPECT_EQ(call({"decompose", "--product", "outer", "3", "3", "--max-weight", "5"}).code, kResource);
  EXPECT_EQ(call({"table", "21"}).code, kResource);
}

TEST(CliRun, MaxWeightPrecedence) {
  Query q = parse({"table", "3"});
  ::unsetenv("SYMCHAR_MAX_WEIGHT");
  EXPECT_EQ(effective_max_weight(q), 20);
  ::setenv("SYMCHAR_MAX_WEIGHT", "7", 1);
  EXPECT_EQ(effective_max_weight(q), 7);
  q.max_weight = 9;
  EXPECT_EQ(effective_max_weight(q), 9);
  ::unsetenv("SYMCHAR_MAX_WEIGHT");
}

TEST(CliRun, JsonOutput) {
  const Result r = call({"decompose", "--product", "rational", "1;1", "1;0", "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0]["label"]["kind"], "rational");
  EXPECT_EQ(j["terms"][0]["label"]["partition"], nlohmann::json::array({2}));
  EXPECT_EQ(j["terms"][0]["label"]["contra"], nlohmann::json::array({1}));
  EXPECT_EQ(j["terms"][0]["coeff"], 1);
  EXPECT_TRUE(j["meta"]["cap"].is_null());

  const auto s = nlohmann::json::parse(call({"series", "L", "--cap", "2", "--json"}).out);
  EXPECT_EQ(s["meta"]["cap"], 2);
  EXPECT_EQ(s["terms"][0]["coeff"], 1);  // s[1,1]
  EXPECT_EQ(s["terms"][1]["coeff"], -1);

  const auto c = nlohmann::json::parse(call({"check", "laplace", "outer", "--max-degree", "3", "--json"}).out);
  EXPECT_EQ(c["check"]["ok"], false);
  EXPECT_FALSE(c["check"]["witness"].get<std::string>().empty());
}

TEST(CliRun, OutputIsDeterministic) {
  const std::vector<std::string> args = {"decompose", "--product", "kronecker", "3,1", "2,2"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(CliRun, CacheDirWritesTables) {
  const auto dir = std::filesystem::temp_directory_path() / "symchar-cli-cache";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(call({"table", "4", "--cache-dir", dir.string()}).code, kOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "chartable-4.txt"));
  EXPECT_EQ(call({"table", "4", "--cache-dir", dir.string()}).code, kOk);
  std::filesystem::remove_all(dir);
  call({"table", "1"});  // resets the cache directory
}
