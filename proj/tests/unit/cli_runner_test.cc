#include <gtest/gtest.h>

#include <sstream>

#include "mlq/errors.hpp"
#include "mlq/experiments.hpp"

namespace mlq {
namespace {

Report run(const std::string& sub, const std::string& json, RunOptions options = {}) {
  return run_experiment(sub, Json::parse(json), options);
}

const Table& table(const Report& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name == name) return t;
  throw std::runtime_error("no table " + name);
}

TEST(ExperimentsTest, SubcommandSet) {
  EXPECT_EQ(subcommands(), (std::vector<std::string>{"entropy", "huffman", "kraft", "typical", "block-code", "translate",
                                                     "schumacher", "schumacher-grand", "lossless-grand", "lossless-general",
                                                     "core-info", "audit-channel"}));
}

TEST(ExperimentsTest, EntropyRow) {
  const Report r = run("entropy", R"({"rho": [[0.9, 0], [0, 0.1]]})");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(table(r, "entropy").rows.at(0).at(1), "0.468995593589");
}

TEST(ExperimentsTest, SchumacherRow) {
  const Report r = run("schumacher", R"({"rho": [[0.9, 0], [0, 0.1]], "N": 10, "delta": 0.3})");
  EXPECT_TRUE(r.ok());
  const auto& row = table(r, "schumacher").rows.at(0);
  EXPECT_EQ(row.at(2), "10");
  EXPECT_EQ(row.at(3), "4");
  EXPECT_EQ(row.at(5).substr(0, 6), "0.3874");
}

TEST(ExperimentsTest, LosslessOnPureStateIsFree) {
  RunOptions o;
  o.mode = LengthMode::ideal;
  const Report r = run("lossless-general",
                       R"({"lmax": 2, "ensemble": {"members": [{"p": 1, "amplitudes": [{"string": "01", "amp": 1}]}]}})", o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(table(r, "summary").rows.at(0).at(3), "0");
}

TEST(ExperimentsTest, Classification) {
  EXPECT_EQ(classify(MalformedInput("x")).first, ExitCode::parse);
  EXPECT_EQ(classify(GuardExceeded("x")).first, ExitCode::guard);
  EXPECT_EQ(classify(TruncationOverflow("x")).first, ExitCode::guard);
  EXPECT_EQ(classify(InvariantViolation("x")).first, ExitCode::invariant);
  EXPECT_EQ(classify(InvalidArgument("x")).first, ExitCode::input);
  EXPECT_EQ(classify(ConvergenceError("x")).first, ExitCode::numerics);
  EXPECT_EQ(classify(std::runtime_error("x")).first, ExitCode::failure);
}

TEST(ExperimentsTest, MissingKeyIsParseError) {
  RunOptions o;
  std::ostringstream out, err;
  EXPECT_THROW(run("typical", R"({"probs": [0.5, 0.5]})"), MalformedInput);
}

TEST(ExperimentsTest, DeterministicWithSeed) {
  RunOptions o;
  o.seed = 7;
  const std::string cfg = R"({"source_dim": 3, "N": 1, "lmax": 2, "random_states": 3})";
  std::ostringstream a, b;
  write_report(a, run("translate", cfg, o));
  write_report(b, run("translate", cfg, o));
  EXPECT_EQ(a.str(), b.str());
  o.seed = 8;
  std::ostringstream c;
  write_report(c, run("translate", cfg, o));
  EXPECT_NE(a.str(), c.str());
}

TEST(ExperimentsTest, ManifestHasNoTimestamps) {
  const Json config = Json::parse(R"({"probs": [0.5, 0.5], "N": 2, "delta": 0.1})");
  RunOptions o;
  const Report r = run_experiment("typical", config, o);
  const Json m = run_manifest("typical", config, o, r);
  EXPECT_EQ(m.at("status"), "ok");
  EXPECT_EQ(m.at("config"), config);
  EXPECT_TRUE(m.contains("tolerances"));
  EXPECT_TRUE(m.contains("versions"));
  const std::string dumped = m.dump();
  EXPECT_EQ(dumped.find("time"), std::string::npos);
  EXPECT_EQ(dumped.find("date"), std::string::npos);
}

TEST(ConfigTest, Parsers) {
  EXPECT_EQ(parse_complex(Json::parse("[1, 2]"), "x"), Complex(1.0, 2.0));
  EXPECT_THROW(parse_complex(Json::parse("\"a\""), "x"), MalformedInput);
  EXPECT_THROW(parse_matrix(Json::parse("[[1, 0]]"), "x"), MalformedInput);
  EXPECT_EQ(get_sizes(Json::parse(R"({"N": 3})"), "N"), (std::vector<std::size_t>{3}));
  EXPECT_THROW(get_size(Json::parse(R"({"N": -1})"), "N"), MalformedInput);
  EXPECT_THROW(load_config("/nonexistent/config.json"), MalformedInput);
}

TEST(ReportTest, Format) {
  EXPECT_EQ(fmt(0.1), "0.1");
  EXPECT_EQ(fmt(std::size_t{3}), "3");
  EXPECT_EQ(fmt(true), "true");
  Report r{"x", {}, {}};
  r.table("t", {"a", "b"}).add({"1", "2"});
  r.check_close("c", 1.0, 1.0 + 1e-12, 1e-10);
  r.check_at_most("d", 2.0, 1.0, 0.0);
  EXPECT_FALSE(r.ok());
  std::ostringstream out;
  write_report(out, r);
  EXPECT_NE(out.str().find("# t\na\tb\n1\t2\n"), std::string::npos);
  EXPECT_NE(out.str().find("# checks"), std::string::npos);
}

}  // namespace
}  // namespace mlq
