#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../oracles/classical_oracle.hpp"
#include "mlq/classical.hpp"
#include "mlq/errors.hpp"

namespace mlq {
namespace {

std::vector<double> random_distribution(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) total += (x = expo(rng) + 1e-6);
  for (double& x : p) x /= total;
  return p;
}

TEST(ClassicalEnsembleTest, Validation) {
  EXPECT_THROW(ClassicalEnsemble({"a", "b"}, {0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(ClassicalEnsemble({"a", "a"}, {0.5, 0.5}), InvalidArgument);
  EXPECT_THROW(ClassicalEnsemble({"a", "b"}, {1.0, 0.0}), InvalidArgument);
  const auto e = ClassicalEnsemble::from_probabilities({0.5, 0.25, 0.25});
  EXPECT_EQ(e.symbols(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(e.format(e.parse("abca")), "abca");
  EXPECT_THROW(e.parse("abz"), InvalidArgument);
}

TEST(ClassicalEnsembleTest, Information) {
  const auto e = ClassicalEnsemble::from_probabilities({0.5, 0.25, 0.25});
  EXPECT_NEAR(shannon_entropy(e.probabilities()), 1.5, 1e-15);
  EXPECT_NEAR(mean_core_information(e), 1.5, 1e-15);
  EXPECT_NEAR(core_information(e.parse("abc"), e), 5.0, 1e-15);
  EXPECT_NEAR(raw_information(e.parse("abc"), e), 3.0 * std::log2(3.0), 1e-14);
}

TEST(PrefixCodeTest, KraftAndPrefixFreedom) {
  const PrefixCode good = PrefixCode::from_codewords({"0", "10", "110", "111"});
  EXPECT_TRUE(good.is_prefix_free());
  EXPECT_DOUBLE_EQ(kraft_sum(good), 1.0);
  EXPECT_TRUE(kraft_ok(good));
  const PrefixCode bad = PrefixCode::from_codewords({"0", "01", "1"});
  EXPECT_FALSE(bad.is_prefix_free());
  EXPECT_FALSE(kraft_ok(bad));
  EXPECT_THROW(PrefixCode::from_codewords({"0", "2"}), InvalidArgument);
}

TEST(PrefixCodeTest, IdealLengths) {
  const PrefixCode ideal = PrefixCode::ideal(std::vector<double>{0.9, 0.1});
  EXPECT_NEAR(ideal.lengths()[0], 0.152003093445, 1e-12);
  EXPECT_NEAR(ideal.lengths()[1], 3.321928094887, 1e-12);
  EXPECT_NEAR(kraft_sum(ideal), 1.0, 1e-12);
  EXPECT_NEAR(expected_length(ideal, std::vector<double>{0.9, 0.1}), 0.468995593589, 1e-12);
}

TEST(HuffmanTest, KnownCode) {
  const auto e = ClassicalEnsemble::from_probabilities({0.4, 0.3, 0.2, 0.1});
  const PrefixCode code = huffman_build(e);
  EXPECT_EQ(code.lengths(), (std::vector<double>{1, 2, 3, 3}));
  EXPECT_NEAR(expected_length(code, e.probabilities()), 1.9, 1e-15);
  const PrefixCode single = huffman_build(ClassicalEnsemble::from_probabilities({1.0}));
  EXPECT_EQ(single.codewords(), (std::vector<std::string>{"0"}));
}

TEST(HuffmanTest, SandwichAndOptimalityOnRandomDistributions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 15);
    const std::vector<double> p = random_distribution(n, rng);
    const PrefixCode code = huffman_build(ClassicalEnsemble::from_probabilities(p));
    const double h = oracle::entropy(p);
    const double mean = expected_length(code, p);
    EXPECT_LE(h, mean + 1e-12);
    EXPECT_LT(mean, h + 1.0);
    EXPECT_TRUE(code.is_prefix_free());
    EXPECT_TRUE(kraft_ok(code));
    if (n <= 4) EXPECT_NEAR(mean, oracle::optimal_prefix_length(p), 1e-12);
  }
}

TEST(SymbolCodeTest, RoundTripAndErrors) {
  const auto e = ClassicalEnsemble::from_probabilities({0.4, 0.3, 0.2, 0.1});
  const PrefixCode code = huffman_build(e);
  const Message m = e.parse("abcddca");
  EXPECT_EQ(symbol_decode(code, symbol_encode(code, m)), m);
  EXPECT_TRUE(symbol_decode(code, "").empty());
  EXPECT_THROW(symbol_decode(code, "0x"), MalformedInput);
  const std::string bits = symbol_encode(code, e.parse("d"));
  EXPECT_THROW(symbol_decode(code, bits.substr(0, bits.size() - 1)), MalformedInput);
}

TEST(TypicalSetTest, FrozenReference) {
  const auto e = ClassicalEnsemble::from_probabilities({0.9, 0.1});
  const TypicalSet t = typical_set(e, 10, 0.3);
  ASSERT_EQ(t.size(), 10u);
  for (const auto& m : t.members) EXPECT_EQ(std::count(m.begin(), m.end(), 1u), 1);
  EXPECT_NEAR(t.total_probability, 0.3874204890, 1e-10);
  EXPECT_LE(static_cast<double>(t.size()), t.size_upper_bound());
}

TEST(TypicalSetTest, TrendValues) {
  const auto e = ClassicalEnsemble::from_probabilities({0.9, 0.1});
  EXPECT_EQ(typical_set(e, 4, 0.15).total_probability, 0.0);
  EXPECT_NEAR(typical_set(e, 8, 0.15).total_probability, 0.3826375200, 1e-10);
  EXPECT_NEAR(typical_set(e, 12, 0.15).total_probability, 0.3765727153, 1e-10);
  EXPECT_NEAR(typical_set(e, 16, 0.15).total_probability, 0.6039473208, 1e-10);
  EXPECT_GT(typical_set(e, 16, 0.15).total_probability, typical_set(e, 4, 0.15).total_probability);
}

TEST(TypicalSetTest, MatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + static_cast<std::size_t>(trial % 3);
    const std::vector<double> p = random_distribution(k, rng);
    const auto e = ClassicalEnsemble::from_probabilities(p);
    for (std::size_t n : {1, 3, 6}) {
      const TypicalSet t = typical_set(e, n, 0.25);
      const oracle::Typical brute = oracle::typical_set(p, n, 0.25);
      EXPECT_EQ(t.members, brute.members);
      EXPECT_NEAR(t.total_probability, brute.total, 1e-12);
    }
  }
}

TEST(TypicalSetTest, GuardAndDelta) {
  const auto e = ClassicalEnsemble::from_probabilities({0.5, 0.5});
  EXPECT_THROW(typical_set(e, 40, 0.1), GuardExceeded);
  EXPECT_THROW(typical_set(e, 4, -0.1), InvalidArgument);
}

TEST(BlockCodeTest, SuccessEqualsTypicalProbability) {
  const auto e = ClassicalEnsemble::from_probabilities({0.9, 0.1});
  const BlockCode code = block_code(e, 10, 0.3);
  EXPECT_EQ(code.width(), 4u);
  EXPECT_NEAR(code.success_probability(), 0.3874204890, 1e-10);
  EXPECT_NEAR(code.bits_per_letter(), 0.4, 1e-15);
  for (const auto& m : code.typical().members) {
    const EncodedBlock b = code.encode(m);
    EXPECT_FALSE(b.junk);
    EXPECT_EQ(code.decode(b), m);
  }
  const EncodedBlock junk = code.encode(Message(10, 0));
  EXPECT_TRUE(junk.junk);
  EXPECT_FALSE(code.decode(junk).has_value());
}

}  // namespace
}  // namespace mlq
