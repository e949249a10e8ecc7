#include <gtest/gtest.h>

#include <cmath>

#include "../oracles/classical_oracle.hpp"
#include "../oracles/dense_oracle.hpp"
#include "mlq/errors.hpp"
#include "mlq/schumacher.hpp"

namespace mlq {
namespace {

Eigen::MatrixXcd diag2(double a, double b) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

LetterEnsemble skewed_letters() {
  Eigen::VectorXcd a(2), b(2);
  a << 1.0, 0.0;
  b << 0.6, 0.8;
  return {std::make_shared<const QuantumAlphabet>(std::vector<Eigen::VectorXcd>{a, b}), {0.5, 0.5}};
}

TEST(TypicalSubspaceTest, FrozenReference) {
  const auto q = QuantumAlphabet::orthonormal(2);
  const QuantumTypicalSubspace t = quantum_typical_subspace(q, diag2(0.9, 0.1), 10, 0.3);
  EXPECT_EQ(t.dimension(), 10u);
  EXPECT_NEAR(t.total_probability, 0.3874204890, 1e-10);
  EXPECT_TRUE(t.contains(BasisString::from_digits("0000000001")));
  EXPECT_FALSE(t.contains(BasisString::from_digits("0000000000")));
}

TEST(TypicalSubspaceTest, MatchesClassicalEnumerationOfSpectrum) {
  const auto q = QuantumAlphabet::orthonormal(2);
  const Eigen::MatrixXcd rho = skewed_letters().letter_matrix();
  const auto [l0, l1] = oracle::eigenvalues_2x2(rho);
  for (std::size_t n = 1; n <= 8; ++n) {
    const QuantumTypicalSubspace t = quantum_typical_subspace(q, rho, n, 0.25);
    const oracle::Typical brute = oracle::typical_set({l0, l1}, n, 0.25);
    ASSERT_EQ(t.dimension(), brute.members.size());
    EXPECT_NEAR(t.total_probability, brute.total, 1e-12);
  }
}

TEST(SchumacherTest, FrozenRates) {
  const auto q = QuantumAlphabet::orthonormal(2);
  TruncationConfig trunc;
  trunc.max_length = 10;
  const SchumacherCode sc = build_schumacher(q, diag2(0.9, 0.1), 10, 0.3, q, trunc);
  EXPECT_EQ(sc.rate, 4u);
  EXPECT_NEAR(sc.ideal_rate, std::log2(10.0), 1e-12);
  EXPECT_TRUE(sc.junk_codeword.has_value());
  EXPECT_EQ(sc.untypical_count(), 1014u);
  const SchumacherInformation info = schumacher_information(sc);
  EXPECT_NEAR(info.information, 10.0, 1e-12);
  EXPECT_NEAR(info.physical, 4.0, 1e-12);
  EXPECT_NEAR(info.discarded_junk, 1.5496819560, 1e-10);
  EXPECT_TRUE(check_kraus(sc.pair.encoder()).passed);
  EXPECT_TRUE(check_kraus(sc.pair.decoder()).passed);
}

TEST(SchumacherTest, ConfidenceClosedFormMatchesDoubleSum) {
  const auto code = QuantumAlphabet::orthonormal(2);
  for (const LetterEnsemble& letters : {LetterEnsemble{QuantumAlphabet::orthonormal(2), {0.8, 0.2}}, skewed_letters()}) {
    for (std::size_t n : {2, 3, 5})
      for (double delta : {0.1, 0.3, 0.6}) {
        TruncationConfig trunc;
        trunc.max_length = n;
        const SchumacherCode sc = build_schumacher(letters.alphabet, letters.letter_matrix(), n, delta, code, trunc);
        const SchumacherConfidence c = schumacher_confidence(sc, letters);
        const MessageEnsemble e = canonical_ensemble(letters, n);
        EXPECT_NEAR(c.confidence, oracle::confidence_dense(e, sc.pair), 1e-10);
        EXPECT_NEAR(c.confidence, confidence(e, sc.pair), 1e-10);
        EXPECT_GE(c.confidence, c.bound - 1e-10);
        EXPECT_NEAR(c.bound, 2.0 * sc.typical.total_probability - 1.0, 1e-12);
      }
  }
}

TEST(SchumacherTest, OrthogonalLettersGiveTypicalProbability) {
  const LetterEnsemble letters{QuantumAlphabet::orthonormal(2), {0.9, 0.1}};
  TruncationConfig trunc;
  trunc.max_length = 10;
  const SchumacherCode sc = build_schumacher(letters.alphabet, letters.letter_matrix(), 10, 0.3, letters.alphabet, trunc);
  EXPECT_NEAR(schumacher_confidence(sc, letters).confidence, 0.3874204890, 1e-10);
}

TEST(SchumacherTest, RejectsMismatchedLetters) {
  const auto q = QuantumAlphabet::orthonormal(2);
  TruncationConfig trunc;
  trunc.max_length = 3;
  const SchumacherCode sc = build_schumacher(q, diag2(0.9, 0.1), 3, 0.3, q, trunc);
  EXPECT_THROW(schumacher_confidence(sc, LetterEnsemble{q, {0.5, 0.5}}), InvalidArgument);
  trunc.max_length = 2;
  EXPECT_THROW(build_schumacher(q, diag2(0.9, 0.1), 3, 0.3, q, trunc), TruncationOverflow);
}

TEST(GeneralizedSchumacherTest, SectorsAndCompleteness) {
  const auto q = QuantumAlphabet::orthonormal(2);
  TruncationConfig trunc;
  trunc.max_length = 3;
  const std::vector<double> lambdas{0.1, 0.2, 0.3, 0.4};
  const GrandSchumacherCode gs = generalized_schumacher(q, lambdas, diag2(0.9, 0.1), 0.9, q, trunc);
  ASSERT_EQ(gs.sectors.size(), 4u);
  EXPECT_EQ(gs.sectors[0].dimension, 1u);
  EXPECT_EQ(gs.sectors[0].rate, 0u);
  EXPECT_NEAR(gs.total_probability(), 0.1 + 0.2 * 0.9 + 0.3 * 0.81 + 0.4 * 0.972, 1e-12);
  EXPECT_TRUE(check_kraus(gs.pair.encoder()).passed);
  EXPECT_TRUE(check_kraus(gs.pair.decoder()).passed);
  const MessageMatrix sigma = grand_canonical(q, lambdas, diag2(0.9, 0.1), trunc);
  EXPECT_NEAR(gs.encoded_information(), encoded_information(gs.pair.encoder(), sigma), 1e-10);
  std::set<BasisString> codewords;
  for (const auto& [src, cw] : gs.codebook) codewords.insert(cw);
  EXPECT_EQ(codewords.size(), gs.codebook.size());
}

}  // namespace
}  // namespace mlq
