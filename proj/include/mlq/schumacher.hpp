#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mlq/channel.hpp"
#include "mlq/classical.hpp"

namespace mlq {

// Letters of an alphabet with a priori probabilities; rho = sum p |x><x|.
struct LetterEnsemble {
  AlphabetPtr alphabet;
  std::vector<double> probabilities;

  Eigen::MatrixXcd letter_matrix() const { return alphabet->letter_matrix(probabilities); }
};

// All products |x_1 ... x_N> with probabilities p(x_1)...p(x_N).
MessageEnsemble canonical_ensemble(const LetterEnsemble& letters, std::size_t block_length);

// Typical eigen-strings of rho^{(x)N}. Eigen-letter k is the k-th eigenvector
// of rho in descending eigenvalue order; membership uses the classical
// typical set of the positive eigenvalues.
struct QuantumTypicalSubspace {
  std::size_t block_length = 0;
  double delta = 0.0;
  AlphabetPtr eigen_alphabet;
  LetterSpectrum spectrum;
  std::vector<BasisString> basis;  // lexicographic
  std::vector<double> probabilities;
  double total_probability = 0.0;

  std::size_t dimension() const noexcept { return basis.size(); }
  bool contains(const BasisString& s) const;
  // ||Pi_T x||^2 for x over any basis of the letter space.
  double projection_norm_squared(const ManyLetterVector& x) const;
};

// `alphabet` fixes the letter space; rho is in its basis-letter coordinates.
QuantumTypicalSubspace quantum_typical_subspace(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho,
                                                std::size_t block_length, double delta);

struct SchumacherCode {
  QuantumTypicalSubspace typical;
  AlphabetPtr source_alphabet;
  Eigen::MatrixXcd rho;
  AlphabetPtr code_alphabet;
  std::size_t rate = 0;     // code letters per block
  double ideal_rate = 0.0;  // log2 dim V / log2 dim H_C
  std::vector<BasisString> codewords;  // codewords[k] encodes typical.basis[k]
  std::optional<BasisString> junk_codeword;
  // Encoder {E_T, |c_junk><a| for untypical a}; decoder {D_T, |.><c| for unused c}.
  CodePair pair;

  std::size_t untypical_count() const;
};

SchumacherCode build_schumacher(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho, std::size_t block_length,
                                double delta, const AlphabetPtr& code_alphabet, const TruncationConfig& trunc);

struct SchumacherConfidence {
  double confidence = 0.0;  // sum p(x) ||Pi_T x||^4
  double bound = 0.0;       // 2 P_T - 1
  double total_probability = 0.0;
};

// Closed-form confidence over the canonical ensemble of `letters`.
// InvalidArgument when the letters' matrix differs from the code's rho.
SchumacherConfidence schumacher_confidence(const SchumacherCode& code, const LetterEnsemble& letters);

struct SchumacherInformation {
  double information = 0.0;         // I(rho^{(x)N})
  double physical = 0.0;            // R log2 d_C: junk keeps its length
  double discarded_junk = 0.0;      // R log2 d_C P_T: junk length counted as zero
  double ideal = 0.0;               // log2 dim V P_T
};

SchumacherInformation schumacher_information(const SchumacherCode& code);

// Grand-canonical scheme: sector n is coded at rate r(n), untypical strings
// of every length go to the empty message.
struct GrandSchumacherSector {
  std::size_t length = 0;
  double weight = 0.0;
  std::size_t rate = 0;
  std::size_t dimension = 0;
  double total_probability = 0.0;
};

struct GrandSchumacherCode {
  AlphabetPtr eigen_alphabet;
  LetterSpectrum spectrum;
  AlphabetPtr code_alphabet;
  std::vector<double> lambdas;
  double delta = 0.0;
  std::vector<GrandSchumacherSector> sectors;  // lambda_n > 0 only
  std::map<BasisString, BasisString> codebook;  // typical eigen-string -> codeword
  CodePair pair;

  // sum lambda_n P_T^n.
  double total_probability() const;
  // sum lambda_n r(n) log2 d_C P_T^n.
  double encoded_information() const;
};

GrandSchumacherCode generalized_schumacher(const AlphabetPtr& alphabet, const std::vector<double>& lambdas,
                                           const Eigen::MatrixXcd& rho, double delta, const AlphabetPtr& code_alphabet,
                                           const TruncationConfig& trunc);

}  // namespace mlq
