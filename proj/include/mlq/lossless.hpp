#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mlq/channel.hpp"
#include "mlq/classical.hpp"

namespace mlq {

// Per-letter Huffman code on the eigenletters of rho. Codewords are always
// materialized; `lengths` follow the mode (Huffman lengths or -log2 q, with
// zero-eigenvalue letters keeping their Huffman length in ideal mode).
struct QuantumSymbolCode {
  AlphabetPtr source_alphabet;
  AlphabetPtr eigen_alphabet;
  AlphabetPtr code_alphabet;  // qubits
  LetterSpectrum spectrum;
  LengthMode mode = LengthMode::integer;
  std::vector<std::string> codewords;
  std::vector<double> lengths;

  // sum_a q(a) L_c(a).
  double mean_length() const;
  // Sum of mode lengths of the letters a code string decodes into.
  double code_length(const BasisString& code_string) const;
};

QuantumSymbolCode build_symbol_code(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho, LengthMode mode);

// C = sum_n C_Q^{(x)n} on all source strings up to trunc.max_length.
KrausChannel symbol_encoder(const QuantumSymbolCode& code, const TruncationConfig& trunc);

struct GrandCompression {
  double information = 0.0;           // I(sigma)
  double encoded_information = 0.0;   // sum lambda_n n <L_c>
  double measured_information = 0.0;  // Tr{sigma I_c} through the encoder
  double entropy = 0.0;               // S(sigma)
  double sector_entropy = 0.0;        // sum lambda_n n S(rho)
  double length_entropy = 0.0;        // H(lambda)
};

GrandCompression compress_grand_canonical(const std::vector<double>& lambdas, const QuantumSymbolCode& code,
                                          const TruncationConfig& trunc);

struct LosslessCodeword {
  double eigenvalue = 0.0;
  ManyLetterVector eigenvector;
  BasisString codeword;
  double length = 0.0;  // per mode
};

// Eigenvectors of sigma get Huffman codewords; everything orthogonal to them
// is translated letter by letter behind an escape prefix that no codeword
// starts with.
struct GeneralLosslessCode {
  AlphabetPtr source_alphabet;
  AlphabetPtr code_alphabet;  // qubits
  LengthMode mode = LengthMode::integer;
  std::vector<LosslessCodeword> codebook;  // descending eigenvalue
  BasisString escape;
  std::size_t letter_width = 1;  // code bits per source letter in the complement
  KrausChannel encoder;

  // Mode length of a complement string translated from n source letters.
  double complement_length(std::size_t n) const;
  // Pi_Gamma phi.
  ManyLetterVector project(const ManyLetterVector& phi) const;
};

GeneralLosslessCode build_general_code(const MessageMatrix& sigma, LengthMode mode, const TruncationConfig& trunc);

struct DecodeResult {
  ManyLetterVector message;
  // ||w - C C^dagger w||: nonzero when w has components outside the image.
  double residual_norm = 0.0;
};

ManyLetterVector encode(const GeneralLosslessCode& code, const ManyLetterVector& phi);
DecodeResult decode(const GeneralLosslessCode& code, const ManyLetterVector& coded);
ManyLetterVector encode(const KrausChannel& symbol_channel, const ManyLetterVector& phi);
DecodeResult decode(const KrausChannel& symbol_channel, const ManyLetterVector& coded);

// Tr{sigma I_c} with I_c = sum l_i |e_i><e_i| + (1 - Pi) f(L) (1 - Pi), f the complement length.
double encoded_information_general(const GeneralLosslessCode& code, const MessageMatrix& sigma);

// I_0 = -log2 sigma on the span of the eigenvectors plus log2(dim H_Q) (1 - Pi) L (1 - Pi).
class CoreInformationObservable {
 public:
  // Eigenpairs must be orthonormal with eigenvalues in (0, 1].
  CoreInformationObservable(AlphabetPtr alphabet, std::vector<EigenPair> pairs);
  static CoreInformationObservable from_matrix(const MessageMatrix& sigma, double cutoff = kEigenCutoff);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<EigenPair>& pairs() const noexcept { return pairs_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<EigenPair> pairs_;
};

double core_information(const CoreInformationObservable& obs, const ManyLetterVector& phi);
double core_information(const CoreInformationObservable& obs, const MessageMatrix& rho);

}  // namespace mlq
