#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mlq/message_matrix.hpp"

namespace mlq {

// Column-sparse linear map: each source basis string maps to a sparse code
// vector. Missing columns are zero.
using SparseOperator = std::map<BasisString, Amplitudes>;

// The adjoint, again column-sparse (code string -> source amplitudes).
SparseOperator adjoint(const SparseOperator& op);

// A completely positive map in Kraus form between truncated many-letter
// spaces. The source domain is every basis string whose length is listed in
// `source_lengths`; produced code strings must have a length in `code_lengths`.
class KrausChannel {
 public:
  KrausChannel(std::string name, AlphabetPtr source, AlphabetPtr code, std::vector<SparseOperator> operators,
               std::vector<std::size_t> source_lengths, std::vector<std::size_t> code_lengths);

  const std::string& name() const noexcept { return name_; }
  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& code() const noexcept { return code_; }
  const std::vector<SparseOperator>& operators() const noexcept { return operators_; }
  const std::vector<std::size_t>& source_lengths() const noexcept { return source_lengths_; }
  const std::vector<std::size_t>& code_lengths() const noexcept { return code_lengths_; }
  bool in_domain(const BasisString& s) const;

  // E_i |v>. Vectors over another basis of the same letter space are
  // re-expressed first; DomainError for support outside the domain.
  ManyLetterVector apply(std::size_t op, const ManyLetterVector& v) const;
  // E_i^dagger |w> for a code-space vector w.
  ManyLetterVector apply_adjoint(std::size_t op, const ManyLetterVector& w) const;

 private:
  ManyLetterVector source_coordinates(const ManyLetterVector& v) const;

  std::string name_;
  AlphabetPtr source_;
  AlphabetPtr code_;
  std::vector<SparseOperator> operators_;
  std::vector<std::size_t> source_lengths_;
  std::vector<std::size_t> code_lengths_;
};

// Deviation of an operator sum from the identity on the truncated space.
struct IdentityReport {
  std::string channel;
  std::size_t dimension = 0;
  double max_deviation = 0.0;
  double frobenius_deviation = 0.0;
  bool passed = false;
};

// sum E_i^dagger E_i against the identity on the source domain.
IdentityReport check_kraus(const KrausChannel& channel, double tolerance = kOperatorTolerance);
// sum E_i E_i^dagger against the identity on the code domain.
IdentityReport check_unital(const KrausChannel& channel, double tolerance = kOperatorTolerance);

// Encoder and decoder families. Both must be Kraus-complete on their domains
// (InvariantViolation otherwise) and the alphabets must chain.
class CodePair {
 public:
  CodePair(KrausChannel encoder, KrausChannel decoder);

  const KrausChannel& encoder() const noexcept { return encoder_; }
  const KrausChannel& decoder() const noexcept { return decoder_; }

 private:
  KrausChannel encoder_;
  KrausChannel decoder_;
};

// Decoder for a single isometric encoder E: {E^dagger} plus rank-one maps
// |.><f_k| over an orthonormal basis f_k of the complement of E's image.
CodePair lossless_pair(const KrausChannel& encoder);

// sum_i E_i sigma E_i^dagger.
MessageMatrix apply_channel(const KrausChannel& channel, const MessageMatrix& sigma);

// sum_ij |<phi|D_j E_i|phi>|^2.
double fidelity(const ManyLetterVector& phi, const CodePair& pair);
double confidence(const MessageEnsemble& ensemble, const CodePair& pair);
double probability_of_error(const MessageEnsemble& ensemble, const CodePair& pair);

using LengthFunction = std::function<double(const BasisString&)>;
double physical_length(const BasisString& s);

// Tr{sigma I_c} with I_c = log2(dim H_C) sum E_i^dagger L_C E_i, L_C given by
// `length` on code strings.
double encoded_information(const KrausChannel& channel, const MessageMatrix& sigma,
                           const LengthFunction& length = physical_length);

// I_c(sigma) <= I(sigma) + tolerance.
bool is_compressive(const KrausChannel& channel, const MessageMatrix& sigma, double tolerance = kOperatorTolerance);

}  // namespace mlq
