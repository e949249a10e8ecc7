#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mlq/channel.hpp"

namespace mlq {

// Injective map from source basis blocks of N letters to code basis blocks of
// M letters, pairing both in lexicographic order.
class BlockTranslator {
 public:
  BlockTranslator(AlphabetPtr source, AlphabetPtr code, std::size_t source_block, std::size_t code_block);

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& code() const noexcept { return code_; }
  std::size_t source_block() const noexcept { return n_; }
  std::size_t code_block() const noexcept { return m_; }
  // R = M / N.
  double rate() const;
  // R log2 dim H_C / log2 dim H_Q, the factor relating encoded to raw information.
  double information_factor() const;
  // (dim H_C)^M == (dim H_Q)^N.
  bool ideal_rate() const;

  BasisString translate_block(const BasisString& block) const;
  // Blockwise translation; DomainError when the length is not a multiple of N.
  BasisString translate(const BasisString& s) const;

  // One "source<TAB>code" line per source block.
  std::string table() const;

 private:
  AlphabetPtr source_;
  AlphabetPtr code_;
  std::size_t n_;
  std::size_t m_;
};

// Minimal M with (dim H_C)^M >= (dim H_Q)^N, M >= 1.
BlockTranslator build_translator(const AlphabetPtr& source, const AlphabetPtr& code, std::size_t source_block);

// The single-operator channel T on all aligned strings up to trunc.max_length.
KrausChannel message_translator(const BlockTranslator& t, const TruncationConfig& trunc);

// T|v>; DomainError for unaligned support.
ManyLetterVector translate(const BlockTranslator& t, const ManyLetterVector& v);

struct TranslationAudit {
  double information = 0.0;
  double encoded_information = 0.0;
  double ratio = 0.0;  // NaN when the raw information is zero
  double predicted_factor = 0.0;
};

TranslationAudit translation_information_audit(const BlockTranslator& t, const MessageMatrix& sigma, const TruncationConfig& trunc);

}  // namespace mlq
