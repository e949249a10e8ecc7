#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlq {

// A classical message: symbol indices into an ensemble.
using Message = std::vector<std::size_t>;

// How codeword lengths are tracked: realizable integer codewords, or the real
// "ideal" lengths -log2 p with no materialized bits.
enum class LengthMode { integer, ideal };

std::string to_string(LengthMode mode);
LengthMode parse_length_mode(std::string_view text);

// Symbols with strictly positive probabilities summing to one. The alphabet
// size used for raw information defaults to the number of symbols.
class ClassicalEnsemble {
 public:
  ClassicalEnsemble(std::vector<std::string> symbols, std::vector<double> probabilities, std::size_t alphabet_size = 0);
  // Symbols named a, b, c, ... (s26, s27, ... beyond z).
  static ClassicalEnsemble from_probabilities(std::vector<double> probabilities);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  double probability(std::size_t symbol) const;
  std::size_t index_of(std::string_view symbol) const;

  // Single-character symbols parse character by character; otherwise symbols
  // are separated by spaces or commas.
  Message parse(std::string_view text) const;
  std::string format(const Message& message) const;

 private:
  std::vector<std::string> symbols_;
  std::vector<double> probabilities_;
  std::size_t alphabet_size_;
};

double shannon_entropy(std::span<const double> probabilities);

// log2|A| * length, in bits. Throws InvalidArgument on unknown symbols.
double raw_information(const Message& message, const ClassicalEnsemble& ensemble);

// -log2 p(message) with p(message) the product of the symbol probabilities.
double core_information(const Message& message, const ClassicalEnsemble& ensemble);
// Ensemble average of the single-symbol core information (equals the entropy).
double mean_core_information(const ClassicalEnsemble& ensemble);

// Binary symbol code. Integer mode holds codewords over {0,1}; ideal mode
// holds only real lengths.
class PrefixCode {
 public:
  static PrefixCode from_codewords(std::vector<std::string> codewords);
  static PrefixCode ideal(std::span<const double> probabilities);

  LengthMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  // Empty in ideal mode.
  const std::vector<std::string>& codewords() const noexcept { return codewords_; }
  const std::vector<double>& lengths() const noexcept { return lengths_; }

  bool is_prefix_free() const;

 private:
  PrefixCode(LengthMode mode, std::vector<std::string> codewords, std::vector<double> lengths);

  LengthMode mode_;
  std::vector<std::string> codewords_;
  std::vector<double> lengths_;
};

// sum 2^{-L(x)}.
double kraft_sum(const PrefixCode& code);
bool kraft_ok(const PrefixCode& code);
double expected_length(const PrefixCode& code, std::span<const double> probabilities);

// Huffman code with deterministic tie-breaking: nodes are ordered by
// (weight, smallest contained symbol index) and the first node popped at each
// merge takes branch bit 0. A single symbol gets codeword "0".
PrefixCode huffman_build(const ClassicalEnsemble& ensemble);
// Same construction over nonnegative weights (zero weights allowed).
std::vector<std::string> huffman_codewords(std::span<const double> weights);

std::string symbol_encode(const PrefixCode& code, const Message& message);
// Left-to-right decoding; MalformedInput on an unknown or trailing partial codeword.
Message symbol_decode(const PrefixCode& code, std::string_view bits);

// Strings x^N with 2^{-N(H+delta)} < p(x^N) < 2^{-N(H-delta)} (strict).
struct TypicalSet {
  std::size_t block_length = 0;
  double delta = 0.0;
  double entropy = 0.0;
  std::vector<Message> members;  // lexicographic
  std::vector<double> probabilities;
  double total_probability = 0.0;

  bool contains(const Message& message) const;
  std::size_t size() const noexcept { return members.size(); }
  // The Shannon upper bound 2^{N(H+delta)} on the member count.
  double size_upper_bound() const;
};

// Exact enumeration by symbol composition. GuardExceeded if |A|^N > kEnumerationGuard.
TypicalSet typical_set(const ClassicalEnsemble& ensemble, std::size_t block_length, double delta);

struct EncodedBlock {
  std::string bits;
  bool junk = false;
};

// Typical blocks map to distinct binary indices of width ceil(log2|T|);
// untypical blocks map to a designated junk index and carry the junk flag.
class BlockCode {
 public:
  BlockCode(ClassicalEnsemble ensemble, TypicalSet typical);

  std::size_t width() const noexcept { return width_; }
  const TypicalSet& typical() const noexcept { return typical_; }
  const std::string& junk_bits() const noexcept { return junk_bits_; }

  EncodedBlock encode(const Message& block) const;
  // nullopt for junk.
  std::optional<Message> decode(const EncodedBlock& encoded) const;
  // sum p(x) over blocks that survive the round trip, by enumeration.
  double success_probability() const;
  // width / N.
  double bits_per_letter() const;

 private:
  ClassicalEnsemble ensemble_;
  TypicalSet typical_;
  std::size_t width_;
  std::string junk_bits_;
  std::map<Message, std::size_t> index_;
};

BlockCode block_code(const ClassicalEnsemble& ensemble, std::size_t block_length, double delta);

}  // namespace mlq
