#include "mlq/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <unordered_map>

#include "mlq/basis_string.hpp"
#include "mlq/errors.hpp"
#include "mlq/tolerances.hpp"

namespace mlq {

std::string to_string(LengthMode mode) { return mode == LengthMode::integer ? "integer" : "ideal"; }

LengthMode parse_length_mode(std::string_view text) {
  if (text == "integer") return LengthMode::integer;
  if (text == "ideal") return LengthMode::ideal;
  throw InvalidArgument("unknown length mode '" + std::string(text) + "' (expected integer or ideal)");
}

ClassicalEnsemble::ClassicalEnsemble(std::vector<std::string> symbols, std::vector<double> probabilities, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), probabilities_(std::move(probabilities)), alphabet_size_(alphabet_size) {
  if (symbols_.empty()) throw InvalidArgument("classical ensemble: no symbols");
  if (symbols_.size() != probabilities_.size()) throw InvalidArgument("classical ensemble: symbol and probability counts differ");
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p > 0.0)) throw InvalidArgument("classical ensemble: probabilities must be positive");
    total += p;
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw InvalidArgument("classical ensemble: probabilities do not sum to 1");
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j]) throw InvalidArgument("classical ensemble: duplicate symbol '" + symbols_[i] + "'");
  if (alphabet_size_ == 0) alphabet_size_ = symbols_.size();
  if (alphabet_size_ < symbols_.size()) throw InvalidArgument("classical ensemble: alphabet smaller than the symbol set");
}

ClassicalEnsemble ClassicalEnsemble::from_probabilities(std::vector<double> probabilities) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < probabilities.size(); ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  return ClassicalEnsemble(std::move(names), std::move(probabilities));
}

double ClassicalEnsemble::probability(std::size_t symbol) const {
  if (symbol >= probabilities_.size()) throw InvalidArgument("unknown symbol index " + std::to_string(symbol));
  return probabilities_[symbol];
}

std::size_t ClassicalEnsemble::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return i;
  throw InvalidArgument("unknown symbol '" + std::string(symbol) + "'");
}

Message ClassicalEnsemble::parse(std::string_view text) const {
  const bool single = std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
  Message out;
  if (single) {
    for (char c : text) out.push_back(index_of(std::string_view(&c, 1)));
    return out;
  }
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(index_of(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',') flush();
    else token.push_back(c);
  }
  flush();
  return out;
}

std::string ClassicalEnsemble::format(const Message& message) const {
  const bool single = std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (!single && i) out.push_back(' ');
    out += symbols_.at(message[i]);
  }
  return out;
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double raw_information(const Message& message, const ClassicalEnsemble& ensemble) {
  for (std::size_t s : message) ensemble.probability(s);
  return std::log2(static_cast<double>(ensemble.alphabet_size())) * static_cast<double>(message.size());
}

double core_information(const Message& message, const ClassicalEnsemble& ensemble) {
  double bits = 0.0;
  for (std::size_t s : message) bits -= std::log2(ensemble.probability(s));
  return bits;
}

double mean_core_information(const ClassicalEnsemble& ensemble) {
  double total = 0.0;
  for (std::size_t s = 0; s < ensemble.size(); ++s) total += ensemble.probability(s) * core_information({s}, ensemble);
  return total;
}

PrefixCode::PrefixCode(LengthMode mode, std::vector<std::string> codewords, std::vector<double> lengths)
    : mode_(mode), codewords_(std::move(codewords)), lengths_(std::move(lengths)) {}

PrefixCode PrefixCode::from_codewords(std::vector<std::string> codewords) {
  if (codewords.empty()) throw InvalidArgument("prefix code: no codewords");
  std::vector<double> lengths;
  for (const auto& c : codewords) {
    if (c.find_first_not_of("01") != std::string::npos) throw InvalidArgument("prefix code: codeword '" + c + "' is not binary");
    lengths.push_back(static_cast<double>(c.size()));
  }
  return PrefixCode(LengthMode::integer, std::move(codewords), std::move(lengths));
}

PrefixCode PrefixCode::ideal(std::span<const double> probabilities) {
  if (probabilities.empty()) throw InvalidArgument("prefix code: no symbols");
  std::vector<double> lengths;
  for (double p : probabilities) {
    if (!(p > 0.0)) throw InvalidArgument("prefix code: ideal lengths need positive probabilities");
    lengths.push_back(-std::log2(p));
  }
  return PrefixCode(LengthMode::ideal, {}, std::move(lengths));
}

bool PrefixCode::is_prefix_free() const {
  if (mode_ == LengthMode::ideal) return true;
  std::vector<std::string> sorted = codewords_;
  std::sort(sorted.begin(), sorted.end());
  // In lexicographic order a word that prefixes others is immediately followed by one.
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].compare(0, sorted[i - 1].size(), sorted[i - 1]) == 0) return false;
  return true;
}

double kraft_sum(const PrefixCode& code) {
  double total = 0.0;
  for (double l : code.lengths()) total += std::exp2(-l);
  return total;
}

bool kraft_ok(const PrefixCode& code) { return kraft_sum(code) <= 1.0 + kStateTolerance; }

double expected_length(const PrefixCode& code, std::span<const double> probabilities) {
  if (probabilities.size() != code.size()) throw InvalidArgument("expected length: probability count differs from code size");
  double total = 0.0;
  for (std::size_t i = 0; i < code.size(); ++i) total += probabilities[i] * code.lengths()[i];
  return total;
}

std::vector<std::string> huffman_codewords(std::span<const double> weights) {
  if (weights.empty()) throw InvalidArgument("huffman: no symbols");
  std::vector<std::string> codes(weights.size());
  if (weights.size() == 1) {
    codes[0] = "0";
    return codes;
  }
  struct Node {
    double weight;
    std::size_t min_symbol;
    std::vector<std::size_t> symbols;
  };
  auto later = [](const Node& a, const Node& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.min_symbol > b.min_symbol;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> queue(later);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw InvalidArgument("huffman: negative weight");
    queue.push({weights[i], i, {i}});
  }
  while (queue.size() > 1) {
    Node zero = queue.top();
    queue.pop();
    Node one = queue.top();
    queue.pop();
    for (std::size_t s : zero.symbols) codes[s].insert(codes[s].begin(), '0');
    for (std::size_t s : one.symbols) codes[s].insert(codes[s].begin(), '1');
    Node merged{zero.weight + one.weight, std::min(zero.min_symbol, one.min_symbol), std::move(zero.symbols)};
    merged.symbols.insert(merged.symbols.end(), one.symbols.begin(), one.symbols.end());
    queue.push(std::move(merged));
  }
  return codes;
}

PrefixCode huffman_build(const ClassicalEnsemble& ensemble) {
  return PrefixCode::from_codewords(huffman_codewords(ensemble.probabilities()));
}

std::string symbol_encode(const PrefixCode& code, const Message& message) {
  if (code.mode() != LengthMode::integer) throw InvalidArgument("symbol encode: ideal-mode codes have no codewords");
  std::string out;
  for (std::size_t s : message) {
    if (s >= code.size()) throw InvalidArgument("symbol encode: unknown symbol index " + std::to_string(s));
    out += code.codewords()[s];
  }
  return out;
}

Message symbol_decode(const PrefixCode& code, std::string_view bits) {
  if (code.mode() != LengthMode::integer) throw InvalidArgument("symbol decode: ideal-mode codes have no codewords");
  std::unordered_map<std::string, std::size_t> lookup;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    lookup.emplace(code.codewords()[i], i);
    longest = std::max(longest, code.codewords()[i].size());
  }
  Message out;
  std::string pending;
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    if (bits[pos] != '0' && bits[pos] != '1') throw MalformedInput("symbol decode: non-binary character at position " + std::to_string(pos));
    pending.push_back(bits[pos]);
    if (auto it = lookup.find(pending); it != lookup.end()) {
      out.push_back(it->second);
      pending.clear();
    } else if (pending.size() >= longest) {
      throw MalformedInput("symbol decode: no codeword matches at position " + std::to_string(pos + 1 - pending.size()));
    }
  }
  if (!pending.empty()) throw MalformedInput("symbol decode: trailing partial codeword '" + pending + "'");
  return out;
}

bool TypicalSet::contains(const Message& message) const {
  return std::binary_search(members.begin(), members.end(), message);
}

double TypicalSet::size_upper_bound() const {
  return std::exp2(static_cast<double>(block_length) * (entropy + delta));
}

namespace {

void for_each_composition(std::size_t symbols, std::size_t total, std::vector<std::size_t>& counts, std::size_t pos,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (pos + 1 == symbols) {
    counts[pos] = total;
    visit(counts);
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    counts[pos] = k;
    for_each_composition(symbols, total - k, counts, pos + 1, visit);
  }
}

}  // namespace

TypicalSet typical_set(const ClassicalEnsemble& ensemble, std::size_t block_length, double delta) {
  if (!(delta >= 0.0)) throw InvalidArgument("typical set: delta must be nonnegative");
  guarded_power(ensemble.size(), block_length, kEnumerationGuard);
  TypicalSet out;
  out.block_length = block_length;
  out.delta = delta;
  out.entropy = shannon_entropy(ensemble.probabilities());
  const double n = static_cast<double>(block_length);
  const double lower = -n * (out.entropy + delta);
  const double upper = -n * (out.entropy - delta);

  std::vector<double> logp;
  for (double p : ensemble.probabilities()) logp.push_back(std::log2(p));
  std::vector<std::pair<Message, double>> found;
  std::vector<std::size_t> counts(ensemble.size());
  for_each_composition(ensemble.size(), block_length, counts, 0, [&](const std::vector<std::size_t>& k) {
    double log_prob = 0.0;
    double prob = 1.0;
    for (std::size_t s = 0; s < k.size(); ++s) {
      log_prob += static_cast<double>(k[s]) * logp[s];
      prob *= std::pow(ensemble.probabilities()[s], static_cast<double>(k[s]));
    }
    if (!(lower < log_prob && log_prob < upper)) return;
    Message arrangement;
    for (std::size_t s = 0; s < k.size(); ++s) arrangement.insert(arrangement.end(), k[s], s);
    do {
      found.emplace_back(arrangement, prob);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  });
  std::sort(found.begin(), found.end());
  for (auto& [m, p] : found) {
    out.members.push_back(std::move(m));
    out.probabilities.push_back(p);
    out.total_probability += p;
  }
  return out;
}

BlockCode::BlockCode(ClassicalEnsemble ensemble, TypicalSet typical)
    : ensemble_(std::move(ensemble)), typical_(std::move(typical)), width_(0) {
  while ((std::size_t{1} << width_) < typical_.size()) ++width_;
  for (std::size_t i = 0; i < typical_.members.size(); ++i) index_.emplace(typical_.members[i], i);
  const std::size_t junk = typical_.size() < (std::size_t{1} << width_) ? typical_.size() : 0;
  junk_bits_ = BasisString::from_index(junk, 2, width_).to_string();
  if (width_ == 0) junk_bits_.clear();
}

EncodedBlock BlockCode::encode(const Message& block) const {
  if (block.size() != typical_.block_length) throw InvalidArgument("block code: block length mismatch");
  for (std::size_t s : block) ensemble_.probability(s);
  auto it = index_.find(block);
  if (it == index_.end()) return {junk_bits_, true};
  std::string bits = width_ == 0 ? std::string{} : BasisString::from_index(it->second, 2, width_).to_string();
  return {bits, false};
}

std::optional<Message> BlockCode::decode(const EncodedBlock& encoded) const {
  if (encoded.junk) return std::nullopt;
  if (encoded.bits.size() != width_) throw MalformedInput("block code: codeword width mismatch");
  const std::size_t idx = width_ == 0 ? 0 : BasisString::from_digits(encoded.bits).index(2);
  if (idx >= typical_.members.size()) throw MalformedInput("block code: index outside the typical set");
  return typical_.members[idx];
}

double BlockCode::success_probability() const {
  const std::size_t count = guarded_power(ensemble_.size(), typical_.block_length, kEnumerationGuard);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const BasisString s = BasisString::from_index(i, ensemble_.size(), typical_.block_length);
    Message block(s.begin(), s.end());
    auto decoded = decode(encode(block));
    if (decoded && *decoded == block) {
      double p = 1.0;
      for (std::size_t x : block) p *= ensemble_.probability(x);
      total += p;
    }
  }
  return total;
}

double BlockCode::bits_per_letter() const {
  return typical_.block_length == 0 ? 0.0 : static_cast<double>(width_) / static_cast<double>(typical_.block_length);
}

BlockCode block_code(const ClassicalEnsemble& ensemble, std::size_t block_length, double delta) {
  return BlockCode(ensemble, typical_set(ensemble, block_length, delta));
}

}  // namespace mlq
