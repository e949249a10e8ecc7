#include "mlq/translation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mlq/errors.hpp"

namespace mlq {

BlockTranslator::BlockTranslator(AlphabetPtr source, AlphabetPtr code, std::size_t source_block, std::size_t code_block)
    : source_(std::move(source)), code_(std::move(code)), n_(source_block), m_(code_block) {
  if (n_ == 0 || m_ == 0) throw InvalidArgument("translator: block lengths must be positive");
  const std::size_t need = guarded_power(source_->basis_dim(), n_, kEnumerationGuard);
  // Saturating count of code blocks: only whether it reaches `need` matters.
  std::size_t have = 1;
  for (std::size_t k = 0; k < m_ && have < need; ++k) have *= code_->basis_dim();
  if (have < need) throw InvalidArgument("translator: code blocks cannot hold every source block");
}

double BlockTranslator::rate() const { return static_cast<double>(m_) / static_cast<double>(n_); }

double BlockTranslator::information_factor() const {
  if (source_->basis_dim() == 1) return std::numeric_limits<double>::quiet_NaN();
  return rate() * code_->log2_dim() / source_->log2_dim();
}

bool BlockTranslator::ideal_rate() const {
  const std::size_t need = guarded_power(source_->basis_dim(), n_, kEnumerationGuard);
  std::size_t have = 1;
  for (std::size_t k = 0; k < m_; ++k) {
    have *= code_->basis_dim();
    if (have > need) return false;
  }
  return have == need;
}

BasisString BlockTranslator::translate_block(const BasisString& block) const {
  if (block.size() != n_) throw DomainError("translator: block has the wrong length");
  return BasisString::from_index(block.index(source_->basis_dim()), code_->basis_dim(), m_);
}

BasisString BlockTranslator::translate(const BasisString& s) const {
  if (s.size() % n_ != 0)
    throw DomainError("translator: string " + s.to_string() + " is not aligned to blocks of " + std::to_string(n_));
  BasisString out;
  for (std::size_t pos = 0; pos < s.size(); pos += n_) out = out + translate_block(s.substr(pos, n_));
  return out;
}

std::string BlockTranslator::table() const {
  std::ostringstream os;
  for (const auto& block : all_strings(source_->basis_dim(), n_)) os << block.to_string() << '\t' << translate_block(block).to_string() << '\n';
  return os.str();
}

BlockTranslator build_translator(const AlphabetPtr& source, const AlphabetPtr& code, std::size_t source_block) {
  if (source_block == 0) throw InvalidArgument("translator: block length must be positive");
  if (code->basis_dim() < 2 && source->basis_dim() > 1) throw InvalidArgument("translator: a one-dimensional code space cannot translate");
  const std::size_t need = guarded_power(source->basis_dim(), source_block, kEnumerationGuard);
  std::size_t m = 1;
  for (std::size_t have = code->basis_dim(); have < need; have *= code->basis_dim()) ++m;
  return BlockTranslator(source, code, source_block, m);
}

KrausChannel message_translator(const BlockTranslator& t, const TruncationConfig& trunc) {
  std::vector<std::size_t> source_lengths;
  std::vector<std::size_t> code_lengths;
  for (std::size_t n = 0; n <= trunc.max_length; n += t.source_block()) {
    source_lengths.push_back(n);
    code_lengths.push_back(n / t.source_block() * t.code_block());
  }
  require_within(code_lengths.back(), trunc.code_limit(), "translator code length");
  SparseOperator op;
  for (const auto& s : strings_with_lengths(t.source()->basis_dim(), source_lengths))
    op[s] = Amplitudes{{t.translate(s), Complex{1.0, 0.0}}};
  return KrausChannel("translator", t.source(), t.code(), {std::move(op)}, std::move(source_lengths), std::move(code_lengths));
}

ManyLetterVector translate(const BlockTranslator& t, const ManyLetterVector& v) {
  ManyLetterVector x = v;
  if (!same_alphabet(v.alphabet(), t.source())) {
    if (!v.alphabet()->same_letter_space(*t.source())) throw AlphabetMismatch("translate: alphabet mismatch");
    x = express_in(v, t.source());
  }
  Amplitudes out;
  for (const auto& [s, a] : x.amplitudes()) out[t.translate(s)] += a;
  return ManyLetterVector(t.code(), std::move(out));
}

TranslationAudit translation_information_audit(const BlockTranslator& t, const MessageMatrix& sigma, const TruncationConfig& trunc) {
  for (const auto& s : sigma.support())
    if (s.size() % t.source_block() != 0)
      throw DomainError("translation audit: support string " + s.to_string() + " is not block aligned");
  const KrausChannel channel = message_translator(t, trunc);
  TranslationAudit a;
  a.information = raw_information(sigma);
  a.encoded_information = encoded_information(channel, sigma);
  a.ratio = a.information == 0.0 ? std::numeric_limits<double>::quiet_NaN() : a.encoded_information / a.information;
  a.predicted_factor = t.information_factor();
  return a;
}

}  // namespace mlq
