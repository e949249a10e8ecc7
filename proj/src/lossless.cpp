#include "mlq/lossless.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mlq/errors.hpp"

namespace mlq {
namespace {

constexpr double kPrune = 1e-14;

BasisString bits_of(const std::string& digits) { return BasisString::from_digits(digits.empty() ? "-" : digits); }

std::string digits_of(const BasisString& s) {
  std::string out;
  for (auto l : s) out.push_back(static_cast<char>('0' + l));
  return out;
}

ManyLetterVector in_alphabet(const ManyLetterVector& v, const AlphabetPtr& target, const char* what) {
  if (same_alphabet(v.alphabet(), target)) return v;
  if (!v.alphabet()->same_letter_space(*target)) throw AlphabetMismatch(std::string(what) + ": alphabet mismatch");
  return express_in(v, target);
}

MessageMatrix in_alphabet(const MessageMatrix& sigma, const AlphabetPtr& target, const char* what) {
  if (same_alphabet(sigma.alphabet(), target)) return sigma;
  if (!sigma.alphabet()->same_letter_space(*target)) throw AlphabetMismatch(std::string(what) + ": alphabet mismatch");
  return express_in(sigma, target);
}

// phi - sum_i <e_i|phi> e_i.
ManyLetterVector complement_part(const std::vector<EigenPair>& pairs, const ManyLetterVector& phi) {
  ManyLetterVector out = phi;
  for (const auto& p : pairs) {
    const Complex c = inner_product(p.eigenvector.amplitudes(), phi.amplitudes());
    if (c != Complex{}) out -= c * p.eigenvector;
  }
  return out;
}

double weighted_length(const ManyLetterVector& v, const std::function<double(std::size_t)>& f) {
  double total = 0.0;
  for (const auto& [s, a] : v.amplitudes()) total += f(s.size()) * std::norm(a);
  return total;
}

}  // namespace

double QuantumSymbolCode::mean_length() const {
  double total = 0.0;
  for (Eigen::Index a = 0; a < spectrum.eigenvalues.size(); ++a) total += spectrum.eigenvalues(a) * lengths[static_cast<std::size_t>(a)];
  return total;
}

double QuantumSymbolCode::code_length(const BasisString& code_string) const {
  if (code_string.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t a : symbol_decode(PrefixCode::from_codewords(codewords), digits_of(code_string))) total += lengths[a];
  return total;
}

QuantumSymbolCode build_symbol_code(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho, LengthMode mode) {
  if (static_cast<std::size_t>(rho.rows()) != alphabet->basis_dim())
    throw InvalidArgument("symbol code: letter matrix dimension differs from the alphabet's basis dimension");
  validate_letter_matrix(rho, kStateTolerance);
  QuantumSymbolCode code;
  code.source_alphabet = alphabet;
  code.spectrum = letter_spectrum(rho);
  if (code.spectrum.rank() == 0) throw InvalidArgument("symbol code: letter matrix has rank 0");
  code.eigen_alphabet = alphabet->rebased(code.spectrum.eigenvectors);
  code.code_alphabet = QuantumAlphabet::orthonormal(2);
  code.mode = mode;
  const Eigen::VectorXd& q = code.spectrum.eigenvalues;
  code.codewords = huffman_codewords(std::vector<double>(q.data(), q.data() + q.size()));
  for (std::size_t a = 0; a < code.codewords.size(); ++a) {
    const double qa = q(static_cast<Eigen::Index>(a));
    code.lengths.push_back(mode == LengthMode::ideal && qa > 0.0 ? -std::log2(qa) : static_cast<double>(code.codewords[a].size()));
  }
  return code;
}

KrausChannel symbol_encoder(const QuantumSymbolCode& code, const TruncationConfig& trunc) {
  std::size_t longest = 0;
  for (const auto& c : code.codewords) longest = std::max(longest, c.size());
  require_within(longest * trunc.max_length, trunc.code_limit(), "symbol code concatenation");
  const auto source_lengths = lengths_up_to(trunc.max_length);
  SparseOperator op;
  for (const auto& s : strings_with_lengths(code.eigen_alphabet->basis_dim(), source_lengths)) {
    std::string bits;
    for (auto l : s) bits += code.codewords[l];
    op[s] = Amplitudes{{bits_of(bits), Complex{1.0, 0.0}}};
  }
  return KrausChannel("symbol encoder", code.eigen_alphabet, code.code_alphabet, {std::move(op)}, source_lengths,
                      lengths_up_to(longest * trunc.max_length));
}

GrandCompression compress_grand_canonical(const std::vector<double>& lambdas, const QuantumSymbolCode& code,
                                          const TruncationConfig& trunc) {
  const Eigen::VectorXd& q = code.spectrum.eigenvalues;
  const Eigen::MatrixXcd diag = q.cast<Complex>().asDiagonal();
  const MessageMatrix sigma = grand_canonical(code.eigen_alphabet, lambdas, diag, trunc);
  const KrausChannel encoder = symbol_encoder(code, trunc);

  GrandCompression out;
  double mean_n = 0.0;
  for (std::size_t n = 0; n < lambdas.size(); ++n) mean_n += lambdas[n] * static_cast<double>(n);
  out.information = raw_information(sigma);
  out.encoded_information = mean_n * code.mean_length();
  out.measured_information =
      encoded_information(encoder, sigma, [&code](const BasisString& c) { return code.code_length(c); });
  out.entropy = von_neumann_entropy(sigma);
  out.sector_entropy = mean_n * shannon_entropy(std::vector<double>(q.data(), q.data() + q.size()));
  out.length_entropy = shannon_entropy(lambdas);
  return out;
}

double GeneralLosslessCode::complement_length(std::size_t n) const {
  if (mode == LengthMode::ideal) return static_cast<double>(n) * source_alphabet->log2_dim();
  return static_cast<double>(escape.size() + letter_width * n);
}

ManyLetterVector GeneralLosslessCode::project(const ManyLetterVector& phi_in) const {
  const ManyLetterVector phi = in_alphabet(phi_in, source_alphabet, "projection");
  ManyLetterVector out(source_alphabet);
  for (const auto& c : codebook) {
    const Complex a = inner_product(c.eigenvector.amplitudes(), phi.amplitudes());
    if (a != Complex{}) out += a * c.eigenvector;
  }
  return out;
}

GeneralLosslessCode build_general_code(const MessageMatrix& sigma, LengthMode mode, const TruncationConfig& trunc) {
  const AlphabetPtr& alphabet = sigma.alphabet();
  std::vector<EigenPair> pairs = diagonalize(sigma, kEigenCutoff);
  if (pairs.empty()) throw InvalidArgument("general code: no eigenvalue survives the cutoff");
  require_within(sigma.max_length(), trunc.max_length, "general code source support");

  std::vector<double> q;
  for (const auto& p : pairs) q.push_back(p.eigenvalue);
  const std::vector<std::string> words = pairs.size() == 1 ? std::vector<std::string>{""} : huffman_codewords(q);
  std::size_t shortest = 0;
  for (std::size_t i = 1; i < words.size(); ++i)
    if (words[i].size() < words[shortest].size()) shortest = i;
  const BasisString escape = bits_of(words[shortest] + "0");

  std::size_t width = 1;
  while ((std::size_t{1} << width) < alphabet->basis_dim()) ++width;
  auto translated = [&](const BasisString& s) {
    BasisString out = escape;
    for (auto l : s) out = out + BasisString::from_index(l, 2, width);
    return out;
  };

  std::vector<LosslessCodeword> codebook;
  std::set<std::size_t> code_lengths;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double len = mode == LengthMode::ideal ? (pairs.size() == 1 ? 0.0 : -std::log2(q[i])) : static_cast<double>(words[i].size());
    codebook.push_back({q[i], pairs[i].eigenvector, bits_of(words[i]), len});
    code_lengths.insert(words[i].size());
  }
  const auto source_lengths = lengths_up_to(trunc.max_length);
  for (std::size_t n : source_lengths) code_lengths.insert(escape.size() + width * n);
  require_within(*code_lengths.rbegin(), trunc.code_limit(), "general code length");

  // T e_i over escape-prefixed strings.
  std::vector<Amplitudes> translated_eigen;
  for (const auto& c : codebook) {
    Amplitudes t;
    for (const auto& [s, a] : c.eigenvector.amplitudes()) t[translated(s)] += a;
    translated_eigen.push_back(std::move(t));
  }

  SparseOperator op;
  for (const auto& s : strings_with_lengths(alphabet->basis_dim(), source_lengths)) {
    Amplitudes col{{translated(s), Complex{1.0, 0.0}}};
    for (std::size_t i = 0; i < codebook.size(); ++i) {
      const Complex overlap = std::conj(codebook[i].eigenvector.amplitude(s));
      if (overlap == Complex{}) continue;
      col[codebook[i].codeword] += overlap;
      for (const auto& [t, a] : translated_eigen[i]) col[t] -= overlap * a;
    }
    for (auto it = col.begin(); it != col.end();) it = std::abs(it->second) <= kPrune ? col.erase(it) : std::next(it);
    if (!col.empty()) op[s] = std::move(col);
  }
  const AlphabetPtr qubits = QuantumAlphabet::orthonormal(2);
  KrausChannel encoder("general lossless encoder", alphabet, qubits, {std::move(op)}, source_lengths,
                       std::vector<std::size_t>(code_lengths.begin(), code_lengths.end()));
  return GeneralLosslessCode{alphabet, qubits, mode, std::move(codebook), escape, width, std::move(encoder)};
}

ManyLetterVector encode(const GeneralLosslessCode& code, const ManyLetterVector& phi) { return encode(code.encoder, phi); }

DecodeResult decode(const GeneralLosslessCode& code, const ManyLetterVector& coded) { return decode(code.encoder, coded); }

ManyLetterVector encode(const KrausChannel& channel, const ManyLetterVector& phi) {
  if (channel.operators().size() != 1) throw InvalidArgument(channel.name() + ": lossless encoding needs a single Kraus operator");
  return channel.apply(0, phi);
}

DecodeResult decode(const KrausChannel& channel, const ManyLetterVector& coded) {
  if (channel.operators().size() != 1) throw InvalidArgument(channel.name() + ": lossless decoding needs a single Kraus operator");
  DecodeResult out{channel.apply_adjoint(0, coded), 0.0};
  const ManyLetterVector back = channel.apply(0, out.message);
  const ManyLetterVector w = same_alphabet(coded.alphabet(), channel.code()) ? coded : express_in(coded, channel.code());
  out.residual_norm = (w - back).norm();
  return out;
}

double encoded_information_general(const GeneralLosslessCode& code, const MessageMatrix& sigma_in) {
  const MessageMatrix sigma = in_alphabet(sigma_in, code.source_alphabet, "encoded information");
  std::vector<EigenPair> basis;
  for (const auto& c : code.codebook) basis.push_back({c.eigenvalue, c.eigenvector});
  const auto f = [&code](std::size_t n) { return code.complement_length(n); };
  double total = 0.0;
  for (const auto& c : code.codebook) total += c.length * sigma.expectation(c.eigenvector);
  for (const auto& p : diagonalize(sigma, 0.0)) total += p.eigenvalue * weighted_length(complement_part(basis, p.eigenvector), f);
  return total;
}

CoreInformationObservable::CoreInformationObservable(AlphabetPtr alphabet, std::vector<EigenPair> pairs)
    : alphabet_(std::move(alphabet)), pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!(pairs_[i].eigenvalue > 0.0 && pairs_[i].eigenvalue <= 1.0 + kStateTolerance))
      throw InvalidArgument("core information: eigenvalues must lie in (0, 1]");
    require_same_alphabet(alphabet_, pairs_[i].eigenvector.alphabet(), "core information");
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = inner_product(pairs_[j].eigenvector, pairs_[i].eigenvector);
      if (std::abs(g - (i == j ? Complex{1.0, 0.0} : Complex{})) > kOperatorTolerance)
        throw InvalidArgument("core information: eigenvectors are not orthonormal");
    }
  }
}

CoreInformationObservable CoreInformationObservable::from_matrix(const MessageMatrix& sigma, double cutoff) {
  return CoreInformationObservable(sigma.alphabet(), diagonalize(sigma, cutoff));
}

double core_information(const CoreInformationObservable& obs, const ManyLetterVector& phi_in) {
  const ManyLetterVector phi = in_alphabet(phi_in, obs.alphabet(), "core information");
  double total = 0.0;
  for (const auto& p : obs.pairs())
    total -= std::log2(p.eigenvalue) * std::norm(inner_product(p.eigenvector.amplitudes(), phi.amplitudes()));
  const double per_letter = obs.alphabet()->log2_dim();
  total += weighted_length(complement_part(obs.pairs(), phi), [per_letter](std::size_t n) { return per_letter * static_cast<double>(n); });
  return total;
}

double core_information(const CoreInformationObservable& obs, const MessageMatrix& rho_in) {
  const MessageMatrix rho = in_alphabet(rho_in, obs.alphabet(), "core information");
  double total = 0.0;
  for (const auto& p : diagonalize(rho, 0.0)) total += p.eigenvalue * core_information(obs, p.eigenvector);
  return total;
}

}  // namespace mlq
