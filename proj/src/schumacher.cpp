#include "mlq/schumacher.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mlq/errors.hpp"

namespace mlq {
namespace {

const BasisString kEmpty{};

void check_rho(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho) {
  if (static_cast<std::size_t>(rho.rows()) != alphabet->basis_dim())
    throw InvalidArgument("letter matrix dimension differs from the alphabet's basis dimension");
  validate_letter_matrix(rho, kStateTolerance);
}

std::size_t minimal_rate(std::size_t needed, std::size_t code_dim) {
  if (needed <= 1) return 0;
  if (code_dim < 2) throw InvalidArgument("code alphabet of dimension 1 cannot hold more than one codeword");
  std::size_t r = 0;
  for (std::size_t have = 1; have < needed; have *= code_dim) ++r;
  return r;
}

BasisString as_basis_string(const Message& m) {
  std::vector<BasisString::Letter> letters(m.begin(), m.end());
  return BasisString(std::move(letters));
}

struct Typical {
  std::vector<BasisString> basis;
  std::vector<double> probabilities;
  double total = 0.0;
};

Typical typical_strings(const LetterSpectrum& spec, std::size_t n, double delta) {
  Typical out;
  if (n == 0) {
    out.basis.push_back(kEmpty);
    out.probabilities.push_back(1.0);
    out.total = 1.0;
    return out;
  }
  const TypicalSet ts = typical_set(ClassicalEnsemble::from_probabilities(spec.positive_distribution()), n, delta);
  for (const auto& m : ts.members) out.basis.push_back(as_basis_string(m));
  out.probabilities = ts.probabilities;
  out.total = ts.total_probability;
  return out;
}

}  // namespace

MessageEnsemble canonical_ensemble(const LetterEnsemble& letters, std::size_t block_length) {
  const std::size_t k = letters.alphabet->letter_count();
  if (letters.probabilities.size() != k) throw InvalidArgument("letter ensemble: probability count differs from letter count");
  const std::size_t count = guarded_power(k, block_length, kEnumerationGuard);
  std::vector<MessageEnsemble::Member> members;
  for (std::size_t i = 0; i < count; ++i) {
    const BasisString s = BasisString::from_index(i, k, block_length);
    double p = 1.0;
    for (auto l : s) p *= letters.probabilities[l];
    if (p == 0.0) continue;
    members.push_back({p, ManyLetterVector::product(letters.alphabet, std::vector<std::size_t>(s.begin(), s.end()))});
  }
  return MessageEnsemble(letters.alphabet, std::move(members));
}

bool QuantumTypicalSubspace::contains(const BasisString& s) const { return std::binary_search(basis.begin(), basis.end(), s); }

double QuantumTypicalSubspace::projection_norm_squared(const ManyLetterVector& x) const {
  const ManyLetterVector y = express_in(x, eigen_alphabet);
  double total = 0.0;
  for (const auto& [s, a] : y.amplitudes())
    if (contains(s)) total += std::norm(a);
  return total;
}

QuantumTypicalSubspace quantum_typical_subspace(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho,
                                                std::size_t block_length, double delta) {
  check_rho(alphabet, rho);
  if (block_length == 0) throw InvalidArgument("typical subspace: block length must be positive");
  QuantumTypicalSubspace out;
  out.block_length = block_length;
  out.delta = delta;
  out.spectrum = letter_spectrum(rho);
  out.eigen_alphabet = alphabet->rebased(out.spectrum.eigenvectors);
  Typical t = typical_strings(out.spectrum, block_length, delta);
  out.basis = std::move(t.basis);
  out.probabilities = std::move(t.probabilities);
  out.total_probability = t.total;
  return out;
}

std::size_t SchumacherCode::untypical_count() const {
  return guarded_power(typical.eigen_alphabet->basis_dim(), typical.block_length, kEnumerationGuard) - typical.dimension();
}

SchumacherCode build_schumacher(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho, std::size_t block_length,
                                double delta, const AlphabetPtr& code_alphabet, const TruncationConfig& trunc) {
  require_within(block_length, trunc.max_length, "Schumacher block length");
  QuantumTypicalSubspace typical = quantum_typical_subspace(alphabet, rho, block_length, delta);
  const std::size_t d = typical.eigen_alphabet->basis_dim();
  const std::size_t dc = code_alphabet->basis_dim();
  const std::size_t total = guarded_power(d, block_length, kEnumerationGuard);
  const bool has_junk = typical.dimension() < total;
  const std::size_t rate = minimal_rate(typical.dimension() + (has_junk ? 1 : 0), dc);
  require_within(rate, trunc.code_limit(), "Schumacher code length");

  std::vector<BasisString> codewords;
  SparseOperator encode_typical;
  SparseOperator decode_typical;
  for (std::size_t k = 0; k < typical.dimension(); ++k) {
    codewords.push_back(BasisString::from_index(k, dc, rate));
    encode_typical[typical.basis[k]][codewords.back()] = 1.0;
    decode_typical[codewords.back()][typical.basis[k]] = 1.0;
  }
  std::optional<BasisString> junk;
  if (has_junk) junk = BasisString::from_index(typical.dimension(), dc, rate);

  std::vector<SparseOperator> encoders{std::move(encode_typical)};
  for (const auto& a : all_strings(d, block_length))
    if (!typical.contains(a)) encoders.push_back(SparseOperator{{a, Amplitudes{{*junk, Complex{1.0, 0.0}}}}});
  std::vector<SparseOperator> decoders{std::move(decode_typical)};
  const std::size_t code_count = guarded_power(dc, rate, kEnumerationGuard);
  for (std::size_t k = typical.dimension(); k < code_count; ++k)
    decoders.push_back(SparseOperator{{BasisString::from_index(k, dc, rate), Amplitudes{{kEmpty, Complex{1.0, 0.0}}}}});

  KrausChannel encoder("schumacher encoder", typical.eigen_alphabet, code_alphabet, std::move(encoders), {block_length}, {rate});
  KrausChannel decoder("schumacher decoder", code_alphabet, typical.eigen_alphabet, std::move(decoders), {rate},
                       {0, block_length});
  const double ideal = typical.dimension() == 0 || dc < 2
                           ? 0.0
                           : std::log2(static_cast<double>(typical.dimension())) / code_alphabet->log2_dim();
  return SchumacherCode{std::move(typical), alphabet, rho,  code_alphabet, rate, ideal, std::move(codewords),
                        junk,               CodePair(std::move(encoder), std::move(decoder))};
}

SchumacherConfidence schumacher_confidence(const SchumacherCode& code, const LetterEnsemble& letters) {
  const auto& eigen = code.typical.eigen_alphabet;
  if (!letters.alphabet->same_letter_space(*code.source_alphabet))
    throw AlphabetMismatch("Schumacher confidence: letters live in a different letter space");
  // rho of the letters, in the code's basis-letter coordinates.
  const Eigen::MatrixXcd change = code.source_alphabet->basis().adjoint() * letters.alphabet->basis();
  const Eigen::MatrixXcd rho = change * letters.letter_matrix() * change.adjoint();
  if ((rho - code.rho).cwiseAbs().maxCoeff() > kOperatorTolerance)
    throw InvalidArgument("Schumacher confidence: letter ensemble does not reproduce the code's letter matrix");

  const std::size_t k = letters.alphabet->letter_count();
  const std::size_t d = eigen->basis_dim();
  // overlap(i, a) = |<e_a|x_i>|^2
  Eigen::MatrixXd overlap(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::VectorXcd c = eigen->basis().adjoint() * letters.alphabet->letters()[i];
    for (std::size_t a = 0; a < d; ++a) overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) = std::norm(c(static_cast<Eigen::Index>(a)));
  }
  const std::size_t n = code.typical.block_length;
  const std::size_t count = guarded_power(k, n, kEnumerationGuard);
  SchumacherConfidence out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const BasisString x = BasisString::from_index(idx, k, n);
    double p = 1.0;
    for (auto l : x) p *= letters.probabilities[l];
    if (p == 0.0) continue;
    double proj = 0.0;
    for (const auto& a : code.typical.basis) {
      double w = 1.0;
      for (std::size_t pos = 0; pos < n && w != 0.0; ++pos) w *= overlap(x[pos], a[pos]);
      proj += w;
    }
    out.confidence += p * proj * proj;
  }
  out.total_probability = code.typical.total_probability;
  out.bound = 2.0 * out.total_probability - 1.0;
  return out;
}

SchumacherInformation schumacher_information(const SchumacherCode& code) {
  SchumacherInformation out;
  const double pt = code.typical.total_probability;
  out.information = static_cast<double>(code.typical.block_length) * code.source_alphabet->log2_dim();
  out.physical = static_cast<double>(code.rate) * code.code_alphabet->log2_dim();
  out.discarded_junk = out.physical * pt;
  out.ideal = code.typical.dimension() == 0 ? 0.0 : std::log2(static_cast<double>(code.typical.dimension())) * pt;
  return out;
}

double GrandSchumacherCode::total_probability() const {
  double total = 0.0;
  for (const auto& s : sectors) total += s.weight * s.total_probability;
  return total;
}

double GrandSchumacherCode::encoded_information() const {
  double total = 0.0;
  for (const auto& s : sectors) total += s.weight * static_cast<double>(s.rate) * s.total_probability;
  return total * code_alphabet->log2_dim();
}

GrandSchumacherCode generalized_schumacher(const AlphabetPtr& alphabet, const std::vector<double>& lambdas,
                                           const Eigen::MatrixXcd& rho, double delta, const AlphabetPtr& code_alphabet,
                                           const TruncationConfig& trunc) {
  check_rho(alphabet, rho);
  double sum = 0.0;
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    if (!(lambdas[n] >= 0.0)) throw InvalidArgument("generalized Schumacher: negative length weight");
    if (lambdas[n] > 0.0) require_within(n, trunc.max_length, "generalized Schumacher length distribution");
    sum += lambdas[n];
  }
  if (std::abs(sum - 1.0) > kStateTolerance) throw InvalidArgument("generalized Schumacher: length weights do not sum to 1");

  const LetterSpectrum spectrum = letter_spectrum(rho);
  const AlphabetPtr eigen = alphabet->rebased(spectrum.eigenvectors);
  std::vector<GrandSchumacherSector> sectors;
  std::map<BasisString, BasisString> codebook;
  const std::size_t d = alphabet->basis_dim();
  const std::size_t dc = code_alphabet->basis_dim();

  std::map<std::size_t, std::size_t> used;  // codewords taken per code length
  SparseOperator encode_typical;
  SparseOperator decode_typical;
  std::set<std::size_t> code_lengths{0};
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    if (lambdas[n] == 0.0) continue;
    Typical t = typical_strings(spectrum, n, delta);
    GrandSchumacherSector sector{n, lambdas[n], 0, t.basis.size(), t.total};
    if (!t.basis.empty()) {
      // The empty code string is reserved for the empty message.
      std::size_t r = std::max<std::size_t>(minimal_rate(t.basis.size(), dc), n == 0 ? 0 : 1);
      auto capacity = [&](std::size_t len) { return guarded_power(dc, len, kEnumerationGuard); };
      if (dc < 2 && n > 0) throw InvalidArgument("generalized Schumacher: code alphabet of dimension 1");
      while (capacity(r) - used[r] < t.basis.size()) {
        ++r;
        require_within(r, trunc.code_limit(), "generalized Schumacher code length");
      }
      require_within(r, trunc.code_limit(), "generalized Schumacher code length");
      for (std::size_t k = 0; k < t.basis.size(); ++k) {
        const BasisString c = BasisString::from_index(used[r] + k, dc, r);
        encode_typical[t.basis[k]][c] = 1.0;
        decode_typical[c][t.basis[k]] = 1.0;
        codebook.emplace(t.basis[k], c);
      }
      used[r] += t.basis.size();
      sector.rate = r;
      code_lengths.insert(r);
    }
    sectors.push_back(sector);
  }

  const std::vector<std::size_t> source_lengths = lengths_up_to(trunc.max_length);
  std::vector<SparseOperator> encoders{std::move(encode_typical)};
  for (const auto& a : strings_with_lengths(d, source_lengths))
    if (!codebook.count(a)) encoders.push_back(SparseOperator{{a, Amplitudes{{kEmpty, Complex{1.0, 0.0}}}}});
  const std::vector<std::size_t> code_len(code_lengths.begin(), code_lengths.end());
  std::set<BasisString> assigned;
  for (const auto& [a, c] : codebook) assigned.insert(c);
  std::vector<SparseOperator> decoders{std::move(decode_typical)};
  for (const auto& c : strings_with_lengths(dc, code_len))
    if (!assigned.count(c)) decoders.push_back(SparseOperator{{c, Amplitudes{{kEmpty, Complex{1.0, 0.0}}}}});

  KrausChannel encoder("generalized schumacher encoder", eigen, code_alphabet, std::move(encoders),
                       source_lengths, code_len);
  KrausChannel decoder("generalized schumacher decoder", code_alphabet, eigen, std::move(decoders), code_len,
                       source_lengths);
  return GrandSchumacherCode{eigen,           spectrum,           code_alphabet,
                             lambdas,         delta,              std::move(sectors),
                             std::move(codebook), CodePair(std::move(encoder), std::move(decoder))};
}

}  // namespace mlq
