#include "mlq/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "mlq/errors.hpp"

namespace mlq {
namespace {

std::size_t domain_size(std::size_t radix, const std::vector<std::size_t>& lengths) {
  std::size_t total = 0;
  for (std::size_t n : lengths) {
    total += guarded_power(radix, n, kEnumerationGuard);
    if (total > kEnumerationGuard) throw GuardExceeded("channel domain exceeds the enumeration guard");
  }
  return total;
}

std::vector<std::size_t> normalized_lengths(std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

bool has_length(const std::vector<std::size_t>& lengths, std::size_t n) {
  return std::binary_search(lengths.begin(), lengths.end(), n);
}

void check_string(const BasisString& s, std::size_t dim, const std::vector<std::size_t>& lengths, const std::string& what) {
  for (auto l : s)
    if (l >= dim) throw InvalidArgument(what + ": string " + s.to_string() + " has a letter out of range");
  if (has_length(lengths, s.size())) return;
  if (lengths.empty() || s.size() > lengths.back())
    throw TruncationOverflow(what + ": string " + s.to_string() + " exceeds the truncation length");
  throw InvalidArgument(what + ": string " + s.to_string() + " has a length outside the declared space");
}

struct Groups {
  std::vector<std::size_t> parent;
  explicit Groups(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Rows of E restricted to a block: code string -> coefficients over block keys.
std::map<BasisString, Eigen::RowVectorXcd> restricted_rows(const SparseOperator& op, const MatrixBlock& block) {
  std::map<BasisString, Eigen::RowVectorXcd> rows;
  const auto n = static_cast<Eigen::Index>(block.keys.size());
  for (Eigen::Index k = 0; k < n; ++k) {
    auto col = op.find(block.keys[static_cast<std::size_t>(k)]);
    if (col == op.end()) continue;
    for (const auto& [c, a] : col->second) {
      auto [it, inserted] = rows.try_emplace(c, Eigen::RowVectorXcd::Zero(n));
      it->second(k) += a;
    }
  }
  return rows;
}

MessageMatrix in_alphabet(const MessageMatrix& sigma, const AlphabetPtr& target, const char* what) {
  if (same_alphabet(sigma.alphabet(), target)) return sigma;
  if (!sigma.alphabet()->same_letter_space(*target)) throw AlphabetMismatch(std::string(what) + ": alphabet mismatch");
  return express_in(sigma, target);
}

void require_domain(const KrausChannel& ch, const MessageMatrix& sigma) {
  for (const auto& b : sigma.blocks())
    for (const auto& k : b.keys)
      if (!ch.in_domain(k)) throw DomainError(ch.name() + ": input string " + k.to_string() + " is outside the channel domain");
}

}  // namespace

SparseOperator adjoint(const SparseOperator& op) {
  SparseOperator out;
  for (const auto& [s, col] : op)
    for (const auto& [c, a] : col) out[c][s] += std::conj(a);
  return out;
}

KrausChannel::KrausChannel(std::string name, AlphabetPtr source, AlphabetPtr code, std::vector<SparseOperator> operators,
                           std::vector<std::size_t> source_lengths, std::vector<std::size_t> code_lengths)
    : name_(std::move(name)),
      source_(std::move(source)),
      code_(std::move(code)),
      operators_(std::move(operators)),
      source_lengths_(normalized_lengths(std::move(source_lengths))),
      code_lengths_(normalized_lengths(std::move(code_lengths))) {
  if (!source_ || !code_) throw InvalidArgument(name_ + ": missing alphabet");
  if (operators_.empty()) throw InvalidArgument(name_ + ": no Kraus operators");
  for (const auto& op : operators_)
    for (const auto& [s, col] : op) {
      check_string(s, source_->basis_dim(), source_lengths_, name_ + " (source)");
      for (const auto& [c, a] : col) check_string(c, code_->basis_dim(), code_lengths_, name_ + " (code)");
    }
}

bool KrausChannel::in_domain(const BasisString& s) const {
  if (!has_length(source_lengths_, s.size())) return false;
  return std::all_of(s.begin(), s.end(), [&](auto l) { return l < source_->basis_dim(); });
}

ManyLetterVector KrausChannel::source_coordinates(const ManyLetterVector& v) const {
  if (same_alphabet(v.alphabet(), source_)) return v;
  if (!v.alphabet()->same_letter_space(*source_)) throw AlphabetMismatch(name_ + ": input alphabet mismatch");
  return express_in(v, source_);
}

ManyLetterVector KrausChannel::apply(std::size_t op, const ManyLetterVector& v) const {
  const ManyLetterVector x = source_coordinates(v);
  for (const auto& [s, a] : x.amplitudes())
    if (!in_domain(s)) throw DomainError(name_ + ": input string " + s.to_string() + " is outside the channel domain");
  const SparseOperator& e = operators_.at(op);
  Amplitudes out;
  auto accumulate = [&out](const Amplitudes& col, Complex a) {
    for (const auto& [c, b] : col) out[c] += b * a;
  };
  if (e.size() < x.amplitudes().size()) {
    for (const auto& [s, col] : e)
      if (auto it = x.amplitudes().find(s); it != x.amplitudes().end()) accumulate(col, it->second);
  } else {
    for (const auto& [s, a] : x.amplitudes())
      if (auto it = e.find(s); it != e.end()) accumulate(it->second, a);
  }
  return ManyLetterVector(code_, std::move(out));
}

ManyLetterVector KrausChannel::apply_adjoint(std::size_t op, const ManyLetterVector& w) const {
  ManyLetterVector y = w;
  if (!same_alphabet(w.alphabet(), code_)) {
    if (!w.alphabet()->same_letter_space(*code_)) throw AlphabetMismatch(name_ + ": code vector alphabet mismatch");
    y = express_in(w, code_);
  }
  Amplitudes out;
  for (const auto& [s, col] : operators_.at(op)) {
    const Complex c = inner_product(col, y.amplitudes());
    if (c != Complex{}) out[s] += c;
  }
  return ManyLetterVector(source_, std::move(out));
}

namespace {

IdentityReport identity_deviation(const std::string& name, const std::map<std::pair<BasisString, BasisString>, Complex>& gram,
                                  std::size_t dimension, double tolerance) {
  IdentityReport r;
  r.channel = name;
  r.dimension = dimension;
  double frob2 = 0.0;
  std::size_t diagonal = 0;
  for (const auto& [key, g] : gram) {
    const bool diag = key.first == key.second;
    diagonal += diag ? 1 : 0;
    const double dev = std::abs(g - (diag ? Complex{1.0, 0.0} : Complex{}));
    r.max_deviation = std::max(r.max_deviation, dev);
    frob2 += dev * dev;
  }
  if (diagonal < dimension) {
    r.max_deviation = std::max(r.max_deviation, 1.0);
    frob2 += static_cast<double>(dimension - diagonal);
  }
  r.frobenius_deviation = std::sqrt(frob2);
  r.passed = r.frobenius_deviation <= tolerance;
  return r;
}

}  // namespace

IdentityReport check_kraus(const KrausChannel& channel, double tolerance) {
  const std::size_t dim = domain_size(channel.source()->basis_dim(), channel.source_lengths());
  std::map<std::pair<BasisString, BasisString>, Complex> gram;
  for (const auto& op : channel.operators()) {
    std::map<BasisString, std::vector<std::pair<BasisString, Complex>>> rows;
    for (const auto& [s, col] : op)
      for (const auto& [c, a] : col) rows[c].emplace_back(s, a);
    for (const auto& [c, entries] : rows)
      for (const auto& [s, a] : entries)
        for (const auto& [t, b] : entries) gram[{s, t}] += std::conj(a) * b;
  }
  return identity_deviation(channel.name(), gram, dim, tolerance);
}

IdentityReport check_unital(const KrausChannel& channel, double tolerance) {
  const std::size_t dim = domain_size(channel.code()->basis_dim(), channel.code_lengths());
  std::map<std::pair<BasisString, BasisString>, Complex> gram;
  for (const auto& op : channel.operators())
    for (const auto& [s, col] : op)
      for (const auto& [c, a] : col)
        for (const auto& [d, b] : col) gram[{c, d}] += a * std::conj(b);
  return identity_deviation(channel.name(), gram, dim, tolerance);
}

CodePair::CodePair(KrausChannel encoder, KrausChannel decoder) : encoder_(std::move(encoder)), decoder_(std::move(decoder)) {
  require_same_alphabet(encoder_.code(), decoder_.source(), "code pair (encoder output vs decoder input)");
  require_same_alphabet(encoder_.source(), decoder_.code(), "code pair (decoder output vs encoder input)");
  for (const KrausChannel* ch : {&encoder_, &decoder_}) {
    const IdentityReport r = check_kraus(*ch);
    if (!r.passed)
      throw InvariantViolation(ch->name() + ": Kraus completeness fails (Frobenius deviation " +
                               std::to_string(r.frobenius_deviation) + ")");
  }
}

CodePair lossless_pair(const KrausChannel& encoder) {
  if (encoder.operators().size() != 1) throw InvalidArgument("lossless pair: encoder must have a single Kraus operator");
  const SparseOperator& e = encoder.operators().front();
  std::vector<SparseOperator> ops{adjoint(e)};

  std::map<BasisString, Eigen::Index> support;
  for (const auto& [s, col] : e)
    for (const auto& [c, a] : col) support.emplace(c, 0);
  std::vector<BasisString> rows;
  for (auto& [c, i] : support) {
    i = static_cast<Eigen::Index>(rows.size());
    rows.push_back(c);
  }
  constexpr std::size_t kDenseLimit = 4096;
  if (rows.size() > kDenseLimit) throw GuardExceeded("lossless pair: encoder image too large for a dense complement");

  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(e.size());
  Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(m, n);
  Eigen::Index j = 0;
  for (const auto& [s, col] : e) {
    for (const auto& [c, a] : col) image(support.at(c), j) = a;
    ++j;
  }
  const BasisString empty;
  if (m > 0) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(image);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, m);
    for (Eigen::Index k = std::min(n, m); k < m; ++k) {
      SparseOperator op;
      for (Eigen::Index i = 0; i < m; ++i)
        if (std::abs(q(i, k)) > 1e-15) op[rows[static_cast<std::size_t>(i)]][empty] = std::conj(q(i, k));
      ops.push_back(std::move(op));
    }
  }
  domain_size(encoder.code()->basis_dim(), encoder.code_lengths());
  for (const auto& c : strings_with_lengths(encoder.code()->basis_dim(), encoder.code_lengths()))
    if (!support.count(c)) ops.push_back(SparseOperator{{c, Amplitudes{{empty, Complex{1.0, 0.0}}}}});

  std::vector<std::size_t> out_lengths = encoder.source_lengths();
  out_lengths.push_back(0);
  KrausChannel decoder(encoder.name() + " decoder", encoder.code(), encoder.source(), std::move(ops), encoder.code_lengths(),
                       std::move(out_lengths));
  return CodePair(encoder, std::move(decoder));
}

MessageMatrix apply_channel(const KrausChannel& channel, const MessageMatrix& input) {
  const MessageMatrix sigma = in_alphabet(input, channel.source(), "apply channel");
  require_domain(channel, sigma);
  struct Piece {
    std::vector<BasisString> keys;
    Eigen::MatrixXcd values;
  };
  std::vector<Piece> pieces;
  for (const auto& b : sigma.blocks())
    for (const auto& op : channel.operators()) {
      auto rows = restricted_rows(op, b);
      if (rows.empty()) continue;
      Eigen::MatrixXcd e(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(b.keys.size()));
      Piece piece;
      for (auto& [c, r] : rows) {
        e.row(static_cast<Eigen::Index>(piece.keys.size())) = r;
        piece.keys.push_back(c);
      }
      piece.values = e * b.values * e.adjoint();
      pieces.push_back(std::move(piece));
    }

  std::map<BasisString, std::size_t> owner;
  Groups groups(pieces.size());
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (const auto& k : pieces[p].keys) {
      auto [it, inserted] = owner.emplace(k, p);
      if (!inserted) groups.unite(p, it->second);
    }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t p = 0; p < pieces.size(); ++p) by_root[groups.find(p)].push_back(p);

  MessageMatrix out(channel.code());
  for (const auto& [root, members] : by_root) {
    std::map<BasisString, Eigen::Index> index;
    for (std::size_t p : members)
      for (const auto& k : pieces[p].keys) index.emplace(k, 0);
    std::vector<BasisString> keys;
    for (auto& [k, i] : index) {
      i = static_cast<Eigen::Index>(keys.size());
      keys.push_back(k);
    }
    const auto n = static_cast<Eigen::Index>(keys.size());
    Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t p : members) {
      const auto& piece = pieces[p];
      for (std::size_t a = 0; a < piece.keys.size(); ++a)
        for (std::size_t b = 0; b < piece.keys.size(); ++b)
          values(index.at(piece.keys[a]), index.at(piece.keys[b])) +=
              piece.values(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
    out.append_disjoint(MessageMatrix::from_dense(channel.code(), std::move(keys), values));
  }
  return out;
}

double fidelity(const ManyLetterVector& phi_in, const CodePair& pair) {
  const KrausChannel& enc = pair.encoder();
  const KrausChannel& dec = pair.decoder();
  ManyLetterVector phi = phi_in;
  if (!same_alphabet(phi.alphabet(), enc.source())) {
    if (!phi.alphabet()->same_letter_space(*enc.source())) throw AlphabetMismatch("fidelity: alphabet mismatch");
    phi = express_in(phi, enc.source());
  }
  if (std::abs(phi.norm_squared() - 1.0) > kOperatorTolerance) throw InvalidArgument("fidelity: input is not normalized");
  double total = 0.0;
  for (std::size_t i = 0; i < enc.operators().size(); ++i) {
    const ManyLetterVector coded = enc.apply(i, phi);
    if (coded.is_zero()) continue;
    for (std::size_t j = 0; j < dec.operators().size(); ++j) {
      const ManyLetterVector back = dec.apply(j, coded);
      if (back.is_zero()) continue;
      total += std::norm(inner_product(phi.amplitudes(), back.amplitudes()));
    }
  }
  return total;
}

double confidence(const MessageEnsemble& ensemble, const CodePair& pair) {
  double total = 0.0;
  for (const auto& m : ensemble.members()) total += m.probability * fidelity(m.state, pair);
  return total;
}

double probability_of_error(const MessageEnsemble& ensemble, const CodePair& pair) { return 1.0 - confidence(ensemble, pair); }

double physical_length(const BasisString& s) { return static_cast<double>(s.size()); }

double encoded_information(const KrausChannel& channel, const MessageMatrix& input, const LengthFunction& length) {
  const MessageMatrix sigma = in_alphabet(input, channel.source(), "encoded information");
  require_domain(channel, sigma);
  double total = 0.0;
  for (const auto& b : sigma.blocks())
    for (const auto& op : channel.operators())
      for (const auto& [c, r] : restricted_rows(op, b)) {
        const double l = length(c);
        if (l != 0.0) total += l * (r * b.values * r.adjoint())(0, 0).real();
      }
  return channel.code()->log2_dim() * total;
}

bool is_compressive(const KrausChannel& channel, const MessageMatrix& sigma, double tolerance) {
  return encoded_information(channel, sigma) <= raw_information(sigma) + tolerance;
}

}  // namespace mlq
