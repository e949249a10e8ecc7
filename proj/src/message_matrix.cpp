#include "mlq/message_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlq/errors.hpp"

namespace mlq {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
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

// Groups indices 0..n-1 by root, each group in increasing index order, groups
// ordered by their smallest index.
std::vector<std::vector<std::size_t>> components(DisjointSets& sets, std::size_t n) {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

void append_blocks(std::vector<MatrixBlock>& out, const std::vector<BasisString>& keys, const Eigen::MatrixXcd& values) {
  const std::size_t n = keys.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != Complex{} ||
          values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) != Complex{})
        sets.unite(i, j);
  for (const auto& group : components(sets, n)) {
    const auto m = static_cast<Eigen::Index>(group.size());
    MatrixBlock block{{}, Eigen::MatrixXcd(m, m)};
    bool nonzero = false;
    for (Eigen::Index a = 0; a < m; ++a) {
      block.keys.push_back(keys[group[static_cast<std::size_t>(a)]]);
      for (Eigen::Index b = 0; b < m; ++b) {
        block.values(a, b) = values(static_cast<Eigen::Index>(group[static_cast<std::size_t>(a)]),
                                    static_cast<Eigen::Index>(group[static_cast<std::size_t>(b)]));
        nonzero = nonzero || block.values(a, b) != Complex{};
      }
    }
    if (nonzero) out.push_back(std::move(block));
  }
}

Eigen::VectorXcd gather(const MatrixBlock& block, const Amplitudes& amps) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(block.keys.size()));
  for (std::size_t i = 0; i < block.keys.size(); ++i) {
    auto it = amps.find(block.keys[i]);
    v(static_cast<Eigen::Index>(i)) = it == amps.end() ? Complex{} : it->second;
  }
  return v;
}

}  // namespace

MessageEnsemble::MessageEnsemble(AlphabetPtr alphabet, std::vector<Member> members)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("ensemble: no members");
  double total = 0.0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    if (!(m.probability > 0.0)) throw InvalidArgument("ensemble: member " + std::to_string(i) + " has non-positive probability");
    require_same_alphabet(alphabet_, m.state.alphabet(), "ensemble member");
    if (std::abs(m.state.norm() - 1.0) > kStateTolerance)
      throw InvalidArgument("ensemble: member " + std::to_string(i) + " is not normalized");
    total += m.probability;
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw InvalidArgument("ensemble: probabilities do not sum to 1");
}

std::size_t MessageEnsemble::max_length() const {
  std::size_t n = 0;
  for (const auto& m : members_) n = std::max(n, m.state.max_length());
  return n;
}

MessageMatrix MessageMatrix::from_dense(AlphabetPtr alphabet, std::vector<BasisString> keys, const Eigen::MatrixXcd& values) {
  if (static_cast<Eigen::Index>(keys.size()) != values.rows() || values.rows() != values.cols())
    throw InvalidArgument("message matrix: key count does not match matrix shape");
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (keys[order[i]] == keys[order[i - 1]]) throw InvalidArgument("message matrix: duplicate key " + keys[order[i]].to_string());
  std::vector<BasisString> sorted_keys;
  Eigen::MatrixXcd sorted(values.rows(), values.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted_keys.push_back(keys[order[i]]);
    for (std::size_t j = 0; j < order.size(); ++j)
      sorted(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          values(static_cast<Eigen::Index>(order[i]), static_cast<Eigen::Index>(order[j]));
  }
  MessageMatrix out(std::move(alphabet));
  append_blocks(out.blocks_, sorted_keys, sorted);
  return out;
}

MessageMatrix MessageMatrix::from_weighted_states(AlphabetPtr alphabet,
                                                  const std::vector<std::pair<double, ManyLetterVector>>& states) {
  // States sharing a basis string land in the same group; groups never couple.
  std::map<BasisString, std::size_t> owner;
  DisjointSets sets(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].first < 0.0) throw InvalidArgument("message matrix: negative weight");
    require_same_alphabet(alphabet, states[k].second.alphabet(), "message matrix");
    for (const auto& [s, a] : states[k].second.amplitudes()) {
      auto [it, inserted] = owner.emplace(s, k);
      if (!inserted) sets.unite(k, it->second);
    }
  }
  MessageMatrix out(alphabet);
  for (const auto& group : components(sets, states.size())) {
    std::map<BasisString, Eigen::Index> index;
    for (std::size_t k : group)
      for (const auto& [s, a] : states[k].second.amplitudes()) index.emplace(s, 0);
    std::vector<BasisString> keys;
    for (auto& [s, i] : index) {
      i = static_cast<Eigen::Index>(keys.size());
      keys.push_back(s);
    }
    const auto n = static_cast<Eigen::Index>(keys.size());
    Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t k : group) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
      for (const auto& [s, a] : states[k].second.amplitudes()) v(index.at(s)) = a;
      values += states[k].first * v * v.adjoint();
    }
    append_blocks(out.blocks_, keys, values);
  }
  return out;
}

MessageMatrix& MessageMatrix::append_disjoint(const MessageMatrix& other) {
  require_same_alphabet(alphabet_, other.alphabet_, "direct sum");
  const auto mine = support();
  for (const auto& b : other.blocks_)
    for (const auto& k : b.keys)
      if (std::binary_search(mine.begin(), mine.end(), k))
        throw InvalidArgument("direct sum: supports overlap at " + k.to_string());
  blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
  return *this;
}

double MessageMatrix::trace() const {
  double total = 0.0;
  for (const auto& b : blocks_) total += b.values.trace().real();
  return total;
}

Complex MessageMatrix::entry(const BasisString& row, const BasisString& col) const {
  for (const auto& b : blocks_) {
    auto r = std::lower_bound(b.keys.begin(), b.keys.end(), row);
    if (r == b.keys.end() || *r != row) continue;
    auto c = std::lower_bound(b.keys.begin(), b.keys.end(), col);
    if (c == b.keys.end() || *c != col) return Complex{};
    return b.values(r - b.keys.begin(), c - b.keys.begin());
  }
  return Complex{};
}

std::pair<std::vector<BasisString>, Eigen::MatrixXcd> MessageMatrix::sector_block(std::size_t n) const {
  std::vector<BasisString> keys;
  for (const auto& b : blocks_)
    for (const auto& k : b.keys)
      if (k.size() == n) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  const auto m = static_cast<Eigen::Index>(keys.size());
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) values(i, j) = entry(keys[static_cast<std::size_t>(i)], keys[static_cast<std::size_t>(j)]);
  return {std::move(keys), std::move(values)};
}

std::vector<BasisString> MessageMatrix::support() const {
  std::vector<BasisString> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.keys.begin(), b.keys.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MessageMatrix::max_length() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n = std::max(n, b.keys.back().size());
  return n;
}

double MessageMatrix::diagonal_expectation(const std::function<double(const BasisString&)>& f) const {
  double total = 0.0;
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.keys.size(); ++i)
      total += f(b.keys[i]) * b.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  return total;
}

double MessageMatrix::expectation(const ManyLetterVector& v) const {
  require_same_alphabet(alphabet_, v.alphabet(), "expectation");
  Complex total{};
  for (const auto& b : blocks_) {
    const Eigen::VectorXcd x = gather(b, v.amplitudes());
    total += x.dot(b.values * x);
  }
  return total.real();
}

void MessageMatrix::validate_density(double tolerance) const {
  for (const auto& b : blocks_) {
    if ((b.values - b.values.adjoint()).cwiseAbs().maxCoeff() > tolerance)
      throw InvariantViolation("message matrix: not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b.values, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("message matrix: eigensolver failed");
    if (solver.eigenvalues().minCoeff() < -tolerance) throw InvariantViolation("message matrix: negative eigenvalue");
  }
  if (std::abs(trace() - 1.0) > tolerance) throw InvariantViolation("message matrix: trace " + std::to_string(trace()) + " is not 1");
}

double MessageMatrix::max_abs_difference(const MessageMatrix& other) const {
  double worst = 0.0;
  auto sweep = [&worst](const MessageMatrix& a, const MessageMatrix& b) {
    for (const auto& blk : a.blocks_)
      for (std::size_t i = 0; i < blk.keys.size(); ++i)
        for (std::size_t j = 0; j < blk.keys.size(); ++j)
          worst = std::max(worst, std::abs(blk.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                                           b.entry(blk.keys[i], blk.keys[j])));
  };
  sweep(*this, other);
  sweep(other, *this);
  return worst;
}

MessageMatrix ensemble_to_matrix(const MessageEnsemble& ensemble) {
  std::vector<std::pair<double, ManyLetterVector>> states;
  for (const auto& m : ensemble.members()) states.emplace_back(m.probability, m.state);
  return MessageMatrix::from_weighted_states(ensemble.alphabet(), states);
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& rho, std::size_t n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::MatrixXcd next(out.rows() * rho.rows(), out.cols() * rho.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * rho.rows(), j * rho.cols(), rho.rows(), rho.cols()) = out(i, j) * rho;
    out = std::move(next);
  }
  return out;
}

MessageMatrix grand_canonical(const AlphabetPtr& alphabet, const std::vector<double>& lambdas, const Eigen::MatrixXcd& rho,
                              const TruncationConfig& trunc) {
  if (static_cast<std::size_t>(rho.rows()) != alphabet->basis_dim())
    throw InvalidArgument("grand canonical: letter matrix dimension differs from the alphabet's basis dimension");
  validate_letter_matrix(rho, kStateTolerance);
  double total = 0.0;
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    if (!(lambdas[n] >= 0.0)) throw InvalidArgument("grand canonical: negative length weight");
    if (lambdas[n] > 0.0) require_within(n, trunc.max_length, "grand canonical length distribution");
    total += lambdas[n];
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw InvalidArgument("grand canonical: length weights do not sum to 1");
  MessageMatrix out(alphabet);
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    if (lambdas[n] == 0.0) continue;
    out.append_disjoint(
        MessageMatrix::from_dense(alphabet, all_strings(alphabet->basis_dim(), n), lambdas[n] * kron_power(rho, n)));
  }
  return out;
}

std::vector<EigenPair> diagonalize(const MessageMatrix& sigma, double cutoff) {
  struct Ranked {
    double q;
    std::size_t order;
    ManyLetterVector v;
  };
  std::vector<Ranked> all;
  for (const auto& b : sigma.blocks()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b.values);
    if (solver.info() != Eigen::Success) throw ConvergenceError("diagonalize: eigensolver did not converge");
    std::vector<Eigen::VectorXcd> kept;
    std::vector<double> values;
    for (Eigen::Index k = solver.eigenvalues().size(); k-- > 0;) {
      if (solver.eigenvalues()(k) <= cutoff) continue;
      Eigen::VectorXcd v = solver.eigenvectors().col(k);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : kept) v -= u * u.dot(v);
      v.normalize();
      Eigen::Index arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      v *= std::conj(v(arg)) / std::abs(v(arg));
      kept.push_back(v);
      values.push_back(solver.eigenvalues()(k));
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      Amplitudes amps;
      for (std::size_t i = 0; i < b.keys.size(); ++i) {
        const Complex a = kept[k](static_cast<Eigen::Index>(i));
        if (std::abs(a) > 1e-15) amps.emplace(b.keys[i], a);
      }
      all.push_back({values[k], all.size(), ManyLetterVector(sigma.alphabet(), std::move(amps))});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Ranked& a, const Ranked& b) { return a.q > b.q; });
  std::vector<EigenPair> out;
  out.reserve(all.size());
  for (auto& r : all) out.push_back({r.q, std::move(r.v)});
  return out;
}

std::vector<double> spectrum(const MessageMatrix& sigma) {
  std::vector<double> out;
  for (const auto& b : sigma.blocks()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b.values, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("spectrum: eigensolver did not converge");
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) out.push_back(solver.eigenvalues()(k));
  }
  return out;
}

namespace {
double entropy_of(const std::vector<double>& eigenvalues, double cutoff) {
  double s = 0.0;
  for (double q : eigenvalues)
    if (q > cutoff) s -= q * std::log2(q);
  return s;
}
}  // namespace

double von_neumann_entropy(const MessageMatrix& sigma, double cutoff) { return entropy_of(spectrum(sigma), cutoff); }

double von_neumann_entropy(const Eigen::MatrixXcd& rho, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("entropy: eigensolver did not converge");
  std::vector<double> q(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  return entropy_of(q, cutoff);
}

double length_expectation(const MessageMatrix& sigma) {
  return sigma.diagonal_expectation([](const BasisString& s) { return static_cast<double>(s.size()); });
}

double raw_information(const MessageMatrix& sigma) { return sigma.alphabet()->log2_dim() * length_expectation(sigma); }

MessageMatrix express_in(const MessageMatrix& sigma, const AlphabetPtr& target) {
  if (same_alphabet(sigma.alphabet(), target)) {
    MessageMatrix out(target);
    for (const auto& b : sigma.blocks()) out.append_disjoint(MessageMatrix::from_dense(target, b.keys, b.values));
    return out;
  }
  // Each block maps to B V B^dagger with column k of B the image of keys[k].
  // Images of distinct blocks can overlap, so the sum is formed densely.
  std::map<BasisString, Eigen::Index> index;
  struct Piece {
    std::vector<std::vector<std::pair<BasisString, Complex>>> cols;
    const MatrixBlock* block;
  };
  std::vector<Piece> pieces;
  for (const auto& b : sigma.blocks()) {
    Piece piece{{}, &b};
    for (const auto& k : b.keys) {
      const ManyLetterVector img = express_in(ManyLetterVector::basis(sigma.alphabet(), k), target);
      std::vector<std::pair<BasisString, Complex>> col(img.amplitudes().begin(), img.amplitudes().end());
      for (const auto& [s, a] : col) index.emplace(s, 0);
      piece.cols.push_back(std::move(col));
    }
    pieces.push_back(std::move(piece));
  }
  std::vector<BasisString> keys;
  for (auto& [s, i] : index) {
    i = static_cast<Eigen::Index>(keys.size());
    keys.push_back(s);
  }
  const auto n = static_cast<Eigen::Index>(keys.size());
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& piece : pieces) {
    Eigen::MatrixXcd basis_change = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(piece.cols.size()));
    for (std::size_t k = 0; k < piece.cols.size(); ++k)
      for (const auto& [s, a] : piece.cols[k]) basis_change(index.at(s), static_cast<Eigen::Index>(k)) = a;
    values += basis_change * piece.block->values * basis_change.adjoint();
  }
  return MessageMatrix::from_dense(target, std::move(keys), values);
}

}  // namespace mlq
