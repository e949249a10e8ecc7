#include "mlq/alphabet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlq/errors.hpp"
#include "mlq/tolerances.hpp"

namespace mlq {
namespace {

std::size_t gram_rank(const std::vector<Eigen::VectorXcd>& letters) {
  const auto m = static_cast<Eigen::Index>(letters.size());
  Eigen::MatrixXcd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) gram(i, j) = letters[i].dot(letters[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("alphabet: Gram eigensolver failed");
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < m; ++i) rank += solver.eigenvalues()(i) > kRankCutoff ? 1 : 0;
  return rank;
}

// Gram-Schmidt over the letters in order, two orthogonalization passes.
Eigen::MatrixXcd orthonormal_span(const std::vector<Eigen::VectorXcd>& letters) {
  std::vector<Eigen::VectorXcd> basis;
  for (const auto& x : letters) {
    Eigen::VectorXcd r = x;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= b * b.dot(r);
    if (r.squaredNorm() > kRankCutoff) basis.push_back(r.normalized());
  }
  Eigen::MatrixXcd out(letters.front().size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u) - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm() <= tol;
}

}  // namespace

QuantumAlphabet::QuantumAlphabet(std::vector<Eigen::VectorXcd> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvalidArgument("alphabet: no letters");
  const auto dim = letters_.front().size();
  if (dim == 0) throw InvalidArgument("alphabet: letters have zero dimension");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].size() != dim) throw InvalidArgument("alphabet: letters have differing dimensions");
    if (std::abs(letters_[i].norm() - 1.0) > kStateTolerance)
      throw InvalidArgument("alphabet: letter " + std::to_string(i) + " is not a unit vector");
  }
  basis_ = orthonormal_span(letters_);
  if (static_cast<std::size_t>(basis_.cols()) != gram_rank(letters_))
    throw InvalidArgument("alphabet: letters are numerically ill-conditioned (rank is ambiguous at the cutoff)");
  compute_coordinates();
}

QuantumAlphabet::QuantumAlphabet(std::vector<Eigen::VectorXcd> letters, Eigen::MatrixXcd basis)
    : letters_(std::move(letters)), basis_(std::move(basis)) {
  compute_coordinates();
}

void QuantumAlphabet::compute_coordinates() {
  coordinates_.clear();
  coordinates_.reserve(letters_.size());
  for (const auto& x : letters_) coordinates_.push_back(basis_.adjoint() * x);
}

std::shared_ptr<const QuantumAlphabet> QuantumAlphabet::orthonormal(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("alphabet: dimension must be positive");
  std::vector<Eigen::VectorXcd> letters;
  for (std::size_t k = 0; k < dim; ++k) letters.push_back(Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(k)));
  return std::make_shared<const QuantumAlphabet>(std::move(letters));
}

std::shared_ptr<const QuantumAlphabet> QuantumAlphabet::rebased(const Eigen::MatrixXcd& unitary) const {
  if (unitary.rows() != basis_.cols() || !is_unitary(unitary, kOperatorTolerance))
    throw InvalidArgument("alphabet: rebasing matrix is not a unitary on the letter space");
  return std::shared_ptr<const QuantumAlphabet>(new QuantumAlphabet(letters_, basis_ * unitary));
}

double QuantumAlphabet::log2_dim() const { return std::log2(static_cast<double>(basis_dim())); }

bool QuantumAlphabet::same_letter_space(const QuantumAlphabet& other) const {
  if (reference_dim() != other.reference_dim() || basis_dim() != other.basis_dim()) return false;
  return is_unitary(basis_.adjoint() * other.basis_, kOperatorTolerance);
}

Eigen::MatrixXcd QuantumAlphabet::letter_matrix(const std::vector<double>& probabilities) const {
  if (probabilities.size() != letters_.size())
    throw InvalidArgument("letter matrix: expected " + std::to_string(letters_.size()) + " probabilities");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw InvalidArgument("letter matrix: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw InvalidArgument("letter matrix: probabilities do not sum to 1");
  const auto d = static_cast<Eigen::Index>(basis_dim());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < letters_.size(); ++i)
    rho += probabilities[i] * coordinates_[i] * coordinates_[i].adjoint();
  return rho;
}

bool operator==(const QuantumAlphabet& a, const QuantumAlphabet& b) {
  if (a.letters_.size() != b.letters_.size() || a.basis_.rows() != b.basis_.rows() || a.basis_.cols() != b.basis_.cols())
    return false;
  for (std::size_t i = 0; i < a.letters_.size(); ++i)
    if (a.letters_[i] != b.letters_[i]) return false;
  return a.basis_ == b.basis_;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* what) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch(std::string(what) + ": alphabet mismatch");
}

std::size_t LetterSpectrum::rank() const {
  return static_cast<std::size_t>((eigenvalues.array() > 0.0).count());
}

std::vector<double> LetterSpectrum::positive_distribution() const {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues(i) > 0.0) out.push_back(eigenvalues(i));
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& q : out) q /= total;
  return out;
}

void validate_letter_matrix(const Eigen::MatrixXcd& rho, double tolerance) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) throw InvalidArgument("letter matrix: must be square and nonempty");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) throw InvalidArgument("letter matrix: not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tolerance) throw InvalidArgument("letter matrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("letter matrix: eigensolver failed");
  if (solver.eigenvalues().minCoeff() < -tolerance) throw InvalidArgument("letter matrix: not positive semidefinite");
}

LetterSpectrum letter_spectrum(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) throw ConvergenceError("letter spectrum: eigensolver failed");
  const Eigen::Index d = rho.rows();
  LetterSpectrum out{Eigen::VectorXd(d), Eigen::MatrixXcd(d, d)};
  for (Eigen::Index k = 0; k < d; ++k) {
    const Eigen::Index src = d - 1 - k;
    const double q = solver.eigenvalues()(src);
    out.eigenvalues(k) = q > kEigenCutoff ? q : 0.0;
    Eigen::VectorXcd v = solver.eigenvectors().col(src);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::conj(v(arg)) / std::abs(v(arg));
    out.eigenvectors.col(k) = v;
  }
  return out;
}

}  // namespace mlq
