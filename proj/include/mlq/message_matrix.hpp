#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mlq/many_letter_vector.hpp"
#include "mlq/tolerances.hpp"

namespace mlq {

// A weighted list of pure, normalized messages with probabilities summing to
// one. Validated on construction.
class MessageEnsemble {
 public:
  struct Member {
    double probability;
    ManyLetterVector state;
  };

  MessageEnsemble(AlphabetPtr alphabet, std::vector<Member> members);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Member>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t max_length() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Member> members_;
};

// One dense block of a message matrix over a list of basis strings. Distinct
// blocks have disjoint keys and no coupling, so the matrix is their direct sum.
struct MatrixBlock {
  std::vector<BasisString> keys;
  Eigen::MatrixXcd values;
};

struct EigenPair {
  double eigenvalue;
  ManyLetterVector eigenvector;
};

// Density operator on the truncated many-letter space, stored as a direct sum
// of dense blocks. Blocks are the connected components of the nonzero
// pattern, so a block-diagonal-by-sector matrix such as a grand canonical
// message splits per sector (or finer), and a member straddling sectors yields
// a block with cross-sector entries.
class MessageMatrix {
 public:
  explicit MessageMatrix(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  // Splits `values` (indexed by `keys`, which must be distinct) into blocks.
  static MessageMatrix from_dense(AlphabetPtr alphabet, std::vector<BasisString> keys, const Eigen::MatrixXcd& values);
  // sum_k w_k |v_k><v_k| for arbitrary (unnormalized) v_k and w_k >= 0.
  static MessageMatrix from_weighted_states(AlphabetPtr alphabet,
                                            const std::vector<std::pair<double, ManyLetterVector>>& states);

  // Direct sum with a matrix on disjoint support; InvalidArgument on overlap.
  MessageMatrix& append_disjoint(const MessageMatrix& other);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<MatrixBlock>& blocks() const noexcept { return blocks_; }

  double trace() const;
  Complex entry(const BasisString& row, const BasisString& col) const;
  // Dense length-n sector block over the support strings of length n.
  std::pair<std::vector<BasisString>, Eigen::MatrixXcd> sector_block(std::size_t n) const;
  std::vector<BasisString> support() const;
  std::size_t max_length() const;

  // sum_s f(s) sigma(s, s): the expectation of an observable diagonal in basis strings.
  double diagonal_expectation(const std::function<double(const BasisString&)>& f) const;
  // <v|sigma|v>.
  double expectation(const ManyLetterVector& v) const;

  // Hermitian, eigenvalues >= -tolerance, trace 1 within tolerance; otherwise
  // InvariantViolation naming the failure.
  void validate_density(double tolerance = kStateTolerance) const;

  // Max entry difference against `other` over both supports.
  double max_abs_difference(const MessageMatrix& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<MatrixBlock> blocks_;
};

// sigma = sum p |phi><phi|.
MessageMatrix ensemble_to_matrix(const MessageEnsemble& ensemble);

// sigma = sum_n lambda_n rho^{(x)n}, with rho in basis-letter coordinates.
// Throws TruncationOverflow if lambda's support exceeds trunc.max_length.
MessageMatrix grand_canonical(const AlphabetPtr& alphabet, const std::vector<double>& lambdas,
                              const Eigen::MatrixXcd& rho, const TruncationConfig& trunc);

// rho^{(x)n} as a dense d^n x d^n matrix in lexicographic string order.
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& rho, std::size_t n);

// Eigenvalues above cutoff with orthonormal eigenvectors, descending. Throws
// ConvergenceError if the eigensolver fails.
std::vector<EigenPair> diagonalize(const MessageMatrix& sigma, double cutoff = kEigenCutoff);

// All eigenvalues of sigma (block by block, unsorted), for entropy.
std::vector<double> spectrum(const MessageMatrix& sigma);

// -sum q log2 q over eigenvalues above cutoff.
double von_neumann_entropy(const MessageMatrix& sigma, double cutoff = kEigenCutoff);
double von_neumann_entropy(const Eigen::MatrixXcd& rho, double cutoff = kEigenCutoff);

// Tr{sigma I} = log2(basis_dim) * Tr{sigma L}.
double raw_information(const MessageMatrix& sigma);
double length_expectation(const MessageMatrix& sigma);

// The same operator in the basis letters of `target` (same letter space).
MessageMatrix express_in(const MessageMatrix& sigma, const AlphabetPtr& target);

}  // namespace mlq
