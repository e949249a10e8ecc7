#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace mlq {

// A set of unit letter vectors, given in coordinates of an orthonormal
// reference basis. The letters need be neither orthogonal nor independent; an
// orthonormal basis of their span (the basis letters) is computed once and all
// many-letter vectors over this alphabet are stored in basis-letter
// coordinates.
class QuantumAlphabet {
 public:
  // Orthonormalizes via the Gram matrix with rank cutoff kRankCutoff.
  // Throws InvalidArgument for empty input, ragged coordinates or letters that
  // are not unit vectors within kStateTolerance.
  explicit QuantumAlphabet(std::vector<Eigen::VectorXcd> letters);

  // The standard alphabet {|0>, ..., |d-1>}; basis letters are the letters.
  static std::shared_ptr<const QuantumAlphabet> orthonormal(std::size_t dim);

  // Same letters, basis letters replaced by `basis() * unitary`. The unitary is
  // given in the current basis-letter coordinates.
  std::shared_ptr<const QuantumAlphabet> rebased(const Eigen::MatrixXcd& unitary) const;

  std::size_t basis_dim() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  std::size_t reference_dim() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t letter_count() const noexcept { return letters_.size(); }

  const std::vector<Eigen::VectorXcd>& letters() const noexcept { return letters_; }
  // Columns are the basis letters in reference coordinates.
  const Eigen::MatrixXcd& basis() const noexcept { return basis_; }
  // Letter `i` expressed in basis-letter coordinates.
  const Eigen::VectorXcd& letter_coordinates(std::size_t i) const { return coordinates_.at(i); }

  // log2 of the letter-space dimension: qbits per letter of raw information.
  double log2_dim() const;

  // True when both alphabets span the same letter space in the same reference
  // frame, so vectors can be re-expressed from one to the other.
  bool same_letter_space(const QuantumAlphabet& other) const;

  // rho = sum_i p_i |x_i><x_i| in basis-letter coordinates.
  Eigen::MatrixXcd letter_matrix(const std::vector<double>& probabilities) const;

  friend bool operator==(const QuantumAlphabet& a, const QuantumAlphabet& b);

 private:
  QuantumAlphabet(std::vector<Eigen::VectorXcd> letters, Eigen::MatrixXcd basis);
  void compute_coordinates();

  std::vector<Eigen::VectorXcd> letters_;
  Eigen::MatrixXcd basis_;
  std::vector<Eigen::VectorXcd> coordinates_;
};

using AlphabetPtr = std::shared_ptr<const QuantumAlphabet>;

// Pointer identity or structural equality.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* what);

// Spectral decomposition of a letter matrix: eigenvalues in descending order
// (clamped at zero below kEigenCutoff), eigenvectors as columns with the
// largest-magnitude component made real positive.
struct LetterSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  std::size_t rank() const;
  // The strictly positive eigenvalues, renormalized to sum to one.
  std::vector<double> positive_distribution() const;
};

// Throws InvalidArgument unless rho is square, Hermitian, PSD and of unit
// trace within `tolerance`.
void validate_letter_matrix(const Eigen::MatrixXcd& rho, double tolerance);

LetterSpectrum letter_spectrum(const Eigen::MatrixXcd& rho);

}  // namespace mlq
