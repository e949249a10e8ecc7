#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <set>

#include "mlq/alphabet.hpp"
#include "mlq/basis_string.hpp"
#include "mlq/truncation.hpp"

namespace mlq {

using Complex = std::complex<double>;
// Sparse amplitudes keyed by basis string. Strings of different lengths are
// orthogonal because each key appears once.
using Amplitudes = std::map<BasisString, Complex>;

// A (super)position in the truncated many-letter space over an alphabet,
// stored in basis-letter coordinates.
class ManyLetterVector {
 public:
  explicit ManyLetterVector(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  ManyLetterVector(AlphabetPtr alphabet, Amplitudes amplitudes);

  static ManyLetterVector basis(AlphabetPtr alphabet, BasisString s);
  static ManyLetterVector empty_message(AlphabetPtr alphabet);
  // Product vector |x_1 ... x_n> of alphabet letters (expanded in basis strings).
  static ManyLetterVector product(AlphabetPtr alphabet, const std::vector<std::size_t>& letter_indices);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }

  Complex amplitude(const BasisString& s) const;
  // Adds to the amplitude of `s`; letters are range-checked.
  void add(const BasisString& s, Complex value);

  double norm() const;
  double norm_squared() const;
  // Squared norm of the length-n component (the expectation of Pi_n).
  double sector_norm_squared(std::size_t n) const;
  std::map<std::size_t, double> sector_weights() const;
  std::size_t max_length() const;
  std::set<std::size_t> lengths() const;
  bool is_zero() const { return amplitudes_.empty(); }

  ManyLetterVector normalized() const;
  // Drops amplitudes with magnitude <= tolerance.
  ManyLetterVector pruned(double tolerance) const;

  ManyLetterVector& operator+=(const ManyLetterVector& other);
  ManyLetterVector& operator-=(const ManyLetterVector& other);
  ManyLetterVector& operator*=(Complex factor);

  friend ManyLetterVector operator+(ManyLetterVector a, const ManyLetterVector& b) { return a += b; }
  friend ManyLetterVector operator-(ManyLetterVector a, const ManyLetterVector& b) { return a -= b; }
  friend ManyLetterVector operator*(Complex factor, ManyLetterVector v) { return v *= factor; }

 private:
  AlphabetPtr alphabet_;
  Amplitudes amplitudes_;
};

// <u|v>, conjugate-linear in u. Throws AlphabetMismatch.
Complex inner_product(const ManyLetterVector& u, const ManyLetterVector& v);
Complex inner_product(const Amplitudes& u, const Amplitudes& v);

// Bilinear extension of string concatenation. Throws TruncationOverflow when a
// concatenated string exceeds trunc.max_length.
ManyLetterVector tensor_concat(const ManyLetterVector& u, const ManyLetterVector& v, const TruncationConfig& trunc);

// <v|L|v> for normalized v; InvalidArgument otherwise.
double length_expectation(const ManyLetterVector& v);

// log2(basis_dim) * <L>, in qbits.
double raw_information(const ManyLetterVector& v);

// Re-expresses `v` in the basis letters of `target`, which must span the same
// letter space. Each length-n string expands into up to dim^n components.
ManyLetterVector express_in(const ManyLetterVector& v, const AlphabetPtr& target);

// Max |u(s) - v(s)| over the union of supports.
double max_abs_difference(const ManyLetterVector& u, const ManyLetterVector& v);

}  // namespace mlq
