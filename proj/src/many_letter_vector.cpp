#include "mlq/many_letter_vector.hpp"

#include <cmath>
#include <string>

#include "mlq/errors.hpp"
#include "mlq/tolerances.hpp"

namespace mlq {
namespace {

void check_letters(const BasisString& s, std::size_t dim) {
  for (auto l : s)
    if (l >= dim) throw InvalidArgument("basis string " + s.to_string() + " has a letter outside [0, " + std::to_string(dim) + ")");
}

// Applies the letter map `m` (new coordinates = m * old) to every position of `s`.
Amplitudes expand_string(const BasisString& s, const Eigen::MatrixXcd& m) {
  Amplitudes current{{BasisString{}, Complex{1.0, 0.0}}};
  for (auto letter : s) {
    Amplitudes next;
    for (const auto& [prefix, amp] : current) {
      for (Eigen::Index k = 0; k < m.rows(); ++k) {
        const Complex c = m(k, letter);
        if (c == Complex{}) continue;
        next[prefix + BasisString{static_cast<BasisString::Letter>(k)}] += amp * c;
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

ManyLetterVector::ManyLetterVector(AlphabetPtr alphabet, Amplitudes amplitudes)
    : alphabet_(std::move(alphabet)), amplitudes_(std::move(amplitudes)) {
  for (const auto& [s, a] : amplitudes_) check_letters(s, alphabet_->basis_dim());
}

ManyLetterVector ManyLetterVector::basis(AlphabetPtr alphabet, BasisString s) {
  ManyLetterVector v(std::move(alphabet));
  v.add(s, 1.0);
  return v;
}

ManyLetterVector ManyLetterVector::empty_message(AlphabetPtr alphabet) { return basis(std::move(alphabet), BasisString{}); }

ManyLetterVector ManyLetterVector::product(AlphabetPtr alphabet, const std::vector<std::size_t>& letter_indices) {
  Amplitudes current{{BasisString{}, Complex{1.0, 0.0}}};
  for (std::size_t idx : letter_indices) {
    if (idx >= alphabet->letter_count()) throw InvalidArgument("product vector: letter index out of range");
    const Eigen::VectorXcd& c = alphabet->letter_coordinates(idx);
    Amplitudes next;
    for (const auto& [prefix, amp] : current)
      for (Eigen::Index k = 0; k < c.size(); ++k)
        if (c(k) != Complex{}) next[prefix + BasisString{static_cast<BasisString::Letter>(k)}] += amp * c(k);
    current = std::move(next);
  }
  return ManyLetterVector(std::move(alphabet), std::move(current));
}

Complex ManyLetterVector::amplitude(const BasisString& s) const {
  auto it = amplitudes_.find(s);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

void ManyLetterVector::add(const BasisString& s, Complex value) {
  check_letters(s, alphabet_->basis_dim());
  amplitudes_[s] += value;
}

double ManyLetterVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [s, a] : amplitudes_) total += std::norm(a);
  return total;
}

double ManyLetterVector::norm() const { return std::sqrt(norm_squared()); }

double ManyLetterVector::sector_norm_squared(std::size_t n) const {
  double total = 0.0;
  for (const auto& [s, a] : amplitudes_)
    if (s.size() == n) total += std::norm(a);
  return total;
}

std::map<std::size_t, double> ManyLetterVector::sector_weights() const {
  std::map<std::size_t, double> out;
  for (const auto& [s, a] : amplitudes_) out[s.size()] += std::norm(a);
  return out;
}

std::size_t ManyLetterVector::max_length() const {
  // Shortlex order: the last key is among the longest.
  return amplitudes_.empty() ? 0 : amplitudes_.rbegin()->first.size();
}

std::set<std::size_t> ManyLetterVector::lengths() const {
  std::set<std::size_t> out;
  for (const auto& [s, a] : amplitudes_) out.insert(s.size());
  return out;
}

ManyLetterVector ManyLetterVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  ManyLetterVector out = *this;
  out *= 1.0 / n;
  return out;
}

ManyLetterVector ManyLetterVector::pruned(double tolerance) const {
  ManyLetterVector out(alphabet_);
  for (const auto& [s, a] : amplitudes_)
    if (std::abs(a) > tolerance) out.amplitudes_.emplace(s, a);
  return out;
}

ManyLetterVector& ManyLetterVector::operator+=(const ManyLetterVector& other) {
  require_same_alphabet(alphabet_, other.alphabet_, "vector sum");
  for (const auto& [s, a] : other.amplitudes_) amplitudes_[s] += a;
  return *this;
}

ManyLetterVector& ManyLetterVector::operator-=(const ManyLetterVector& other) {
  require_same_alphabet(alphabet_, other.alphabet_, "vector difference");
  for (const auto& [s, a] : other.amplitudes_) amplitudes_[s] -= a;
  return *this;
}

ManyLetterVector& ManyLetterVector::operator*=(Complex factor) {
  for (auto& [s, a] : amplitudes_) a *= factor;
  return *this;
}

Complex inner_product(const Amplitudes& u, const Amplitudes& v) {
  Complex total{};
  if (u.size() <= v.size()) {
    for (const auto& [s, a] : u)
      if (auto it = v.find(s); it != v.end()) total += std::conj(a) * it->second;
  } else {
    for (const auto& [s, b] : v)
      if (auto it = u.find(s); it != u.end()) total += std::conj(it->second) * b;
  }
  return total;
}

Complex inner_product(const ManyLetterVector& u, const ManyLetterVector& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "inner product");
  return inner_product(u.amplitudes(), v.amplitudes());
}

ManyLetterVector tensor_concat(const ManyLetterVector& u, const ManyLetterVector& v, const TruncationConfig& trunc) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "tensor product");
  if (!u.is_zero() && !v.is_zero()) require_within(u.max_length() + v.max_length(), trunc.max_length, "tensor product");
  Amplitudes out;
  for (const auto& [s, a] : u.amplitudes())
    for (const auto& [t, b] : v.amplitudes()) out[s + t] += a * b;
  return ManyLetterVector(u.alphabet(), std::move(out));
}

double length_expectation(const ManyLetterVector& v) {
  if (std::abs(v.norm_squared() - 1.0) > kOperatorTolerance)
    throw InvalidArgument("length expectation: input is not normalized");
  double total = 0.0;
  for (const auto& [s, a] : v.amplitudes()) total += static_cast<double>(s.size()) * std::norm(a);
  return total;
}

double raw_information(const ManyLetterVector& v) { return v.alphabet()->log2_dim() * length_expectation(v); }

ManyLetterVector express_in(const ManyLetterVector& v, const AlphabetPtr& target) {
  if (same_alphabet(v.alphabet(), target)) return ManyLetterVector(target, v.amplitudes());
  if (!v.alphabet()->same_letter_space(*target)) throw AlphabetMismatch("change of basis: alphabets span different letter spaces");
  const Eigen::MatrixXcd m = target->basis().adjoint() * v.alphabet()->basis();
  Amplitudes out;
  for (const auto& [s, a] : v.amplitudes())
    for (const auto& [t, c] : expand_string(s, m)) out[t] += a * c;
  return ManyLetterVector(target, std::move(out));
}

double max_abs_difference(const ManyLetterVector& u, const ManyLetterVector& v) {
  double worst = 0.0;
  for (const auto& [s, a] : u.amplitudes()) worst = std::max(worst, std::abs(a - v.amplitude(s)));
  for (const auto& [s, b] : v.amplitudes()) worst = std::max(worst, std::abs(u.amplitude(s) - b));
  return worst;
}

}  // namespace mlq
