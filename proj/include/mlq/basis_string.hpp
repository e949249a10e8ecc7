#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mlq {

// A finite sequence of basis-letter indices. The empty string is the empty
// message. Ordering is shortlex: shorter strings first, then lexicographic, so
// an ordered container groups strings by length sector.
class BasisString {
 public:
  using Letter = std::uint32_t;

  BasisString() = default;
  BasisString(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BasisString(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses digit strings such as "0110"; "" and "-" give the empty string.
  static BasisString from_digits(std::string_view digits);

  // The string of `length` letters encoding `index` in base `radix`, most
  // significant letter first (the lexicographic rank of the string).
  static BasisString from_index(std::size_t index, std::size_t radix, std::size_t length);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Lexicographic rank among strings of the same length over `radix` letters.
  std::size_t index(std::size_t radix) const;

  bool starts_with(const BasisString& prefix) const;
  BasisString substr(std::size_t pos, std::size_t count) const;

  // Digits for letters < 10, otherwise dot-separated; "-" for the empty string.
  std::string to_string() const;

  friend BasisString operator+(const BasisString& a, const BasisString& b);
  friend bool operator==(const BasisString&, const BasisString&) = default;
  friend std::strong_ordering operator<=>(const BasisString& a, const BasisString& b);

 private:
  std::vector<Letter> letters_;
};

// All strings of exactly `length` letters over `radix` letters, in
// lexicographic order. Throws GuardExceeded beyond kEnumerationGuard.
std::vector<BasisString> all_strings(std::size_t radix, std::size_t length);

// radix^length, throwing GuardExceeded when it exceeds `guard`.
std::size_t guarded_power(std::size_t radix, std::size_t length, std::size_t guard);

}  // namespace mlq
