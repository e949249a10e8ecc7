#include "mlq/basis_string.hpp"

#include <algorithm>

#include "mlq/errors.hpp"
#include "mlq/tolerances.hpp"
#include "mlq/truncation.hpp"

namespace mlq {

BasisString BasisString::from_digits(std::string_view digits) {
  if (digits == "-") return {};
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("basis string: non-digit character '" + std::string(1, c) + "'");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return BasisString(std::move(letters));
}

BasisString BasisString::from_index(std::size_t index, std::size_t radix, std::size_t length) {
  std::vector<Letter> letters(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    letters[i] = static_cast<Letter>(index % radix);
    index /= radix;
  }
  if (index != 0) throw InvalidArgument("basis string: index does not fit in the requested length");
  return BasisString(std::move(letters));
}

std::size_t BasisString::index(std::size_t radix) const {
  std::size_t idx = 0;
  for (Letter l : letters_) idx = idx * radix + l;
  return idx;
}

bool BasisString::starts_with(const BasisString& prefix) const {
  return prefix.size() <= size() && std::equal(prefix.begin(), prefix.end(), begin());
}

BasisString BasisString::substr(std::size_t pos, std::size_t count) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return BasisString(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::string BasisString::to_string() const {
  if (letters_.empty()) return "-";
  const bool digits = std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l < 10; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back('.');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

BasisString operator+(const BasisString& a, const BasisString& b) {
  std::vector<BasisString::Letter> letters;
  letters.reserve(a.size() + b.size());
  letters.insert(letters.end(), a.begin(), a.end());
  letters.insert(letters.end(), b.begin(), b.end());
  return BasisString(std::move(letters));
}

std::strong_ordering operator<=>(const BasisString& a, const BasisString& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t guarded_power(std::size_t radix, std::size_t length, std::size_t guard) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (radix != 0 && count > guard / radix) {
      throw GuardExceeded("enumeration of " + std::to_string(radix) + "^" + std::to_string(length) +
                          " strings exceeds the guard of " + std::to_string(guard));
    }
    count *= radix;
  }
  if (count > guard) throw GuardExceeded("enumeration exceeds the guard of " + std::to_string(guard));
  return count;
}

std::vector<BasisString> all_strings(std::size_t radix, std::size_t length) {
  const std::size_t count = guarded_power(radix, length, kEnumerationGuard);
  std::vector<BasisString> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(BasisString::from_index(i, radix, length));
  return out;
}

void require_within(std::size_t length, std::size_t limit, const char* what) {
  if (length > limit) {
    throw TruncationOverflow(std::string(what) + ": length " + std::to_string(length) + " exceeds the truncation " +
                             std::to_string(limit));
  }
}

std::vector<BasisString> strings_with_lengths(std::size_t radix, const std::vector<std::size_t>& lengths) {
  std::vector<std::size_t> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::size_t total = 0;
  for (std::size_t n : sorted) {
    total += guarded_power(radix, n, kEnumerationGuard);
    if (total > kEnumerationGuard) throw GuardExceeded("truncated domain exceeds the enumeration guard");
  }
  std::vector<BasisString> out;
  out.reserve(total);
  for (std::size_t n : sorted) {
    auto sector = all_strings(radix, n);
    out.insert(out.end(), std::make_move_iterator(sector.begin()), std::make_move_iterator(sector.end()));
  }
  return out;
}

std::vector<std::size_t> lengths_up_to(std::size_t max_length) {
  std::vector<std::size_t> out(max_length + 1);
  for (std::size_t n = 0; n <= max_length; ++n) out[n] = n;
  return out;
}

}  // namespace mlq
