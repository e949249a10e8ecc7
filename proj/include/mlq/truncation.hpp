#pragma once

#include <cstddef>
#include <vector>

#include "mlq/basis_string.hpp"

namespace mlq {

// Every sum over string lengths stops at max_length. Produced code strings may
// be longer than source strings (translations into smaller alphabets, escape
// prefixes), so they are capped separately by max_code_length.
struct TruncationConfig {
  std::size_t max_length = 8;
  std::size_t max_code_length = 0;  // 0: same as max_length

  std::size_t code_limit() const noexcept { return max_code_length == 0 ? max_length : max_code_length; }
};

// Throws TruncationOverflow when `length` exceeds `limit`.
void require_within(std::size_t length, std::size_t limit, const char* what);

// All strings over `radix` letters whose length is in `lengths`, shortlex.
std::vector<BasisString> strings_with_lengths(std::size_t radix, const std::vector<std::size_t>& lengths);

// Lengths 0..max_length.
std::vector<std::size_t> lengths_up_to(std::size_t max_length);

}  // namespace mlq
