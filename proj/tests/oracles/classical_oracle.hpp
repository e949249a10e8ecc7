#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

inline double entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

struct Typical {
  std::vector<std::vector<std::size_t>> members;  // lexicographic
  double total = 0.0;
};

// Every string of length n, kept when 2^{-n(H+delta)} < p < 2^{-n(H-delta)}.
inline Typical typical_set(const std::vector<double>& p, std::size_t n, double delta) {
  const double h = entropy(p);
  const double lo = std::exp2(-static_cast<double>(n) * (h + delta));
  const double hi = std::exp2(-static_cast<double>(n) * (h - delta));
  Typical out;
  std::vector<std::size_t> s(n, 0);
  while (true) {
    double prob = 1.0;
    for (auto x : s) prob *= p[x];
    if (lo < prob && prob < hi) {
      out.members.push_back(s);
      out.total += prob;
    }
    std::size_t i = n;
    while (i > 0 && s[i - 1] + 1 == p.size()) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
  return out;
}

// Minimum expected length over all binary prefix codes. A length vector is
// realizable by a prefix code iff its Kraft sum is at most one.
inline double optimal_prefix_length(const std::vector<double>& p) {
  const std::size_t n = p.size();
  if (n == 1) return 1.0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> len(n, 1);
  while (true) {
    double kraft = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      kraft += std::ldexp(1.0, -static_cast<int>(len[i]));
      mean += p[i] * static_cast<double>(len[i]);
    }
    if (kraft <= 1.0 && mean < best) best = mean;
    std::size_t i = 0;
    while (i < n && len[i] == n - 1) len[i++] = 1;
    if (i == n) break;
    ++len[i];
  }
  return best;
}

}  // namespace oracle
