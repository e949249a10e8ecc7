#pragma once

#include <cstddef>

namespace mlq {

// Normalization, probability sums and density-matrix invariants.
inline constexpr double kStateTolerance = 1e-12;
// Operator identities: Kraus completeness, isometry, round trips.
inline constexpr double kOperatorTolerance = 1e-10;
// Eigenvalues at or below this are treated as zero (0 log 0 = 0).
inline constexpr double kEigenCutoff = 1e-12;
// Rank cutoff for Gram-matrix orthonormalization of alphabets.
inline constexpr double kRankCutoff = 1e-10;
// Largest number of strings any exhaustive enumeration may visit.
inline constexpr std::size_t kEnumerationGuard = 10'000'000;

}  // namespace mlq
