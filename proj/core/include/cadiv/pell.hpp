// Bounded search for integer points on A x^2 - B y^2 = N.
#pragma once

#include "cadiv/rational.hpp"

#include <cstdint>
#include <vector>

namespace cadiv {

inline constexpr std::int64_t kDefaultPellBound = 10'000;

struct PellProblem {
  Int A;  // > 0
  Int B;
  Int N;
};

struct PellSolution {
  Int x;
  Int y;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Every solution with 0 < |y| <= bound, found by scanning y and testing
/// (N + B y^2) / A for an exact square. Sorted by |y|, then x, then y > 0 first.
/// Throws std::invalid_argument if A <= 0 or bound < 1.
std::vector<PellSolution> pell_solve(const PellProblem& p, std::int64_t bound);

}  // namespace cadiv
