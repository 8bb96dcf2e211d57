// Hirzebruch-Jung continued fractions n/a = b1 - 1/(b2 - 1/(... - 1/bk)).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cadiv {

/// Resolution chain of a cyclic quotient singularity, read left to right.
/// Entries are the negated self-intersections, each >= 2. Empty means smooth.
struct HJChain {
  std::vector<std::int64_t> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  HJChain reversed() const;
  /// "[3,2,3]"
  std::string str() const;

  friend bool operator==(const HJChain&, const HJChain&) = default;
};

/// Expansion of n/a for 1 <= a < n, gcd(a, n) = 1.
HJChain hj_expand(std::int64_t n, std::int64_t a);

/// Inverse of hj_expand. Reversing the chain yields (n, a^-1 mod n).
/// Throws std::invalid_argument on an empty chain or an entry <= 1,
/// std::overflow_error when n leaves the 64-bit range.
std::pair<std::int64_t, std::int64_t> hj_recognize(const HJChain& chain);

}  // namespace cadiv
