// Cyclic quotient surface singularities 1/n(1,a) and the recognizers used by
// the classification: DuVal A_m, T-singularities, degenerate-cusp junctions.
#pragma once

#include "cadiv/continued_fraction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cadiv {

/// 1/n(1,a) with 1 <= a < n and gcd(a, n) = 1. The pair is kept exactly as
/// given; 1/n(1,a) and 1/n(1,a^-1) are the same germ read from opposite ends,
/// which `same_germ` tests explicitly.
class CyclicQuotient {
 public:
  CyclicQuotient(std::int64_t n, std::int64_t a);

  std::int64_t n() const { return n_; }
  std::int64_t a() const { return a_; }

  /// 1/n(1, a^-1): the same singularity with the chain read backwards.
  CyclicQuotient reversed() const;
  /// 1/n(1, -a).
  CyclicQuotient negated() const;

  /// "1/12(1,5)"
  std::string str() const;

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  std::int64_t n_;
  std::int64_t a_;
};

bool same_germ(const CyclicQuotient& p, const CyclicQuotient& q);

/// True when q = 1/n(1,-a) for p = 1/n(1,a): the two branches of an slt point
/// (xy=0)/Z_n(a,-a,1) on the normalization.
bool is_inverse_pair(const CyclicQuotient& p, const CyclicQuotient& q);

HJChain dual_chain(const CyclicQuotient& q);

/// m when q = 1/(m+1)(1,m), the A_m point.
std::optional<std::int64_t> is_duval(const CyclicQuotient& q);

/// A presentation of a singularity as 1/(n^2 d)(1, a n d - 1).
struct TDecomposition {
  std::int64_t n = 1;
  std::int64_t d = 1;
  std::int64_t a = 1;
  /// True when a n d - 1 matched q.a^-1 rather than q.a, i.e. the
  /// decomposition reads the chain from the other end.
  bool reversed = false;

  std::int64_t order() const { return n * n * d; }
  CyclicQuotient quotient() const;
  std::string str() const;

  friend bool operator==(const TDecomposition&, const TDecomposition&) = default;
};

/// Every (n, d, a) with n^2 d = q.n, gcd(a, n) = 1, 1 <= a <= n and
/// a n d - 1 congruent to q.a or q.a^-1. Sorted by n, then d, a, orientation.
/// Empty means q is not a T-singularity. For A-type points this includes n = 1.
std::vector<TDecomposition> t_decompositions(const CyclicQuotient& q);

enum class CuspFamily {
  smooth,              // Q smooth
  duval,               // b = 1: 1/m(1,-1) = A_{m-1}
  b_div_m_plus_1,      // one (-3)
  b_div_2m_plus_1,     // one (-4)
  b_div_m_s_plus_1,    // two (-3)'s, with witness s
};

std::string to_string(CuspFamily f);

struct CuspClass {
  CuspFamily family;
  int multiplicity;                 // m_R(Z) as listed for the family
  std::optional<std::int64_t> s;    // b_div_m_s_plus_1 only

  friend bool operator==(const CuspClass&, const CuspClass&) = default;
};

/// Junction point 1/m(1,-b) stored as the pair (m, b). Smooth is (1, 1).
struct CuspJunction {
  std::int64_t m = 1;
  std::int64_t b = 1;

  static CuspJunction smooth() { return {1, 1}; }
  /// q read from C1's side is 1/m(1, m - b).
  static CuspJunction from_quotient(const CyclicQuotient& q) { return {q.n(), q.n() - q.a()}; }
  bool is_smooth() const { return m == 1; }
  /// 1/m(1, m - b); requires m >= 2.
  CyclicQuotient quotient() const { return {m, m - b}; }
};

/// Every degenerate-cusp family (m, b) belongs to, all s witnesses included.
/// Side condition b != 1 (mod m) is applied to the three non-DuVal families.
std::vector<CuspClass> cusp_class(const CuspJunction& q);
std::vector<CuspClass> cusp_class(const CyclicQuotient& q);

}  // namespace cadiv
