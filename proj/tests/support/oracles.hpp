// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.
#pragma once

#include "cadiv/dual_graph.hpp"
#include "cadiv/rational.hpp"

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using cadiv::Int;
using cadiv::Rat;

/// Evaluates b1 - 1/(b2 - 1/(... - 1/bk)) directly.
inline Rat eval_continued_fraction(const std::vector<std::int64_t>& b) {
  Rat x(b.back());
  for (std::size_t i = b.size() - 1; i-- > 0;) x = Rat(b[i]) - x.reciprocal();
  return x;
}

/// det of a square integer matrix by cofactor-free Bareiss elimination.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  Int sign(1);
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Int(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Sylvester: (-1)^k D_k > 0 for every leading principal minor.
inline bool sylvester_negative_definite(const std::vector<std::vector<std::int64_t>>& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = Int(static_cast<long>(m[i][j]));
    }
    const Int d = bareiss_det(sub);
    if ((k % 2 == 1 ? -d : d) <= 0) return false;
  }
  return true;
}

/// Continuant: n for a chain [b1..bk] is det of the negated intersection matrix.
inline Int continuant(const std::vector<std::int64_t>& b) {
  Int prev(1);
  Int cur(static_cast<long>(b.empty() ? 1 : b[0]));
  if (b.empty()) return cur;
  for (std::size_t i = 1; i < b.size(); ++i) {
    Int next = Int(static_cast<long>(b[i])) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Pullback of a line meeting E_k (1-based) of the A_n chain, written the way
/// it is usually stated: (n-k+1)/(n+1) Σ_{i<=k} i E_i + k/(n+1) Σ_{i=1}^{n-k} (n+1-k-i) E_{k+i}.
inline std::vector<Rat> an_line_pullback(std::int64_t n, std::int64_t k) {
  std::vector<Rat> out;
  for (std::int64_t i = 1; i <= k; ++i) out.push_back(Rat((n - k + 1) * i, n + 1));
  for (std::int64_t i = 1; i <= n - k; ++i) out.push_back(Rat(k * (n + 1 - k - i), n + 1));
  return out;
}

/// Least r >= 1 with r·γ integral.
inline std::int64_t integrality_index(const std::vector<Rat>& gamma) {
  for (std::int64_t r = 1;; ++r) {
    bool ok = true;
    for (const auto& g : gamma) {
      if (!(Rat(r) * g).is_integer()) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
}

/// Path graph E1..En of the given self-intersections.
inline cadiv::WeightedDualGraph path(const std::vector<std::int64_t>& es, const std::string& prefix = "E") {
  cadiv::WeightedDualGraph g;
  for (std::size_t i = 0; i < es.size(); ++i) {
    g.add_vertex(prefix + std::to_string(i + 1), es[i]);
    if (i > 0) g.add_edge(i - 1, i);
  }
  return g;
}

using SemistableKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

/// All (n,a,d,n',a',d') with 2 <= n < n' <= max_n and dd' = k satisfying the
/// five semistable conditions, written out directly.
inline std::set<SemistableKey> semistable_scan(std::int64_t k, std::int64_t max_n) {
  std::set<SemistableKey> out;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t n2 = n + 1; n2 <= max_n; ++n2) {
      if (std::gcd(n, n2) != 1) continue;
      for (std::int64_t d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        const std::int64_t d2 = k / d;
        if (n2 % d != 0 || n % d2 != 0) continue;
        for (std::int64_t a = 1; a < n; ++a) {
          if (std::gcd(a, n) != 1) continue;
          const std::int64_t num = n * n2 + 1 - a * n2;  // nn' - an' - a'n = -1
          if (num % n != 0) continue;
          const std::int64_t a2 = num / n;
          if (a2 < 1 || a2 >= n2 || std::gcd(a2, n2) != 1 || std::gcd(a, a2) != 1) continue;
          if (d * d2 != n2 * n2 * d2 + n * n * d - n * n2 * d * d2) continue;
          out.emplace(n, a, d, n2, a2, d2);
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
