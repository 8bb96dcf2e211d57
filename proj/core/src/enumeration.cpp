#include "cadiv/enumeration.hpp"

#include "cadiv/germ.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cadiv {

std::vector<SemistableDatum> enumerate_semistable(std::int64_t k, std::int64_t bound) {
  if (k < 2) throw std::invalid_argument("enumerate_semistable: k must be >= 2");
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>,
           SemistableDatum>
      found;
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const std::int64_t d2 = k / d;
    const PellProblem prob{to_int(k / d), to_int(d * (k - 4)), Int(4)};
    for (const auto& sol : pell_solve(prob, bound)) {
      // x = 2n/d' - n', y = n'/d
      const Int n2_big = Int(to_int(d)) * sol.y;
      const Int twice_n = Int(to_int(d2)) * (sol.x + n2_big);
      if (n2_big < 2 || twice_n < 4 || twice_n % 2 != 0) continue;
      const std::int64_t n2 = to_int64(n2_big);
      const std::int64_t n = to_int64(twice_n / 2);
      // (P, P') and (P', P) are the same germ; keep n < n'.
      if (n >= n2 || gcd(n, n2) != 1) continue;
      const std::int64_t a = mod_inverse(mod(n2, n), n);
      const Int a2_num = to_int(n) * to_int(n2) + 1 - to_int(a) * to_int(n2);
      if (a2_num % to_int(n) != 0) continue;
      const std::int64_t a2 = to_int64(a2_num / to_int(n));
      if (a < 1 || a2 < 1) continue;

      SemistableDatum datum{n, a, d, n2, a2, d2, PellWitness{d, sol.x, sol.y}};
      if (!classify_semistable(datum.p(), datum.p2()).passed()) continue;
      found.try_emplace(datum.key(), datum);
    }
  }
  std::vector<SemistableDatum> out;
  out.reserve(found.size());
  for (auto& [key, datum] : found) out.push_back(std::move(datum));
  return out;
}

WeightedDualGraph normal_germ_graph(const HJChain& chain, std::size_t attach, std::int64_t duval_length) {
  if (attach >= chain.size()) throw std::invalid_argument("normal_germ_graph: attachment out of range");
  WeightedDualGraph g;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    g.add_vertex("E" + std::to_string(i + 1), -chain.entries[i]);
    if (i > 0) g.add_edge(i - 1, i);
  }
  const std::size_t c = g.add_vertex("C", -1, true);
  g.add_edge(attach, c);
  std::size_t prev = c;
  for (std::int64_t j = 0; j < duval_length; ++j) {
    const std::size_t v = g.add_vertex("F" + std::to_string(j + 1), -2);
    g.add_edge(prev, v);
    prev = v;
  }
  return g;
}

std::vector<NormalGerm> enumerate_normal_nss(std::int64_t max_n, std::int64_t max_d, std::int64_t max_chain) {
  if (max_n < 1 || max_d < 1 || max_chain < 0) throw std::invalid_argument("enumerate_normal_nss: bad bounds");
  std::vector<NormalGerm> out;
  std::map<std::tuple<std::vector<std::int64_t>, std::size_t, std::int64_t>, bool> seen;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t d = 1; d <= max_d; ++d) {
      const std::int64_t order = n * n * d;
      for (std::int64_t a = 1; a < n; ++a) {
        if (gcd(a, n) != 1) continue;
        const TDecomposition t{n, d, a, false};
        const HJChain chain = hj_expand(order, mod(a * n * d - 1, order));
        const HJChain rev = chain.reversed();
        for (std::size_t pos = 0; pos < chain.size(); ++pos) {
          for (std::int64_t len = 0; len <= max_chain; ++len) {
            auto key = std::tuple{chain.entries, pos, len};
            auto mirror = std::tuple{rev.entries, chain.size() - 1 - pos, len};
            if (seen.contains(key) || seen.contains(mirror)) continue;
            seen[key] = true;

            WeightedDualGraph g = normal_germ_graph(chain, pos, len);
            NeighborhoodVerdict verdict;
            try {
              verdict = classify_normal_nss(analyze_germ(g));
            } catch (const std::exception&) {
              continue;
            }
            if (!verdict.passed()) continue;
            out.push_back({t, chain, pos, len, std::move(g), std::move(verdict)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace cadiv
