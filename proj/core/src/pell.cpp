#include "cadiv/pell.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadiv {

std::vector<PellSolution> pell_solve(const PellProblem& p, std::int64_t bound) {
  if (p.A <= 0) throw std::invalid_argument("pell_solve: A must be positive");
  if (bound < 1) throw std::invalid_argument("pell_solve: bound must be >= 1");

  std::vector<PellSolution> out;
  for (std::int64_t yv = 1; yv <= bound; ++yv) {
    const Int y = to_int(yv);
    const Int rhs = p.N + p.B * y * y;
    if (rhs < 0) continue;
    if (rhs % p.A != 0) continue;
    const Int x = exact_sqrt(Int(rhs / p.A));
    if (x < 0) continue;
    for (const Int& sy : {y, Int(-y)}) {
      out.push_back({Int(-x), sy});
      if (x != 0) out.push_back({x, sy});
    }
  }
  std::sort(out.begin(), out.end(), [](const PellSolution& l, const PellSolution& r) {
    const Int ly = abs(l.y), ry = abs(r.y);
    if (ly != ry) return ly < ry;
    if (l.x != r.x) return l.x < r.x;
    return l.y > r.y;
  });
  return out;
}

}  // namespace cadiv
