#include "cadiv/quotient.hpp"

#include "cadiv/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cadiv {

CyclicQuotient::CyclicQuotient(std::int64_t n, std::int64_t a) : n_(n), a_(a) {
  if (n < 2 || a < 1 || a >= n || gcd(n, a) != 1) {
    throw std::invalid_argument("CyclicQuotient: invalid 1/" + std::to_string(n) + "(1," +
                                std::to_string(a) + ")");
  }
}

CyclicQuotient CyclicQuotient::reversed() const { return {n_, mod_inverse(a_, n_)}; }

CyclicQuotient CyclicQuotient::negated() const { return {n_, n_ - a_}; }

std::string CyclicQuotient::str() const {
  return "1/" + std::to_string(n_) + "(1," + std::to_string(a_) + ")";
}

bool same_germ(const CyclicQuotient& p, const CyclicQuotient& q) {
  return p == q || p == q.reversed();
}

bool is_inverse_pair(const CyclicQuotient& p, const CyclicQuotient& q) {
  return p.n() == q.n() && p.a() + q.a() == p.n();
}

HJChain dual_chain(const CyclicQuotient& q) { return hj_expand(q.n(), q.a()); }

std::optional<std::int64_t> is_duval(const CyclicQuotient& q) {
  if (q.a() == q.n() - 1) return q.n() - 1;
  return std::nullopt;
}

CyclicQuotient TDecomposition::quotient() const {
  const std::int64_t order = n * n * d;
  return {order, mod(a * n * d - 1, order)};
}

std::string TDecomposition::str() const {
  return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", a=" + std::to_string(a) +
         (reversed ? ", reversed)" : ")");
}

std::vector<TDecomposition> t_decompositions(const CyclicQuotient& q) {
  const std::int64_t order = q.n();
  const std::int64_t inverse = mod_inverse(q.a(), order);
  std::vector<TDecomposition> out;
  for (std::int64_t n = 1; n * n <= order; ++n) {
    if (order % (n * n) != 0) continue;
    const std::int64_t d = order / (n * n);
    for (std::int64_t a = 1; a <= n; ++a) {
      if (gcd(a, n) != 1) continue;
      const std::int64_t w = mod(a * n * d - 1, order);
      if (w == q.a()) out.push_back({n, d, a, false});
      if (w == inverse) out.push_back({n, d, a, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const TDecomposition& l, const TDecomposition& r) {
    return std::tie(l.n, l.d, l.a, l.reversed) < std::tie(r.n, r.d, r.a, r.reversed);
  });
  return out;
}

std::string to_string(CuspFamily f) {
  switch (f) {
    case CuspFamily::smooth: return "smooth";
    case CuspFamily::duval: return "duval";
    case CuspFamily::b_div_m_plus_1: return "b_div_m_plus_1";
    case CuspFamily::b_div_2m_plus_1: return "b_div_2m_plus_1";
    case CuspFamily::b_div_m_s_plus_1: return "b_div_m_s_plus_1";
  }
  return "unknown";
}

std::vector<CuspClass> cusp_class(const CuspJunction& q) {
  const std::int64_t m = q.m;
  const std::int64_t b = q.b;
  if (m == 1) return {{CuspFamily::smooth, 2, std::nullopt}};
  if (b < 1 || b >= m || gcd(m, b) != 1) {
    throw std::invalid_argument("cusp_class: invalid junction 1/" + std::to_string(m) + "(1,-" +
                                std::to_string(b) + ")");
  }

  std::vector<CuspClass> out;
  if (b == 1) out.push_back({CuspFamily::duval, 2, std::nullopt});
  if (mod(b, m) == 1) return out;

  if ((m + 1) % b == 0) out.push_back({CuspFamily::b_div_m_plus_1, 3, std::nullopt});
  if ((2 * m + 1) % b == 0) out.push_back({CuspFamily::b_div_2m_plus_1, 4, std::nullopt});
  // b >= 2s + 1 bounds the witness search.
  for (std::int64_t s = 1; 2 * s + 1 <= b; ++s) {
    if ((m + s + 1) % b == 0 && (b - s) % (s + 1) == 0) {
      out.push_back({CuspFamily::b_div_m_s_plus_1, 4, s});
    }
  }
  return out;
}

std::vector<CuspClass> cusp_class(const CyclicQuotient& q) {
  return cusp_class(CuspJunction::from_quotient(q));
}

}  // namespace cadiv
