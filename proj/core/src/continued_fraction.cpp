#include "cadiv/continued_fraction.hpp"

#include "cadiv/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cadiv {

HJChain HJChain::reversed() const {
  HJChain r{entries};
  std::reverse(r.entries.begin(), r.entries.end());
  return r;
}

std::string HJChain::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i != 0) os << ',';
    os << entries[i];
  }
  os << ']';
  return os.str();
}

HJChain hj_expand(std::int64_t n, std::int64_t a) {
  if (a <= 0 || a >= n) {
    throw std::invalid_argument("hj_expand: need 1 <= a < n, got n=" + std::to_string(n) +
                                ", a=" + std::to_string(a));
  }
  if (gcd(n, a) != 1) {
    throw std::invalid_argument("hj_expand: gcd(" + std::to_string(n) + ", " + std::to_string(a) +
                                ") != 1");
  }
  HJChain chain;
  // n/a = b - (b*a - n)/a with b = ceil(n/a); continue with a/(b*a - n).
  while (a > 0) {
    const std::int64_t b = (n + a - 1) / a;
    chain.entries.push_back(b);
    const std::int64_t next = b * a - n;
    n = a;
    a = next;
  }
  return chain;
}

std::pair<std::int64_t, std::int64_t> hj_recognize(const HJChain& chain) {
  if (chain.empty()) throw std::invalid_argument("hj_recognize: empty chain");
  for (const auto b : chain.entries) {
    if (b <= 1) {
      throw std::invalid_argument("hj_recognize: entry " + std::to_string(b) + " <= 1 in " +
                                  chain.str());
    }
  }
  // Fold from the right: p/q = b - 1/(p'/q') = (b p' - q') / p'.
  Int p = to_int(chain.entries.back());
  Int q = 1;
  for (auto it = chain.entries.rbegin() + 1; it != chain.entries.rend(); ++it) {
    Int next = to_int(*it) * p - q;
    q = p;
    p = next;
  }
  return {to_int64(p), to_int64(q)};
}

}  // namespace cadiv
