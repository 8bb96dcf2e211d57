#include "cadiv/germ.hpp"

#include "cadiv/continued_fraction.hpp"
#include "cadiv/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadiv {

namespace {

RatMatrix exceptional_matrix(const WeightedDualGraph& g, std::span<const std::size_t> exceptional) {
  if (!is_contractible(g, exceptional)) {
    throw NotContractibleError("exceptional curves are not negative definite");
  }
  return RatMatrix::from_int(intersection_matrix(g, exceptional));
}

std::int64_t meets(const WeightedDualGraph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v) ? 1 : 0; }

// Orders a path component end to end, starting from `start`.
VertexSet walk_chain(const WeightedDualGraph& g, const VertexSet& comp, std::size_t start) {
  VertexSet order{start};
  std::size_t prev = start;
  std::size_t cur = start;
  while (order.size() < comp.size()) {
    for (std::size_t w : g.neighbors(cur)) {
      if (w != prev && std::find(comp.begin(), comp.end(), w) != comp.end()) {
        prev = cur;
        cur = w;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

SingularPoint read_point(const WeightedDualGraph& g, const VertexSet& comp, const VertexSet& marked) {
  std::vector<std::size_t> ends;
  for (std::size_t v : comp) {
    std::size_t inner = 0;
    for (std::size_t w : g.neighbors(v)) {
      if (std::find(comp.begin(), comp.end(), w) != comp.end()) ++inner;
    }
    if (inner > 2) {
      throw UnsupportedGraphError("non-cyclic singularity, unsupported: branch at '" + g.vertex(v).id + "'");
    }
    if (inner <= 1) ends.push_back(v);
  }
  const std::size_t edge_count = [&] {
    std::size_t c = 0;
    for (const auto& [u, v] : g.edges()) {
      if (std::find(comp.begin(), comp.end(), u) != comp.end() &&
          std::find(comp.begin(), comp.end(), v) != comp.end()) {
        ++c;
      }
    }
    return c;
  }();
  if (edge_count + 1 != comp.size()) {
    throw UnsupportedGraphError("non-cyclic singularity, unsupported: cycle through '" +
                                g.vertex(comp.front()).id + "'");
  }
  if (comp.size() == 1) ends.push_back(comp.front());

  SingularPoint pt{{}, CyclicQuotient(2, 1), {}};
  for (std::size_t c : marked) {
    std::size_t hits = 0;
    for (std::size_t v : comp) hits += static_cast<std::size_t>(meets(g, c, v));
    if (hits >= 3) {
      throw UnsupportedGraphError("marked curve '" + g.vertex(c).id + "' meets one chain three or more times");
    }
    if (hits > 0) pt.attached.push_back(c);
  }

  // Read away from the first marked curve that meets an end.
  std::size_t start = ends.front();
  bool found = false;
  for (std::size_t c : pt.attached) {
    for (std::size_t e : ends) {
      if (meets(g, c, e)) {
        start = e;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  pt.chain = walk_chain(g, comp, start);

  HJChain chain;
  for (std::size_t v : pt.chain) chain.entries.push_back(-g.vertex(v).e);
  const auto [n, a] = hj_recognize(chain);
  pt.quotient = CyclicQuotient(n, a);
  return pt;
}

}  // namespace

std::vector<Rat> pullback_coeffs(const WeightedDualGraph& g, std::span<const std::size_t> exceptional,
                                 std::size_t c) {
  if (std::find(exceptional.begin(), exceptional.end(), c) != exceptional.end()) {
    throw std::invalid_argument("pullback_coeffs: curve is in the exceptional set");
  }
  if (exceptional.empty()) return {};
  const RatMatrix m = exceptional_matrix(g, exceptional);
  std::vector<Rat> rhs;
  rhs.reserve(exceptional.size());
  for (std::size_t e : exceptional) rhs.emplace_back(-meets(g, c, e));
  return solve(m, rhs);
}

std::vector<Rat> discrepancies(const WeightedDualGraph& g, std::span<const std::size_t> exceptional) {
  if (exceptional.empty()) return {};
  const RatMatrix m = exceptional_matrix(g, exceptional);
  std::vector<Rat> rhs;
  rhs.reserve(exceptional.size());
  for (std::size_t e : exceptional) rhs.emplace_back(-2 - g.vertex(e).e);
  return solve(m, rhs);
}

std::string SingularPoint::location(const WeightedDualGraph& g) const {
  if (attached.empty()) return "isolated";
  if (attached.size() == 1) return "on " + g.vertex(attached.front()).id;
  std::string out;
  for (std::size_t c : attached) {
    if (!out.empty()) out += "∩";
    out += g.vertex(c).id;
  }
  return out;
}

std::size_t GermAnalysis::marked_slot(std::size_t v) const {
  const auto it = std::find(marked.begin(), marked.end(), v);
  if (it == marked.end()) throw std::out_of_range("vertex is not a marked curve");
  return static_cast<std::size_t>(it - marked.begin());
}

std::vector<const SingularPoint*> GermAnalysis::high_index_points() const {
  std::vector<const SingularPoint*> out;
  for (const auto& p : points) {
    if (!p.is_duval()) out.push_back(&p);
  }
  return out;
}

std::vector<const SingularPoint*> GermAnalysis::duval_points() const {
  std::vector<const SingularPoint*> out;
  for (const auto& p : points) {
    if (p.is_duval()) out.push_back(&p);
  }
  return out;
}

GermAnalysis analyze_germ(const WeightedDualGraph& g) {
  GermAnalysis out;
  out.graph = g;
  out.marked = g.marked_vertices();
  out.exceptional = g.exceptional_vertices();
  if (out.marked.empty()) throw GraphError("germ has no marked curve");
  for (std::size_t e : out.exceptional) {
    if (g.vertex(e).e >= -1) {
      throw UnsupportedGraphError("exceptional curve '" + g.vertex(e).id + "' has self-intersection " +
                                  std::to_string(g.vertex(e).e) + ", expected <= -2");
    }
  }
  if (!is_contractible(g, out.exceptional)) {
    throw NotContractibleError("exceptional curves are not negative definite");
  }

  for (const auto& comp : components(g, out.exceptional)) out.points.push_back(read_point(g, comp, out.marked));

  out.discrepancies = discrepancies(g, out.exceptional);
  for (std::size_t c : out.marked) out.pullback.push_back(pullback_coeffs(g, out.exceptional, c));

  const std::size_t k = out.marked.size();
  out.cross_int.assign(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ci = out.marked[i];
    // K_Z·C = g*K_Z·C' = (K_U - Σβ E)·C' with K_U·C' = -2 - C'².
    Rat kc(-2 - g.vertex(ci).e);
    for (std::size_t t = 0; t < out.exceptional.size(); ++t) {
      kc -= out.discrepancies[t] * Rat(meets(g, ci, out.exceptional[t]));
    }
    out.kz_dot.push_back(kc);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t cj = out.marked[j];
      // C_i·C_j = C_i'·g*C_j
      Rat x(i == j ? g.vertex(ci).e : meets(g, ci, cj));
      for (std::size_t t = 0; t < out.exceptional.size(); ++t) {
        x += out.pullback[j][t] * Rat(meets(g, ci, out.exceptional[t]));
      }
      out.cross_int[i][j] = x;
    }
    out.self_int.push_back(out.cross_int[i][i]);
  }
  return out;
}

std::int64_t line_index(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("line_index: need 1 <= k <= n");
  return (n + 1) / gcd(k, n + 1);
}

Rat curve_dot_gamma(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("curve_dot_gamma: need 1 <= k <= n");
  return Rat(k, n + 1);
}

}  // namespace cadiv
