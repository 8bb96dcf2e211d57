// Contraction data of a germ C ⊂ Z: the exceptional (unmarked) curves are
// contracted to cyclic quotient points, the marked curves survive.
#pragma once

#include "cadiv/dual_graph.hpp"
#include "cadiv/quotient.hpp"
#include "cadiv/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cadiv {

/// γ with (C' + Σ γ_i E_i)·E_j = 0 for every j in `exceptional`, in that order.
/// Throws NotContractibleError when `exceptional` is not negative definite.
std::vector<Rat> pullback_coeffs(const WeightedDualGraph& g, std::span<const std::size_t> exceptional,
                                 std::size_t c);

/// β with K_U = g*K_Z + Σ β_i E_i, i.e. Σ β_i (E_i·E_j) = -2 - E_j².
std::vector<Rat> discrepancies(const WeightedDualGraph& g, std::span<const std::size_t> exceptional);

struct SingularPoint {
  VertexSet chain;             // graph vertices in reading order
  CyclicQuotient quotient;     // hj_recognize of the chain in that order
  VertexSet attached;          // marked curves meeting the chain
  /// "on C" / "C1∩C2" / "isolated", by marked-curve ids.
  std::string location(const WeightedDualGraph& g) const;
  bool is_duval() const { return cadiv::is_duval(quotient).has_value(); }
};

struct GermAnalysis {
  WeightedDualGraph graph;
  VertexSet marked;                        // graph indices of the marked curves
  VertexSet exceptional;                   // graph indices of E_1, E_2, ...
  std::vector<SingularPoint> points;
  std::vector<std::vector<Rat>> pullback;  // pullback[i]: γ of marked[i]
  std::vector<Rat> discrepancies;
  std::vector<Rat> kz_dot;                 // K_Z·C_i
  std::vector<Rat> self_int;               // C_i²
  std::vector<std::vector<Rat>> cross_int; // C_i·C_j, diagonal = self_int

  /// Position of graph vertex v among `marked`; throws if v is not marked.
  std::size_t marked_slot(std::size_t v) const;
  /// Points whose chain is not an A_m chain.
  std::vector<const SingularPoint*> high_index_points() const;
  std::vector<const SingularPoint*> duval_points() const;
};

/// Rejects: no marked curve, an exceptional curve with E² >= -1, a
/// non-contractible exceptional set, a component that is not a chain, a
/// marked curve meeting a component three or more times.
GermAnalysis analyze_germ(const WeightedDualGraph& g);

/// Index of a line through E_k of an A_n point: (n+1)/gcd(k, n+1).
std::int64_t line_index(std::int64_t n, std::int64_t k);

/// C·Γ = k/(n+1) for Γ meeting E_k of an A_n chain whose E_n end meets C.
Rat curve_dot_gamma(std::int64_t n, std::int64_t k);

}  // namespace cadiv
