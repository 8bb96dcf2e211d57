// Bounded catalogs: semistable data from the Pell correspondence, normal
// non-semistable germs by brute force over T-singularity chains.
#pragma once

#include "cadiv/classification.hpp"
#include "cadiv/continued_fraction.hpp"
#include "cadiv/dual_graph.hpp"
#include "cadiv/pell.hpp"
#include "cadiv/quotient.hpp"

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

namespace cadiv {

struct PellWitness {
  std::int64_t divisor = 1;  // d | k
  Int x;
  Int y;
};

struct SemistableDatum {
  std::int64_t n = 0, a = 0, d = 0;
  std::int64_t n2 = 0, a2 = 0, d2 = 0;  // n', a', d'
  PellWitness pell;

  TDecomposition p() const { return {n, d, a, false}; }
  TDecomposition p2() const { return {n2, d2, a2, false}; }
  auto key() const { return std::tuple{n, a, d, n2, a2, d2}; }
};

/// Every datum with d d' = k reached from a Pell solution with 0 < |y| <= bound,
/// kept only if it passes classify_semistable. The two points are unordered,
/// so each germ is reported once, with n < n'. Sorted by the 6-tuple.
std::vector<SemistableDatum> enumerate_semistable(std::int64_t k, std::int64_t bound);

struct NormalGerm {
  TDecomposition t;
  HJChain chain;              // resolution chain of 1/(n^2d)(1,and-1)
  std::size_t attach = 0;     // chain index met by the (-1)-curve C
  std::int64_t duval_length = 0;  // A_m chain hanging off C's free side
  WeightedDualGraph graph;
  NeighborhoodVerdict verdict;
};

/// Builds the germ: chain E_1..E_k, C (-1) meeting E_{attach+1}, then an
/// optional (-2)-chain of the given length attached to C.
WeightedDualGraph normal_germ_graph(const HJChain& chain, std::size_t attach, std::int64_t duval_length);

/// 2 <= n <= max_n, 1 <= d <= max_d, every a, every attachment, DuVal tails
/// up to max_chain. Mirror images are reported once.
std::vector<NormalGerm> enumerate_normal_nss(std::int64_t max_n, std::int64_t max_d, std::int64_t max_chain);

}  // namespace cadiv
