// Condition checkers for the three classes of divisorial extremal
// neighborhoods over cA points, evaluated on exact germ data.
#pragma once

#include "cadiv/germ.hpp"
#include "cadiv/quotient.hpp"
#include "cadiv/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cadiv {

/// The germ does not have the shape a classifier expects (wrong class,
/// missing T-decomposition, unrecognized points).
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NeighborhoodClass { normal_nss, nonnormal_nss, semistable };
std::string to_string(NeighborhoodClass c);

struct Witness {
  std::string name;
  Rat value;
};

struct Condition {
  std::string tag;          // e.g. "normal1.cond2"
  std::string description;
  bool holds = false;
  std::vector<Witness> witnesses;
};

struct NeighborhoodVerdict {
  NeighborhoodClass class_tag = NeighborhoodClass::normal_nss;
  std::vector<Condition> conditions;
  std::int64_t index_n = 1;
  std::optional<Rat> multiplicity_mu;
  std::optional<std::int64_t> target_d;    // X is cA_{d-1}
  std::optional<std::int64_t> s_position;
  std::vector<Witness> extras;

  bool passed() const;
  const Condition* condition(const std::string& tag) const;
  std::optional<Rat> extra(const std::string& name) const;
};

/// m_Γ = -(K·C)²/C². Throws std::domain_error unless c2 < 0.
Rat multiplicity(const Rat& kc, const Rat& c2);

/// One marked curve, no glue.
NeighborhoodVerdict classify_normal_nss(const GermAnalysis& a);

/// The arithmetic conditions on two T-points 1/(n²d)(1,and-1), 1/(n'²d')(1,a'n'd'-1).
NeighborhoodVerdict classify_semistable(const TDecomposition& p, const TDecomposition& q);

/// Semistable checks on a germ with one marked curve and two high-index points:
/// picks the decomposition pair that passes (if any) and compares the
/// closed-form K·C, C² with the germ's own values.
NeighborhoodVerdict classify_semistable_germ(const GermAnalysis& a);

struct SPosition {
  std::int64_t m;  // S is A_m
  std::int64_t s;  // Γ meets E_s
};
/// m = nk + n'k' - 1, s = nk'/d' - n'k/d + kn. Throws std::invalid_argument
/// for k, k' < 1 or a non-integral s.
SPosition semistable_s_position(const TDecomposition& p, const TDecomposition& q, std::int64_t k,
                                std::int64_t k2);

/// Glued germ: C1, C2 are the glue ends in that order.
NeighborhoodVerdict classify_nonnormal(const GermAnalysis& a);

struct CuspInvariants {
  std::vector<std::int64_t> f_dot_delta;  // F_i·Δ
  std::int64_t delta_sq = 0;              // Δ²
  std::int64_t mult = 2;
  std::int64_t embdim = 3;
  bool admissible = false;                // -4 <= Δ² <= -1
};
/// `delta` holds the E_i² along the chain, `attachments` how many times the
/// double curve B meets each E_i.
CuspInvariants cusp_invariants(const std::vector<std::int64_t>& delta, const std::vector<std::int64_t>& attachments);

/// Solves 2k + 3k' = m + 1, k + k' = s; present iff k, k' >= 1.
std::optional<std::pair<std::int64_t, std::int64_t>> ca2_existence(std::int64_t m, std::int64_t s);

/// n = (ν+1)/gcd(k, ν+1) for S of type A_ν with Γ through E_k.
std::int64_t normal_index_from_section(std::int64_t nu, std::int64_t k);

}  // namespace cadiv
