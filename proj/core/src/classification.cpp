#include "cadiv/classification.hpp"

#include "cadiv/linear_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cadiv {

namespace {

Witness w(std::string name, const Rat& v) { return {std::move(name), v}; }

Rat rat_of_bool(bool b) { return Rat(b ? 1 : 0); }

// d from blowing the full configuration down to a (-2)-chain A_{d-1}.
std::optional<std::int64_t> blowdown_d(const WeightedDualGraph& g) {
  try {
    const auto all = g.all_vertices();
    const WeightedDualGraph residue = blow_down_to_minimal(g, all);
    if (!is_minus_two_chain(residue)) return std::nullopt;
    return static_cast<std::int64_t>(residue.size()) + 1;
  } catch (const UnsupportedGraphError&) {
    return std::nullopt;
  }
}

bool is_path(const WeightedDualGraph& g) {
  if (g.empty()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  const auto all = g.all_vertices();
  return g.edges().size() + 1 == g.size() && components(g, all).size() == 1;
}

std::vector<TDecomposition> high_index_decompositions(const CyclicQuotient& q) {
  std::vector<TDecomposition> out;
  for (const auto& t : t_decompositions(q)) {
    if (t.n >= 2) out.push_back(t);
  }
  // Decompositions read in the chain's own orientation first.
  std::stable_sort(out.begin(), out.end(),
                   [](const TDecomposition& x, const TDecomposition& y) { return !x.reversed && y.reversed; });
  return out;
}

void require_single_curve(const GermAnalysis& a, const char* who) {
  if (a.graph.glue()) throw ClassificationError(std::string(who) + ": germ is glued (non-normal)");
  if (a.marked.size() != 1) throw ClassificationError(std::string(who) + ": expected exactly one marked curve");
}

}  // namespace

std::string to_string(NeighborhoodClass c) {
  switch (c) {
    case NeighborhoodClass::normal_nss:
      return "normal_nss";
    case NeighborhoodClass::nonnormal_nss:
      return "nonnormal_nss";
    case NeighborhoodClass::semistable:
      return "semistable";
  }
  return "unknown";
}

bool NeighborhoodVerdict::passed() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

const Condition* NeighborhoodVerdict::condition(const std::string& tag) const {
  for (const auto& c : conditions) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

std::optional<Rat> NeighborhoodVerdict::extra(const std::string& name) const {
  for (const auto& x : extras) {
    if (x.name == name) return x.value;
  }
  return std::nullopt;
}

Rat multiplicity(const Rat& kc, const Rat& c2) {
  if (c2.sign() >= 0) throw std::domain_error("multiplicity: C^2 must be negative");
  return -(kc * kc) / c2;
}

NeighborhoodVerdict classify_normal_nss(const GermAnalysis& a) {
  require_single_curve(a, "classify_normal_nss");
  const auto high = a.high_index_points();
  const auto duval = a.duval_points();
  if (high.empty()) throw ClassificationError("classify_normal_nss: no high index point");
  const auto decomps = high_index_decompositions(high.front()->quotient);
  if (decomps.empty()) {
    throw ClassificationError("classify_normal_nss: " + high.front()->quotient.str() + " is not a T-singularity");
  }

  const Rat& kc = a.kz_dot.front();
  const Rat& c2 = a.self_int.front();
  auto cond2_for = [&](const TDecomposition& t) {
    return kc == Rat(-1, t.n) && c2 == Rat(-1, t.n * t.n);
  };
  TDecomposition t = decomps.front();
  for (const auto& cand : decomps) {
    if (cond2_for(cand)) {
      t = cand;
      break;
    }
  }

  NeighborhoodVerdict v;
  v.class_tag = NeighborhoodClass::normal_nss;
  v.index_n = t.n;

  v.conditions.push_back({"normal1.cond1",
                          "one high index point 1/(n^2d)(1,and-1) and at most one DuVal point",
                          high.size() == 1 && duval.size() <= 1,
                          {w("high_index_points", Rat(static_cast<std::int64_t>(high.size()))),
                           w("duval_points", Rat(static_cast<std::int64_t>(duval.size()))), w("n", Rat(t.n)),
                           w("d", Rat(t.d)), w("a", Rat(t.a))}});
  v.conditions.push_back({"normal1.cond2", "K.C = -1/n and C^2 = -1/n^2", cond2_for(t),
                          {w("K.C", kc), w("C^2", c2), w("-1/n", Rat(-1, t.n)), w("-1/n^2", Rat(-1, t.n * t.n))}});

  const auto bd = blowdown_d(a.graph);
  v.conditions.push_back({"normal2.part2", "configuration blows down to a (-2)-chain A_{d-1}", bd.has_value(),
                          {w("d", Rat(bd.value_or(0)))}});
  v.target_d = bd;
  if (c2.sign() < 0) v.multiplicity_mu = multiplicity(kc, c2);

  v.extras = {w("n", Rat(t.n)), w("d", Rat(t.d)), w("a", Rat(t.a)), w("reversed", rat_of_bool(t.reversed))};
  return v;
}

NeighborhoodVerdict classify_semistable(const TDecomposition& p, const TDecomposition& q) {
  const std::int64_t n = p.n, a = p.a, d = p.d;
  const std::int64_t n2 = q.n, a2 = q.a, d2 = q.d;

  NeighborhoodVerdict v;
  v.class_tag = NeighborhoodClass::semistable;
  v.index_n = n * n2;

  const bool t_points = n >= 2 && n2 >= 2 && gcd(a, n) == 1 && gcd(a2, n2) == 1 && d >= 1 && d2 >= 1;
  v.conditions.push_back({"semistable1.cond1", "two T-points of index > 1", t_points,
                          {w("n", Rat(n)), w("d", Rat(d)), w("a", Rat(a)), w("n'", Rat(n2)), w("d'", Rat(d2)),
                           w("a'", Rat(a2))}});
  v.conditions.push_back({"semistable1.cond2", "(n,n') = (a,a') = 1", gcd(n, n2) == 1 && gcd(a, a2) == 1,
                          {w("(n,n')", Rat(gcd(n, n2))), w("(a,a')", Rat(gcd(a, a2)))}});
  v.conditions.push_back({"semistable1.cond3", "d | n' and d' | n", n2 % d == 0 && n % d2 == 0,
                          {w("n' mod d", Rat(n2 % d)), w("n mod d'", Rat(n % d2))}});

  const Int nn(to_int(n)), nn2(to_int(n2)), dd(to_int(d)), dd2(to_int(d2));
  const Int c4 = nn * nn2 - to_int(a) * nn2 - to_int(a2) * nn;
  v.conditions.push_back({"semistable1.cond4", "nn' - an' - a'n = -1", c4 == -1, {w("nn'-an'-a'n", Rat(c4))}});

  const Int lhs5 = dd * dd2;
  const Int rhs5 = nn2 * nn2 * dd2 + nn * nn * dd - nn * nn2 * dd * dd2;
  v.conditions.push_back({"semistable1.cond5", "dd' = n'^2 d' + n^2 d - nn'dd'", lhs5 == rhs5,
                          {w("dd'", Rat(lhs5)), w("n'^2d'+n^2d-nn'dd'", Rat(rhs5))}});

  const Rat kc(c4, nn * nn2);
  const Int den = nn * nn * nn2 * nn2 * dd * dd2;
  const Rat c2(nn * nn2 * dd * dd2 - nn2 * nn2 * dd2 - nn * nn * dd, den);
  const Rat c2_printed(nn * nn2 * dd * dd2 - nn2 * nn2 * dd2 - nn * nn * dd2, den);

  v.target_d = d * d2;
  if (c2.sign() < 0) v.multiplicity_mu = multiplicity(kc, c2);
  v.extras = {w("K.C", kc), w("C^2", c2), w("C^2_as_printed", c2_printed),
              w("C^2_printed_mismatch", rat_of_bool(c2_printed != c2))};
  return v;
}

NeighborhoodVerdict classify_semistable_germ(const GermAnalysis& a) {
  require_single_curve(a, "classify_semistable_germ");
  const auto high = a.high_index_points();
  if (high.size() != 2) throw ClassificationError("classify_semistable_germ: expected two high index points");
  const auto dp = high_index_decompositions(high[0]->quotient);
  const auto dq = high_index_decompositions(high[1]->quotient);
  if (dp.empty() || dq.empty()) throw ClassificationError("classify_semistable_germ: a point is not a T-singularity");

  std::optional<NeighborhoodVerdict> chosen;
  for (const auto& p : dp) {
    for (const auto& q : dq) {
      auto v = classify_semistable(p, q);
      if (v.passed()) {
        chosen = std::move(v);
        break;
      }
    }
    if (chosen) break;
  }
  NeighborhoodVerdict v = chosen ? *chosen : classify_semistable(dp.front(), dq.front());

  const Rat& kc = a.kz_dot.front();
  const Rat& c2 = a.self_int.front();
  const bool only_two = a.points.size() == 2;
  v.conditions.front().holds = v.conditions.front().holds && only_two;
  v.conditions.front().witnesses.push_back(w("singular_points", Rat(static_cast<std::int64_t>(a.points.size()))));

  const Rat kc_formula = *v.extra("K.C");
  const Rat c2_formula = *v.extra("C^2");
  v.conditions.push_back({"semistable1.kc", "K.C on the germ equals 1 - a/n - a'/n'", kc == kc_formula,
                          {w("K.C", kc), w("formula", kc_formula)}});
  v.conditions.push_back({"semistable1.c2", "C^2 on the germ equals (nn'dd' - n'^2d' - n^2d)/(n^2n'^2dd')",
                          c2 == c2_formula, {w("C^2", c2), w("formula", c2_formula)}});

  v.multiplicity_mu = c2.sign() < 0 ? std::optional<Rat>(multiplicity(kc, c2)) : std::nullopt;
  v.extras.push_back(w("germ_K.C", kc));
  v.extras.push_back(w("germ_C^2", c2));
  if (const auto bd = blowdown_d(a.graph)) v.extras.push_back(w("blowdown_d", Rat(*bd)));
  return v;
}

SPosition semistable_s_position(const TDecomposition& p, const TDecomposition& q, std::int64_t k,
                                std::int64_t k2) {
  if (k < 1 || k2 < 1) throw std::invalid_argument("semistable_s_position: axial multiplicities must be >= 1");
  const Rat s = Rat(p.n * k2, q.d) - Rat(q.n * k, p.d) + Rat(k * p.n);
  if (!s.is_integer()) throw std::invalid_argument("semistable_s_position: s = " + s.str() + " is not integral");
  return {p.n * k + q.n * k2 - 1, to_int64(s.numerator())};
}

NeighborhoodVerdict classify_nonnormal(const GermAnalysis& a) {
  const auto& glue = a.graph.glue();
  if (!glue) throw ClassificationError("classify_nonnormal: germ has no glue");
  if (a.marked.size() != 2) throw ClassificationError("classify_nonnormal: expected exactly two marked curves");
  const std::size_t c1 = glue->first;
  const std::size_t c2 = glue->second;

  const SingularPoint* p1 = nullptr;
  const SingularPoint* p2 = nullptr;
  const SingularPoint* qpt = nullptr;
  for (const auto& pt : a.points) {
    const bool on1 = std::find(pt.attached.begin(), pt.attached.end(), c1) != pt.attached.end();
    const bool on2 = std::find(pt.attached.begin(), pt.attached.end(), c2) != pt.attached.end();
    const SingularPoint** slot = on1 && on2 ? &qpt : on1 ? &p1 : on2 ? &p2 : nullptr;
    if (slot == nullptr || *slot != nullptr) {
      throw ClassificationError("classify_nonnormal: expected singular points P1 on C1, P2 on C2, Q on both");
    }
    *slot = &pt;
  }
  if (p1 == nullptr || p2 == nullptr) throw ClassificationError("classify_nonnormal: missing P1 or P2");

  const CyclicQuotient& q1 = p1->quotient;
  const CyclicQuotient& q2 = p2->quotient;
  if (!is_inverse_pair(q1, q2)) {
    throw ClassificationError("classify_nonnormal: " + q1.str() + " and " + q2.str() + " are not 1/n(1,a), 1/n(1,-a)");
  }
  const std::int64_t n = q1.n();
  const std::int64_t an = q1.a();

  CuspJunction junction = CuspJunction::smooth();
  if (qpt != nullptr) {
    // Read Q from C1's side.
    const bool from_c1 = a.graph.adjacent(c1, qpt->chain.front());
    junction = CuspJunction::from_quotient(from_c1 ? qpt->quotient : qpt->quotient.reversed());
  }
  const auto families = cusp_class(junction);
  if (families.empty()) {
    throw ClassificationError("classify_nonnormal: junction 1/" + std::to_string(junction.m) + "(1,-" +
                              std::to_string(junction.b) + ") is not a degenerate cusp normalization");
  }
  const std::int64_t m = junction.m;
  const std::int64_t b = junction.b;

  const std::size_t s1 = a.marked_slot(c1);
  const std::size_t s2 = a.marked_slot(c2);
  const Rat& x11 = a.cross_int[s1][s1];
  const Rat& x22 = a.cross_int[s2][s2];
  const Rat& x12 = a.cross_int[s1][s2];
  const Rat& k1 = a.kz_dot[s1];
  const Rat& k2 = a.kz_dot[s2];

  NeighborhoodVerdict v;
  v.class_tag = NeighborhoodClass::nonnormal_nss;
  v.index_n = n;

  const bool meet_once = qpt == nullptr ? a.graph.adjacent(c1, c2) : !a.graph.adjacent(c1, c2);
  v.conditions.push_back({"nonnormal1.cond1", "C1 and C2 meet in exactly one point", meet_once && x12.sign() > 0,
                          {w("C1.C2", x12)}});
  v.conditions.push_back({"nonnormal1.cond2", "P1, P2 an inverse pair, Q a cusp normalization, chain graph",
                          is_path(a.graph),
                          {w("n", Rat(n)), w("a", Rat(an)), w("m", Rat(m)), w("b", Rat(b)),
                           w("m_R", Rat(static_cast<std::int64_t>(families.front().multiplicity)))}});

  const Rat diff_sq = x11 + x22 - Rat(2) * x12;
  const Rat rhs3 = Rat(n * n) * (x12 * x12 - x11 * x22);
  v.conditions.push_back({"nonnormal1.cond3", "(C1-C2)^2 = n^2[(C1.C2)^2 - C1^2 C2^2]", diff_sq == rhs3,
                          {w("(C1-C2)^2", diff_sq), w("n^2[(C1.C2)^2-C1^2C2^2]", rhs3)}});

  const std::int64_t den = an * m - (b + 1) * n;
  const std::int64_t u = m + n * n;
  const std::int64_t t = b + 1 + an * n;
  const bool cond4 = den != 0 && u % den == 0 && t % den == 0;
  v.conditions.push_back({"nonnormal1.cond4", "am-(b+1)n divides m+n^2 and b+1+an", cond4,
                          {w("am-(b+1)n", Rat(den)), w("m+n^2", Rat(u)), w("b+1+an", Rat(t))}});

  // K = f*K_T + x1 C1 + x2 C2, intersected with C1 and C2.
  RatMatrix gram(2, 2);
  gram(0, 0) = x11;
  gram(0, 1) = gram(1, 0) = x12;
  gram(1, 1) = x22;
  const std::vector<Rat> kk{k1, k2};
  const auto x = solve(gram, kk);
  const Rat& x1 = x[0];
  const Rat& x2 = x[1];
  v.multiplicity_mu = (x1 + x2 + Rat(2)) / Rat(n);

  const Rat target(-1, n);
  const Rat adj1 = k1 + x11 + x12;
  const Rat adj2 = k2 + x12 + x22;
  v.conditions.push_back({"nonnormal1.subadjunction", "C_i.(K + C1 + C2) = -1/n", adj1 == target && adj2 == target,
                          {w("C1.(K+C1+C2)", adj1), w("C2.(K+C1+C2)", adj2), w("-1/n", target)}});

  bool cartier = false;
  if (x1.is_integer()) {
    const Int xi = x1.numerator();
    const Int at = to_int(an);
    const Int nt = to_int(n);
    const Int e1 = at * xi + at + 1;
    const Int e2 = (nt - at) * (nt - 2 - xi) + nt - at + 1;
    cartier = e1 % nt == 0 && e2 % nt == 0;
    v.conditions.push_back({"nonnormal1.cartier", "n | a x1 + a + 1 and n | (n-a)(n-2-x1) + n-a+1", cartier,
                            {w("a x1+a+1", Rat(e1)), w("(n-a)(n-2-x1)+n-a+1", Rat(e2))}});
  } else {
    v.conditions.push_back({"nonnormal1.cartier", "n | a x1 + a + 1 and n | (n-a)(n-2-x1) + n-a+1", false,
                            {w("x1", x1)}});
  }

  const std::int64_t kappa = n * m / gcd(m, b + 1);
  const Rat nu = diff_sq * Rat(kappa);
  std::optional<std::int64_t> d;
  if (nu.is_integer() && nu.sign() != 0) {
    const std::int64_t num = std::abs(to_int64(nu.numerator())) * m;
    d = num / gcd(num, kappa);
  }
  v.conditions.push_back({"nonnormal2.part3", "nu = (C1-C2)^2 kappa is a nonzero integer", d.has_value(),
                          {w("kappa", Rat(kappa)), w("nu", nu)}});
  v.target_d = d;

  v.extras = {w("x1", x1), w("x2", x2), w("n-2-x1", Rat(n - 2) - x1), w("kappa", Rat(kappa)), w("nu", nu)};
  if (den != 0) v.extras.push_back(w("x1_closed_form", Rat(-1) - Rat(u, den)));
  if (const auto bd = blowdown_d(a.graph)) v.extras.push_back(w("blowdown_d", Rat(*bd)));
  return v;
}

CuspInvariants cusp_invariants(const std::vector<std::int64_t>& delta, const std::vector<std::int64_t>& attachments) {
  if (delta.empty()) throw std::invalid_argument("cusp_invariants: empty chain");
  if (attachments.size() != delta.size()) throw std::invalid_argument("cusp_invariants: size mismatch");
  CuspInvariants out;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    out.f_dot_delta.push_back(delta[i] + 2 - attachments[i]);
    sum += delta[i];
  }
  out.delta_sq = sum + 2 * static_cast<std::int64_t>(delta.size() - 1);
  out.mult = std::max<std::int64_t>(2, -out.delta_sq);
  out.embdim = std::max<std::int64_t>(3, -out.delta_sq);
  out.admissible = out.delta_sq >= -4 && out.delta_sq <= -1;
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> ca2_existence(std::int64_t m, std::int64_t s) {
  if (m < 1 || s < 1 || s > m) throw std::invalid_argument("ca2_existence: need m >= 1 and 1 <= s <= m");
  const std::int64_t k = 3 * s - m - 1;
  const std::int64_t k2 = s - k;
  if (k < 1 || k2 < 1) return std::nullopt;
  return std::pair{k, k2};
}

std::int64_t normal_index_from_section(std::int64_t nu, std::int64_t k) {
  if (nu < 1 || k < 1 || k > nu) throw std::invalid_argument("normal_index_from_section: need 1 <= k <= nu");
  return (nu + 1) / gcd(k, nu + 1);
}

}  // namespace cadiv
