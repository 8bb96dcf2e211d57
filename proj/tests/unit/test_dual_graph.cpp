#include "cadiv/dual_graph.hpp"
#include "cadiv/germ.hpp"
#include "cadiv/linear_algebra.hpp"
#include "support/germs.hpp"
#include "support/oracles.hpp"

#include <algorithm>

#include "doctest.h"

using namespace cadiv;

namespace {

std::vector<Rat> rats(std::initializer_list<std::pair<std::int64_t, std::int64_t>> xs) {
  std::vector<Rat> out;
  for (const auto& [p, q] : xs) out.emplace_back(p, q);
  return out;
}

// (C' + Σγ_i E_i)·E_j over the full intersection matrix.
void check_orthogonality(const GermAnalysis& a) {
  for (std::size_t i = 0; i < a.marked.size(); ++i) {
    for (std::size_t j = 0; j < a.exceptional.size(); ++j) {
      Rat s(a.graph.adjacent(a.marked[i], a.exceptional[j]) ? 1 : 0);
      for (std::size_t t = 0; t < a.exceptional.size(); ++t) {
        const std::size_t et = a.exceptional[t], ej = a.exceptional[j];
        const std::int64_t dot = et == ej ? a.graph.vertex(et).e : (a.graph.adjacent(et, ej) ? 1 : 0);
        s += a.pullback[i][t] * Rat(dot);
      }
      CHECK(s == Rat(0));
    }
  }
}

// g*C·g*D computed on the whole configuration must equal C_i·C_j.
void check_projection_formula(const GermAnalysis& a) {
  const auto all = a.graph.all_vertices();
  const RatMatrix m = RatMatrix::from_int(intersection_matrix(a.graph, all));
  auto full = [&](std::size_t i) {
    std::vector<Rat> v(a.graph.size());
    v[a.marked[i]] = Rat(1);
    for (std::size_t t = 0; t < a.exceptional.size(); ++t) v[a.exceptional[t]] = a.pullback[i][t];
    return v;
  };
  for (std::size_t i = 0; i < a.marked.size(); ++i) {
    for (std::size_t j = 0; j < a.marked.size(); ++j) {
      CHECK(bilinear(m, full(i), full(j)) == a.cross_int[i][j]);
    }
  }
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  WeightedDualGraph g;
  g.add_vertex("a", -2);
  g.add_vertex("b", -2);
  g.add_edge("a", "b");
  CHECK_THROWS_AS(g.add_edge("a", "b"), GraphError);
  CHECK_THROWS_AS(g.add_edge("b", "a"), GraphError);
  CHECK_THROWS_AS(g.add_edge("a", "a"), GraphError);
  CHECK_THROWS_AS(g.add_edge("a", "z"), GraphError);
  CHECK_THROWS_AS(g.add_vertex("a", -3), GraphError);
  CHECK_THROWS_AS(g.set_glue(0, 1), GraphError);  // not marked
}

TEST_CASE("intersection_matrix") {
  const auto a2 = oracle::path({-2, -2});
  CHECK(intersection_matrix(a2, a2.all_vertices()) == IntMatrix{{-2, 1}, {1, -2}});
  const auto ex1 = germs::example1();
  CHECK(intersection_matrix(ex1, ex1.exceptional_vertices()) == IntMatrix{{-3, 1, 0}, {1, -2, 1}, {0, 1, -3}});
  WeightedDualGraph one;
  one.add_vertex("C", -1, true);
  CHECK(intersection_matrix(one, one.all_vertices()) == IntMatrix{{-1}});
}

TEST_CASE("is_contractible") {
  const auto ex1 = germs::example1();
  CHECK(is_contractible(ex1, ex1.exceptional_vertices()));
  WeightedDualGraph one;
  one.add_vertex("C", -1, true);
  CHECK(is_contractible(one, one.all_vertices()));
  for (std::int64_t m = 0; m <= 10; ++m) {
    const auto g = germs::b_equals_one(m);
    CHECK_FALSE(is_contractible(g, g.all_vertices()));
  }
  // Two separate components are tested separately.
  auto two = oracle::path({-2, -2});
  two.add_vertex("F", -3);
  CHECK(is_contractible(two, two.all_vertices()));
}

TEST_CASE("is_contractible agrees with Sylvester minors on small chains") {
  for (std::int64_t len = 1; len <= 4; ++len) {
    std::vector<std::int64_t> es(static_cast<std::size_t>(len), -1);
    for (;;) {
      const auto g = oracle::path(es);
      CHECK(is_contractible(g, g.all_vertices()) ==
            oracle::sylvester_negative_definite(intersection_matrix(g, g.all_vertices())));
      std::size_t i = 0;
      while (i < es.size() && es[i] == -4) es[i++] = -1;
      if (i == es.size()) break;
      --es[i];
    }
  }
}

TEST_CASE("is_contractible is monotone under subsets") {
  for (const auto& g : {germs::example1(), germs::example3(), germs::semistable(), germs::nonnormal()}) {
    const std::size_t n = g.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(i);
      }
      if (!is_contractible(g, s)) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        VertexSet t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!t.empty()) CHECK(is_contractible(g, t));
      }
    }
  }
}

TEST_CASE("pullback_coeffs") {
  const auto ex3 = germs::example3();
  const auto exc = ex3.exceptional_vertices();
  CHECK(pullback_coeffs(ex3, exc, *ex3.index_of("C")) ==
        rats({{2, 25}, {4, 25}, {14, 25}, {24, 25}, {9, 25}, {3, 25}}));

  auto g = oracle::path({-2, -2, -2});
  const auto far = g.add_vertex("D", -1, true);
  const auto e = VertexSet{0, 1, 2};
  CHECK(pullback_coeffs(g, e, far) == std::vector<Rat>(3, Rat(0)));

  auto bad = germs::b_equals_one(2);
  const auto d = bad.add_vertex("D", -1, true);
  bad.add_edge(1, d);
  CHECK_THROWS_AS(pullback_coeffs(bad, VertexSet{0, 1, 2, 3}, d), NotContractibleError);
}

TEST_CASE("pullback of a line through an A_n chain matches the closed form, n <= 20") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      auto g = oracle::path(std::vector<std::int64_t>(static_cast<std::size_t>(n), -2));
      const auto l = g.add_vertex("l", -1, true);
      g.add_edge(static_cast<std::size_t>(k - 1), l);
      const auto gamma = pullback_coeffs(g, g.exceptional_vertices(), l);
      CHECK(gamma == oracle::an_line_pullback(n, k));
      for (const auto& x : gamma) CHECK(x.sign() >= 0);
    }
  }
}

TEST_CASE("line_index") {
  CHECK(line_index(2, 1) == 3);
  CHECK(line_index(3, 2) == 2);
  CHECK(line_index(1, 1) == 2);
  CHECK_THROWS(line_index(3, 4));
  CHECK_THROWS(line_index(3, 0));
}

TEST_CASE("line_index is the integrality index of the pullback, n <= 30") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      auto g = oracle::path(std::vector<std::int64_t>(static_cast<std::size_t>(n), -2));
      const auto l = g.add_vertex("l", -1, true);
      g.add_edge(static_cast<std::size_t>(k - 1), l);
      CHECK(line_index(n, k) == oracle::integrality_index(pullback_coeffs(g, g.exceptional_vertices(), l)));
    }
  }
}

TEST_CASE("curve_dot_gamma") {
  CHECK(curve_dot_gamma(4, 2) == Rat(2, 5));
  CHECK(curve_dot_gamma(1, 1) == Rat(1, 2));
  CHECK(curve_dot_gamma(5, 5) == Rat(5, 6));
  CHECK_THROWS(curve_dot_gamma(2, 3));
}

TEST_CASE("curve_dot_gamma against the pullback oracle, n <= 20") {
  // Γ meets E_k, C meets the E_n end: C·Γ = C·f*Γ = coefficient of E_n in f*Γ.
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      auto g = oracle::path(std::vector<std::int64_t>(static_cast<std::size_t>(n), -2));
      const auto gamma_curve = g.add_vertex("G", -1, true);
      g.add_edge(static_cast<std::size_t>(k - 1), gamma_curve);
      const auto c = g.add_vertex("C", -1, true);
      g.add_edge(static_cast<std::size_t>(n - 1), c);
      const auto a = analyze_germ(g);
      CHECK(a.cross_int[a.marked_slot(c)][a.marked_slot(gamma_curve)] == curve_dot_gamma(n, k));
    }
  }
}

TEST_CASE("discrepancies") {
  const auto ex3 = germs::example3();
  CHECK(discrepancies(ex3, ex3.exceptional_vertices()) ==
        rats({{-2, 5}, {-4, 5}, {-4, 5}, {-4, 5}, {-4, 5}, {-3, 5}}));
  const auto a4 = oracle::path({-2, -2, -2, -2});
  CHECK(discrepancies(a4, a4.all_vertices()) == std::vector<Rat>(4, Rat(0)));
  const auto three = oracle::path({-3});
  CHECK(discrepancies(three, three.all_vertices()) == rats({{-1, 3}}));
}

TEST_CASE("analyze_germ: Example 1") {
  const auto a = analyze_germ(germs::example1());
  REQUIRE(a.points.size() == 1);
  CHECK(a.points[0].quotient == CyclicQuotient(12, 5));
  CHECK(a.kz_dot[0] == Rat(-1, 2));
  CHECK(a.self_int[0] == Rat(-1, 4));
  check_orthogonality(a);
  check_projection_formula(a);
}

TEST_CASE("analyze_germ: semistable example") {
  const auto a = analyze_germ(germs::semistable());
  REQUIRE(a.points.size() == 2);
  CHECK(a.points[0].quotient == CyclicQuotient(12, 5));
  CHECK(a.points[1].quotient == CyclicQuotient(9, 5));
  CHECK(a.kz_dot[0] == Rat(-1, 6));
  CHECK(a.self_int[0] == Rat(-1, 36));
  check_orthogonality(a);
  check_projection_formula(a);
}

TEST_CASE("analyze_germ: non-normal example") {
  const auto a = analyze_germ(germs::nonnormal());
  const auto c1 = a.marked_slot(*a.graph.index_of("C1"));
  const auto c2 = a.marked_slot(*a.graph.index_of("C2"));
  CHECK(a.self_int[c1] == Rat(-1, 9));
  CHECK(a.self_int[c2] == Rat(-11, 9));
  CHECK(a.cross_int[c1][c2] == Rat(1, 3));
  CHECK(a.cross_int[c2][c1] == Rat(1, 3));
  CHECK(a.kz_dot[c1] == Rat(-1, 3));
  CHECK(a.kz_dot[c2] == Rat(7, 9));
  std::vector<std::string> seen;
  for (const auto& p : a.points) seen.push_back(p.quotient.str() + " " + p.location(a.graph));
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::string>{"1/3(1,1) C2∩C1", "1/9(1,4) on C2", "1/9(1,5) on C1"});
  check_orthogonality(a);
  check_projection_formula(a);
}

TEST_CASE("analyze_germ rejects unsupported input") {
  // Branch point inside the exceptional set (D_4 shape).
  WeightedDualGraph d4;
  for (const char* id : {"A", "B", "C", "D"}) d4.add_vertex(id, -2);
  d4.add_edge("A", "B");
  d4.add_edge("A", "C");
  d4.add_edge("A", "D");
  const auto c = d4.add_vertex("X", -1, true);
  d4.add_edge(1, c);
  CHECK_THROWS_AS(analyze_germ(d4), UnsupportedGraphError);

  // Not contractible.
  auto big = oracle::path({-1, -1});
  big.add_vertex("C", -1, true);
  big.add_edge(1, 2);
  CHECK_THROWS_AS(analyze_germ(big), UnsupportedGraphError);  // E² = -1 rejected first
  auto flat = oracle::path({-2, -2, -2, -2});
  flat.add_edge(0, 3);
  flat.add_vertex("C", -1, true);
  flat.add_edge(0, 4);
  CHECK_THROWS_AS(analyze_germ(flat), NotContractibleError);

  // No marked curve.
  CHECK_THROWS_AS(analyze_germ(oracle::path({-2})), GraphError);

  // Marked curve meeting one chain three times.
  auto triple = oracle::path({-3, -3, -3});
  const auto t = triple.add_vertex("C", -1, true);
  for (std::size_t i = 0; i < 3; ++i) triple.add_edge(i, t);
  CHECK_THROWS_AS(analyze_germ(triple), UnsupportedGraphError);
}

TEST_CASE("C1·C2 = 1/n for chains with curves at both ends") {
  // Entries in [2,5], length <= 5.
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<std::int64_t> b(len, 2);
    for (;;) {
      WeightedDualGraph g;
      const auto c1 = g.add_vertex("C1", -1, true);
      for (std::size_t i = 0; i < len; ++i) {
        g.add_vertex("E" + std::to_string(i + 1), -b[i]);
        g.add_edge(i, i + 1);
      }
      const auto c2 = g.add_vertex("C2", -1, true);
      g.add_edge(len, c2);
      const auto a = analyze_germ(g);
      const Int n = oracle::continuant(b);
      CHECK(a.cross_int[a.marked_slot(c1)][a.marked_slot(c2)] == Rat(Int(1), n));
      CHECK(a.points.front().quotient.n() == to_int64(n));
      ++checked;
      std::size_t i = 0;
      while (i < len && b[i] == 5) b[i++] = 2;
      if (i == len) break;
      ++b[i];
    }
  }
  CHECK(checked == 4 + 16 + 64 + 256 + 1024);
}

TEST_CASE("blow_down_to_minimal") {
  const auto ex1 = germs::example1();
  const auto r1 = blow_down_to_minimal(ex1, ex1.all_vertices());
  CHECK(r1.size() == 2);
  CHECK(is_minus_two_chain(r1));

  WeightedDualGraph one;
  one.add_vertex("C", -1, true);
  CHECK(blow_down_to_minimal(one, one.all_vertices()).empty());

  const auto ex3 = germs::example3();
  const auto r3 = blow_down_to_minimal(ex3, ex3.all_vertices());
  CHECK(r3.size() == 3);
  CHECK(is_minus_two_chain(r3));

  // A (-1)-curve with three neighbours is not a simple blow-down.
  WeightedDualGraph star;
  star.add_vertex("X", -1, true);
  for (const char* id : {"A", "B", "C"}) {
    star.add_vertex(id, -3);
    star.add_edge("X", id);
  }
  CHECK_THROWS_AS(blow_down_to_minimal(star, star.all_vertices()), UnsupportedGraphError);

  // Restricting to a subset only blows down inside it.
  const auto sub = blow_down_to_minimal(ex1, ex1.exceptional_vertices());
  CHECK(sub.size() == 3);
}
