#include "cadiv/report.hpp"

#include <sstream>

namespace cadiv::io {

namespace {

ojson rat_list(const std::vector<Rat>& v) {
  ojson out = ojson::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string join(const std::vector<Rat>& v) {
  std::string out;
  for (const auto& r : v) {
    if (!out.empty()) out += ", ";
    out += r.str();
  }
  return "(" + out + ")";
}

std::string chain_of(const WeightedDualGraph& g, const VertexSet& chain) {
  HJChain c;
  for (std::size_t v : chain) c.entries.push_back(-g.vertex(v).e);
  return c.str();
}

ojson point_json(const GermAnalysis& a, const SingularPoint& p) {
  ojson t = ojson::array();
  for (const auto& d : t_decompositions(p.quotient)) {
    t.push_back({{"n", d.n}, {"d", d.d}, {"a", d.a}, {"reversed", d.reversed}});
  }
  ojson chain = ojson::array();
  for (std::size_t v : p.chain) chain.push_back(a.graph.vertex(v).id);
  ojson out{{"quotient", p.quotient.str()},
            {"n", p.quotient.n()},
            {"a", p.quotient.a()},
            {"location", p.location(a.graph)},
            {"chain", chain},
            {"hj", chain_of(a.graph, p.chain)},
            {"t_decompositions", t}};
  if (const auto m = is_duval(p.quotient)) out["duval"] = "A_" + std::to_string(*m);
  return out;
}

std::string t_text(const CyclicQuotient& q) {
  std::string out;
  for (const auto& d : t_decompositions(q)) {
    if (d.n < 2) continue;
    if (!out.empty()) out += ", ";
    out += d.str();
  }
  return out;
}

}  // namespace

ojson analysis_json(const GermAnalysis& a) {
  ojson out;
  ojson pts = ojson::array();
  for (const auto& p : a.points) pts.push_back(point_json(a, p));
  out["singular_points"] = pts;

  ojson exc = ojson::array();
  for (std::size_t v : a.exceptional) exc.push_back(a.graph.vertex(v).id);
  out["exceptional"] = exc;
  out["discrepancies"] = rat_list(a.discrepancies);

  ojson curves = ojson::array();
  for (std::size_t i = 0; i < a.marked.size(); ++i) {
    ojson cross = ojson::object();
    for (std::size_t j = 0; j < a.marked.size(); ++j) {
      if (j != i) cross[a.graph.vertex(a.marked[j]).id] = a.cross_int[i][j].str();
    }
    curves.push_back({{"id", a.graph.vertex(a.marked[i]).id},
                      {"pullback", rat_list(a.pullback[i])},
                      {"K.C", a.kz_dot[i].str()},
                      {"C^2", a.self_int[i].str()},
                      {"intersections", cross}});
  }
  out["curves"] = curves;
  return out;
}

ojson verdict_json(const NeighborhoodVerdict& v) {
  ojson conds = ojson::array();
  for (const auto& c : v.conditions) {
    ojson wit = ojson::object();
    for (const auto& w : c.witnesses) wit[w.name] = w.value.str();
    conds.push_back({{"tag", c.tag}, {"description", c.description}, {"holds", c.holds}, {"witnesses", wit}});
  }
  ojson extras = ojson::object();
  for (const auto& w : v.extras) extras[w.name] = w.value.str();
  ojson out{{"class", to_string(v.class_tag)}, {"pass", v.passed()}, {"conditions", conds}, {"index_n", v.index_n}};
  out["multiplicity_mu"] = v.multiplicity_mu ? ojson(v.multiplicity_mu->str()) : ojson(nullptr);
  out["target_d"] = v.target_d ? ojson(*v.target_d) : ojson(nullptr);
  out["X"] = v.target_d ? ojson("cA_" + std::to_string(*v.target_d - 1)) : ojson(nullptr);
  out["s_position"] = v.s_position ? ojson(*v.s_position) : ojson(nullptr);
  out["extras"] = extras;
  return out;
}

ojson report_json(const ReportInput& r) {
  ojson out;
  out["input"] = to_json(*r.document);
  out["analysis"] = analysis_json(*r.analysis);
  out["verdict"] = verdict_json(*r.verdict);
  ojson evaluated = ojson::array();
  for (const auto& c : r.verdict->conditions) evaluated.push_back(c.tag);
  out["provenance"] = {{"class_source", r.class_source}, {"evaluated", evaluated}};
  if (r.axial) out["provenance"]["axial"] = {r.axial->first, r.axial->second};
  return out;
}

std::string report_text(const ReportInput& r) {
  const GermAnalysis& a = *r.analysis;
  const NeighborhoodVerdict& v = *r.verdict;
  std::ostringstream os;
  if (r.document->name) os << "germ: " << *r.document->name << "\n";
  os << "curves: " << a.graph.size() << " (" << a.marked.size() << " marked)";
  if (const auto& glue = a.graph.glue()) {
    os << ", glue " << a.graph.vertex(glue->first).id << "=" << a.graph.vertex(glue->second).id;
  }
  os << "\n\nsingular points:\n";
  for (const auto& p : a.points) {
    os << "  " << p.quotient.str() << "  " << p.location(a.graph) << "  chain " << chain_of(a.graph, p.chain);
    if (const auto m = is_duval(p.quotient)) {
      os << "  A_" << *m;
    } else if (const auto t = t_text(p.quotient); !t.empty()) {
      os << "  T: " << t;
    }
    os << "\n";
  }
  os << "\ndiscrepancies: " << join(a.discrepancies) << "\n";
  for (std::size_t i = 0; i < a.marked.size(); ++i) {
    const auto& id = a.graph.vertex(a.marked[i]).id;
    os << id << ": K.C = " << a.kz_dot[i] << ", C^2 = " << a.self_int[i] << ", pullback " << join(a.pullback[i])
       << "\n";
    for (std::size_t j = i + 1; j < a.marked.size(); ++j) {
      os << id << "." << a.graph.vertex(a.marked[j]).id << " = " << a.cross_int[i][j] << "\n";
    }
  }

  os << "\nclass: " << to_string(v.class_tag) << " (" << r.class_source << ")\n";
  for (const auto& c : v.conditions) {
    os << "  [" << (c.holds ? "pass" : "FAIL") << "] " << c.tag << ": " << c.description;
    if (!c.witnesses.empty()) {
      os << "  {";
      for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        os << (i ? ", " : "") << c.witnesses[i].name << " = " << c.witnesses[i].value;
      }
      os << "}";
    }
    os << "\n";
  }
  for (const auto& w : v.extras) os << "  " << w.name << " = " << w.value << "\n";
  os << "index n: " << v.index_n << "\n";
  os << "mu: " << (v.multiplicity_mu ? v.multiplicity_mu->str() : "undefined") << "\n";
  if (v.target_d) os << "X: cA_" << *v.target_d - 1 << "\n";
  if (v.s_position) os << "s: " << *v.s_position << "\n";
  os << "verdict: " << (v.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string to_dot(const GraphDocument& doc) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(doc.name.value_or("germ")) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& v : doc.vertices) {
    os << "  " << quote(v.id) << " [label=\"" << v.e << "\", xlabel=" << quote(v.id);
    if (v.marked) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (const auto& [u, v] : doc.edges) os << "  " << quote(u) << " -- " << quote(v) << ";\n";
  if (doc.glue) os << "  " << quote(doc.glue->first) << " -- " << quote(doc.glue->second) << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

ojson semistable_catalog(std::int64_t k, std::int64_t bound, const std::vector<SemistableDatum>& data) {
  ojson records = ojson::array();
  for (const auto& d : data) {
    const auto v = classify_semistable(d.p(), d.p2());
    records.push_back({{"n", d.n},
                       {"a", d.a},
                       {"d", d.d},
                       {"n'", d.n2},
                       {"a'", d.a2},
                       {"d'", d.d2},
                       {"P", d.p().quotient().str()},
                       {"P'", d.p2().quotient().str()},
                       {"X", "cA_" + std::to_string(d.d * d.d2 - 1)},
                       {"pell", {{"divisor", d.pell.divisor}, {"x", d.pell.x.get_str()}, {"y", d.pell.y.get_str()}}},
                       {"verdict", verdict_json(v)}});
  }
  std::string note;
  if (!data.empty()) {
    note = "complete up to bound";
  } else if (k == 2) {
    note = "empty (proved: cA_1)";
  } else {
    note = "empty up to bound";
  }
  return {{"kind", "semistable"}, {"k", k}, {"bound", bound}, {"count", data.size()}, {"note", note},
          {"records", records}};
}

ojson normal_catalog(std::int64_t max_n, std::int64_t max_d, std::int64_t max_chain,
                     const std::vector<NormalGerm>& germs) {
  ojson records = ojson::array();
  for (const auto& g : germs) {
    records.push_back({{"n", g.t.n},
                       {"d", g.t.d},
                       {"a", g.t.a},
                       {"P", g.t.quotient().str()},
                       {"chain", g.chain.str()},
                       {"attach", g.attach},
                       {"duval_length", g.duval_length},
                       {"graph", to_json(from_graph(g.graph))},
                       {"verdict", verdict_json(g.verdict)}});
  }
  return {{"kind", "normal"},
          {"max_n", max_n},
          {"max_d", max_d},
          {"max_chain", max_chain},
          {"count", germs.size()},
          {"note", germs.empty() ? "empty up to bound" : "complete up to bound"},
          {"records", records}};
}

}  // namespace cadiv::io
