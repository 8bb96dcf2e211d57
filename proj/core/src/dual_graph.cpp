#include "cadiv/dual_graph.hpp"

#include "cadiv/linear_algebra.hpp"

#include <algorithm>
#include <queue>

namespace cadiv {

std::size_t WeightedDualGraph::add_vertex(std::string id, std::int64_t e, bool marked) {
  if (id.empty()) throw GraphError("vertex id must be nonempty");
  if (index_of(id)) throw GraphError("duplicate vertex id '" + id + "'");
  vertices_.push_back({std::move(id), e, marked});
  adj_.emplace_back();
  return vertices_.size() - 1;
}

void WeightedDualGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw GraphError("edge references a missing vertex");
  if (u == v) throw GraphError("loop at '" + vertices_[u].id + "'");
  if (adjacent(u, v)) {
    throw GraphError("repeated edge '" + vertices_[u].id + "'-'" + vertices_[v].id + "'");
  }
  edges_.emplace_back(u, v);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void WeightedDualGraph::add_edge(const std::string& u, const std::string& v) {
  const auto iu = index_of(u);
  const auto iv = index_of(v);
  if (!iu) throw GraphError("edge references unknown id '" + u + "'");
  if (!iv) throw GraphError("edge references unknown id '" + v + "'");
  add_edge(*iu, *iv);
}

void WeightedDualGraph::set_glue(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw GraphError("glue references a missing vertex");
  if (u == v) throw GraphError("glue needs two distinct curves");
  if (!vertices_[u].marked || !vertices_[v].marked) throw GraphError("glue must join two marked curves");
  glue_ = Edge{u, v};
}

void WeightedDualGraph::set_self_intersection(std::size_t v, std::int64_t e) { vertices_.at(v).e = e; }

bool WeightedDualGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& n = adj_.at(u);
  return std::find(n.begin(), n.end(), v) != n.end();
}

std::optional<std::size_t> WeightedDualGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

VertexSet WeightedDualGraph::all_vertices() const {
  VertexSet out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = i;
  return out;
}

VertexSet WeightedDualGraph::marked_vertices() const {
  VertexSet out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (vertices_[i].marked) out.push_back(i);
  }
  return out;
}

VertexSet WeightedDualGraph::exceptional_vertices() const {
  VertexSet out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!vertices_[i].marked) out.push_back(i);
  }
  return out;
}

WeightedDualGraph WeightedDualGraph::induced(std::span<const std::size_t> subset) const {
  WeightedDualGraph out;
  std::vector<std::optional<std::size_t>> remap(size());
  for (std::size_t v : subset) {
    const auto& vx = vertex(v);
    remap[v] = out.add_vertex(vx.id, vx.e, vx.marked);
  }
  for (const auto& [u, v] : edges_) {
    if (remap[u] && remap[v]) out.add_edge(*remap[u], *remap[v]);
  }
  if (glue_ && remap[glue_->first] && remap[glue_->second]) {
    out.set_glue(*remap[glue_->first], *remap[glue_->second]);
  }
  return out;
}

IntMatrix intersection_matrix(const WeightedDualGraph& g, std::span<const std::size_t> subset) {
  const std::size_t k = subset.size();
  IntMatrix m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = g.vertex(subset[i]).e;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.adjacent(subset[i], subset[j])) m[i][j] = m[j][i] = 1;
    }
  }
  return m;
}

std::vector<VertexSet> components(const WeightedDualGraph& g, std::span<const std::size_t> subset) {
  std::vector<char> inside(g.size(), 0);
  for (std::size_t v : subset) inside.at(v) = 1;
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> out;
  for (std::size_t start : subset) {
    if (seen[start]) continue;
    std::vector<char> member(g.size(), 0);
    std::queue<std::size_t> todo;
    todo.push(start);
    seen[start] = member[start] = 1;
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      for (std::size_t w : g.neighbors(v)) {
        if (inside[w] && !seen[w]) {
          seen[w] = member[w] = 1;
          todo.push(w);
        }
      }
    }
    VertexSet comp;
    for (std::size_t v : subset) {
      if (member[v]) comp.push_back(v);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_contractible(const WeightedDualGraph& g, std::span<const std::size_t> subset) {
  for (const auto& comp : components(g, subset)) {
    if (!is_negative_definite(RatMatrix::from_int(intersection_matrix(g, comp)))) return false;
  }
  return true;
}

WeightedDualGraph blow_down_to_minimal(const WeightedDualGraph& g, std::span<const std::size_t> subset) {
  WeightedDualGraph cur = g.induced(subset);
  for (;;) {
    std::optional<std::size_t> target;
    bool stuck = false;
    for (std::size_t v = 0; v < cur.size(); ++v) {
      if (cur.vertex(v).e != -1) continue;
      if (cur.degree(v) <= 2) {
        target = v;
        break;
      }
      stuck = true;
    }
    if (!target) {
      if (stuck) throw UnsupportedGraphError("not a simple blow-down: (-1)-curve of degree >= 3");
      return cur;
    }

    const std::size_t v = *target;
    const auto nbrs = cur.neighbors(v);
    if (nbrs.size() == 2 && cur.adjacent(nbrs[0], nbrs[1])) {
      throw UnsupportedGraphError("not a simple blow-down: neighbours of '" + cur.vertex(v).id +
                                  "' already meet");
    }
    VertexSet keep;
    for (std::size_t w = 0; w < cur.size(); ++w) {
      if (w != v) keep.push_back(w);
    }
    WeightedDualGraph next = cur.induced(keep);
    auto shifted = [v](std::size_t w) { return w > v ? w - 1 : w; };
    for (std::size_t w : nbrs) next.set_self_intersection(shifted(w), cur.vertex(w).e + 1);
    if (nbrs.size() == 2) next.add_edge(shifted(nbrs[0]), shifted(nbrs[1]));
    cur = std::move(next);
  }
}

bool is_minus_two_chain(const WeightedDualGraph& g) {
  if (g.empty()) return true;
  std::size_t ends = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.vertex(v).e != -2 || g.degree(v) > 2) return false;
    if (g.degree(v) <= 1) ++ends;
  }
  const auto all = g.all_vertices();
  return components(g, all).size() == 1 && g.edges().size() + 1 == g.size() && (ends == 2 || g.size() == 1);
}

}  // namespace cadiv
