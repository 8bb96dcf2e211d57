// Weighted dual graphs of smooth rational curves on a smooth surface germ.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cadiv {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The configuration is well formed but cannot be contracted.
class NotContractibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outside what the engine handles: branch points, non-chain components.
class UnsupportedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  std::int64_t e = -2;   // self-intersection
  bool marked = false;   // kept (not contracted)
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using VertexSet = std::vector<std::size_t>;

/// Simple graph; vertex indices follow insertion order.
class WeightedDualGraph {
 public:
  WeightedDualGraph() = default;

  std::size_t add_vertex(std::string id, std::int64_t e, bool marked = false);
  void add_edge(std::size_t u, std::size_t v);
  void add_edge(const std::string& u, const std::string& v);
  /// Identify two marked curves (normalization of a non-normal germ).
  void set_glue(std::size_t u, std::size_t v);
  void set_self_intersection(std::size_t v, std::int64_t e);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<Edge>& glue() const { return glue_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> index_of(const std::string& id) const;

  VertexSet all_vertices() const;
  VertexSet marked_vertices() const;
  VertexSet exceptional_vertices() const;

  /// Subgraph on `subset`, kept in subset order; glue dropped unless both ends survive.
  WeightedDualGraph induced(std::span<const std::size_t> subset) const;

  friend bool operator==(const WeightedDualGraph& a, const WeightedDualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.glue_ == b.glue_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::optional<Edge> glue_;
};

/// Diagonal: self-intersections; off-diagonal: 1 per edge. Rows follow `subset`.
IntMatrix intersection_matrix(const WeightedDualGraph& g, std::span<const std::size_t> subset);

/// Connected components of the subgraph induced on `subset`, each in subset order.
std::vector<VertexSet> components(const WeightedDualGraph& g, std::span<const std::size_t> subset);

/// Negative definite on every connected component.
bool is_contractible(const WeightedDualGraph& g, std::span<const std::size_t> subset);

/// Repeatedly blow down (-1)-curves of degree <= 2 in the subgraph on `subset`.
/// Throws UnsupportedGraphError when a (-1)-curve of degree >= 3 is left over,
/// or when a blow-down would make two curves meet twice.
WeightedDualGraph blow_down_to_minimal(const WeightedDualGraph& g, std::span<const std::size_t> subset);

/// True for a nonempty path all of whose curves are (-2)-curves, or for the empty graph.
bool is_minus_two_chain(const WeightedDualGraph& g);

}  // namespace cadiv
