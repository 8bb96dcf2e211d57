// JSON graph documents: the resolution graph of a germ as drawn, one vertex
// per curve.
//
//   {"vertices": [{"id": "E1", "e": -3, "marked": false}, ...],
//    "edges": [["E1", "E2"], ...],
//    "glue": ["C1", "C2"]}            (optional)
#pragma once

#include "cadiv/dual_graph.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cadiv::io {

inline constexpr std::size_t kMaxIdLength = 64;

/// Malformed or invalid document. `where()` is "line L, column C" for syntax
/// errors and a field path such as "vertices[2].e" otherwise.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct GraphDocument {
  std::optional<std::string> name;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::pair<std::string, std::string>> glue;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_document(std::string_view text);
GraphDocument load_document(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const GraphDocument& doc);
std::string serialize_document(const GraphDocument& doc);

WeightedDualGraph to_graph(const GraphDocument& doc);
GraphDocument from_graph(const WeightedDualGraph& g);

}  // namespace cadiv::io
