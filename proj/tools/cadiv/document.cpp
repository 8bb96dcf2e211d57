#include "cadiv/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cadiv::io {

namespace {

using json = nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string id_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw DocumentError(path, "expected a string id");
  auto s = v.get<std::string>();
  if (s.empty()) throw DocumentError(path, "id must be nonempty");
  if (s.size() > kMaxIdLength) throw DocumentError(path, "id longer than 64 characters");
  return s;
}

std::pair<std::string, std::string> id_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw DocumentError(path, "expected a pair [id, id]");
  return {id_at(v[0], path + "[0]"), id_at(v[1], path + "[1]")};
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw DocumentError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), msg);
  }
  if (!root.is_object()) throw DocumentError("", "document must be a JSON object");

  for (const auto& [key, value] : root.items()) {
    if (key != "name" && key != "vertices" && key != "edges" && key != "glue") {
      throw DocumentError(key, "unknown field");
    }
  }

  GraphDocument doc;
  if (const auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) throw DocumentError("name", "expected a string");
    doc.name = it->get<std::string>();
  }

  const json& vertices = field(root, "vertices", "");
  if (!vertices.is_array()) throw DocumentError("vertices", "expected an array");
  if (vertices.empty()) throw DocumentError("vertices", "at least one vertex is required");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_object()) throw DocumentError(path, "expected an object");
    for (const auto& [key, value] : v.items()) {
      if (key != "id" && key != "e" && key != "marked") throw DocumentError(path + "." + key, "unknown field");
    }
    Vertex vx;
    vx.id = id_at(field(v, "id", path), path + ".id");
    const json& e = field(v, "e", path);
    if (!e.is_number_integer()) throw DocumentError(path + ".e", "expected an integer self-intersection");
    vx.e = e.get<std::int64_t>();
    if (const auto it = v.find("marked"); it != v.end()) {
      if (!it->is_boolean()) throw DocumentError(path + ".marked", "expected true or false");
      vx.marked = it->get<bool>();
    }
    if (!ids.insert(vx.id).second) throw DocumentError(path + ".id", "duplicate id '" + vx.id + "'");
    doc.vertices.push_back(std::move(vx));
  }

  if (const auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) throw DocumentError("edges", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "edges[" + std::to_string(i) + "]";
      auto edge = id_pair((*it)[i], path);
      if (!ids.contains(edge.first)) throw DocumentError(path + "[0]", "unknown id '" + edge.first + "'");
      if (!ids.contains(edge.second)) throw DocumentError(path + "[1]", "unknown id '" + edge.second + "'");
      doc.edges.push_back(std::move(edge));
    }
  }

  if (const auto it = root.find("glue"); it != root.end() && !it->is_null()) {
    auto glue = id_pair(*it, "glue");
    for (const auto& [idx, id] : {std::pair{0, glue.first}, std::pair{1, glue.second}}) {
      const std::string path = "glue[" + std::to_string(idx) + "]";
      if (!ids.contains(id)) throw DocumentError(path, "unknown id '" + id + "'");
      for (const auto& vx : doc.vertices) {
        if (vx.id == id && !vx.marked) throw DocumentError(path, "glue must reference marked curves");
      }
    }
    doc.glue = std::move(glue);
  }

  // Loops, repeated edges, self-glue.
  (void)to_graph(doc);
  return doc;
}

GraphDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

nlohmann::ordered_json to_json(const GraphDocument& doc) {
  nlohmann::ordered_json out;
  if (doc.name) out["name"] = *doc.name;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : doc.vertices) {
    out["vertices"].push_back({{"id", v.id}, {"e", v.e}, {"marked", v.marked}});
  }
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : doc.edges) out["edges"].push_back({u, v});
  if (doc.glue) out["glue"] = {doc.glue->first, doc.glue->second};
  return out;
}

std::string serialize_document(const GraphDocument& doc) { return to_json(doc).dump(2) + "\n"; }

WeightedDualGraph to_graph(const GraphDocument& doc) {
  WeightedDualGraph g;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    const auto& v = doc.vertices[i];
    try {
      g.add_vertex(v.id, v.e, v.marked);
    } catch (const GraphError& e) {
      throw DocumentError("vertices[" + std::to_string(i) + "]", e.what());
    }
  }
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    try {
      g.add_edge(doc.edges[i].first, doc.edges[i].second);
    } catch (const GraphError& e) {
      throw DocumentError("edges[" + std::to_string(i) + "]", e.what());
    }
  }
  if (doc.glue) {
    try {
      g.set_glue(*g.index_of(doc.glue->first), *g.index_of(doc.glue->second));
    } catch (const GraphError& e) {
      throw DocumentError("glue", e.what());
    } catch (const std::bad_optional_access&) {
      throw DocumentError("glue", "unknown id");
    }
  }
  return g;
}

GraphDocument from_graph(const WeightedDualGraph& g) {
  GraphDocument doc;
  doc.vertices = g.vertices();
  for (const auto& [u, v] : g.edges()) doc.edges.emplace_back(g.vertex(u).id, g.vertex(v).id);
  if (const auto& glue = g.glue()) doc.glue = std::pair{g.vertex(glue->first).id, g.vertex(glue->second).id};
  return doc;
}

}  // namespace cadiv::io
