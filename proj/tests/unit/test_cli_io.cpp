#include "cadiv/commands.hpp"
#include "cadiv/document.hpp"
#include "cadiv/report.hpp"
#include "support/germs.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"

using namespace cadiv;
using namespace cadiv::io;

namespace {

const std::filesystem::path kData = CADIV_DATA_DIR;

std::string data(const std::string& name) { return (kData / (name + ".json")).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run analyze(const std::string& name, const std::string& cls = "auto", bool json = false) {
  std::ostringstream out, err;
  AnalyzeOptions opt;
  opt.path = data(name);
  opt.cls = cls;
  opt.json = json;
  const int code = cmd_analyze(opt, out, err);
  return {code, out.str(), err.str()};
}

Run hj(std::optional<std::pair<std::int64_t, std::int64_t>> f, std::optional<std::string> chain) {
  std::ostringstream out, err;
  const int code = cmd_hj({f, chain}, out, err);
  return {code, out.str(), err.str()};
}

// No decimals anywhere; anything shaped like a fraction is a reduced-form "p/q".
void check_exact_numbers(const ojson& j) {
  static const std::regex fraction(R"(-?[0-9]+/[1-9][0-9]*)");
  static const std::regex numeric(R"(-?[0-9.]+/[0-9.]+|-?[0-9]*\.[0-9]+)");
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j) check_exact_numbers(v);
  } else if (j.is_number()) {
    CHECK_MESSAGE(j.is_number_integer(), j.dump());
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (std::regex_match(s, numeric)) CHECK_MESSAGE(std::regex_match(s, fraction), s);
  }
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cadiv_test_" + name);
}

}  // namespace

TEST_CASE("documents round trip") {
  for (const auto* name : {"example1", "example2", "example3", "example4", "semistable", "nonnormal"}) {
    CAPTURE(name);
    const auto doc = load_document(data(name));
    CHECK(parse_document(serialize_document(doc)) == doc);
    CHECK(from_graph(to_graph(doc)).vertices == doc.vertices);
  }
}

TEST_CASE("shipped documents are the test germs") {
  CHECK(to_graph(load_document(data("example1"))) == germs::example1());
  CHECK(to_graph(load_document(data("example2"))) == germs::example2());
  CHECK(to_graph(load_document(data("example3"))) == germs::example3());
  CHECK(to_graph(load_document(data("example4"))) == germs::example4());
  CHECK(to_graph(load_document(data("semistable"))) == germs::semistable());
  CHECK(to_graph(load_document(data("nonnormal"))) == germs::nonnormal());
}

TEST_CASE("round trip on generated documents") {
  for (std::int64_t len = 1; len <= 6; ++len) {
    std::vector<std::int64_t> es;
    for (std::int64_t i = 0; i < len; ++i) es.push_back(-2 - (i * 7 + len) % 4);
    for (std::size_t pos = 1; pos <= es.size(); ++pos) {
      auto doc = from_graph(germs::chain_with_curve(es, pos));
      doc.name = "chain" + std::to_string(len);
      CHECK(parse_document(serialize_document(doc)) == doc);
    }
  }
}

TEST_CASE("parse errors carry a location") {
  auto where = [](std::string_view text) {
    try {
      parse_document(text);
    } catch (const DocumentError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(where("{\"vertices\": []}").find("vertices") != std::string::npos);
  CHECK(where("{\"vertices\": [{\"id\": \"A\", \"e\": 1.5}]}").find("vertices[0].e") != std::string::npos);
  CHECK(where("{\n  \"vertices\": [,]}").find("line 2") != std::string::npos);
  CHECK(where(R"({"vertices": [{"id": "A", "e": -2}], "colour": 1})").find("colour") != std::string::npos);
  CHECK(where(R"({"vertices": [{"id": "A", "e": -2}], "edges": [["A", "B"]]})") != "no error");
  CHECK(where(R"({"vertices": [{"id": "A", "e": -2}, {"id": "A", "e": -2}]})") != "no error");
  CHECK(where(R"({"vertices": [{"id": "A", "e": -1, "marked": true}], "glue": ["A", "A"]})") != "no error");
  const std::string long_id(65, 'x');
  CHECK(where(R"({"vertices": [{"id": ")" + long_id + R"(", "e": -2}]})") != "no error");
}

TEST_CASE("analyze exit codes") {
  CHECK(analyze("example1").code == kExitPass);
  CHECK(analyze("example3").code == kExitPass);
  CHECK(analyze("semistable").code == kExitPass);
  CHECK(analyze("nonnormal").code == kExitPass);
  CHECK(analyze("example2").code == kExitConditionsFail);
  CHECK(analyze("example1", "nonnormal").code == kExitConditionsFail);
  CHECK(analyze("missing_file").code == kExitInputError);
  CHECK(analyze("example1", "bogus").code == kExitInputError);
}

TEST_CASE("analyze text report") {
  const auto r = analyze("example1");
  CHECK(r.out.find("1/12(1,5)") != std::string::npos);
  CHECK(r.out.find("K.C = -1/2") != std::string::npos);
  CHECK(r.out.find("[pass] normal1.cond2") != std::string::npos);
  CHECK(r.out.find("X: cA_2") != std::string::npos);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  CHECK_FALSE(std::regex_search(r.out, std::regex(R"([0-9]\.[0-9])")));
}

TEST_CASE("analyze JSON report") {
  for (const auto* name : {"example1", "example2", "example3", "example4", "semistable", "nonnormal"}) {
    CAPTURE(name);
    const auto r = analyze(name, "auto", true);
    const auto j = ojson::parse(r.out);
    check_exact_numbers(j);
    CHECK(j["verdict"]["pass"].get<bool>() == (r.code == kExitPass));
    for (const auto& c : j["verdict"]["conditions"]) {
      CHECK(c["holds"].is_boolean());
      CHECK(c["tag"].is_string());
    }
    CHECK(j["provenance"]["class_source"] == "auto");
  }
  const auto j = ojson::parse(analyze("nonnormal", "nonnormal", true).out);
  CHECK(j["verdict"]["class"] == "nonnormal_nss");
  CHECK(j["provenance"]["class_source"] == "hint");
}

TEST_CASE("hj") {
  CHECK(hj(std::pair<std::int64_t, std::int64_t>{12, 5}, std::nullopt).out == "[3,2,3]\n");
  const auto r = hj(std::nullopt, std::string("2,5"));
  CHECK(r.code == kExitPass);
  CHECK(r.out == "9/5 ⇒ 1/9(1,5)\n");
  CHECK(hj(std::pair<std::int64_t, std::int64_t>{4, 2}, std::nullopt).code == kExitInputError);
  CHECK(hj(std::nullopt, std::string("2,x")).code == kExitInputError);
  CHECK(hj(std::nullopt, std::string("1,5")).code == kExitInputError);
}

TEST_CASE("dot") {
  std::ostringstream out, err;
  REQUIRE(cmd_dot(data("example1"), out, err) == kExitPass);
  const auto dot = out.str();
  CHECK(dot.rfind("graph", 0) == 0);
  std::size_t filled = 0;
  for (auto p = dot.find("filled"); p != std::string::npos; p = dot.find("filled", p + 1)) ++filled;
  CHECK(filled == 1);
  CHECK(dot.find("label=\"-1\"") != std::string::npos);

  GraphDocument two;
  two.vertices = {{"A", -2, false}, {"B", -2, false}};
  two.edges = {{"A", "B"}};
  const auto d2 = to_dot(two);
  std::size_t edges = 0;
  for (auto p = d2.find(" -- "); p != std::string::npos; p = d2.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 1);

  std::ostringstream o2, e2;
  REQUIRE(cmd_dot(data("nonnormal"), o2, e2) == kExitPass);
  CHECK(o2.str().find("dashed") != std::string::npos);

  std::ostringstream o3, e3;
  CHECK(cmd_dot(data("missing_file"), o3, e3) == kExitInputError);
}

TEST_CASE("enumerate") {
  const auto path = temp_path("k3.json");
  std::ostringstream out, err;
  EnumerateOptions opt;
  opt.kind = "semistable";
  opt.k = 3;
  opt.out = path.string();
  REQUIRE(cmd_enumerate(opt, out, err) == kExitPass);
  std::ifstream in(path);
  const auto j = ojson::parse(in);
  check_exact_numbers(j);
  REQUIRE(j["records"].size() == 1);
  std::filesystem::remove(path);

  std::ostringstream o2, e2;
  EnumerateOptions k2;
  k2.kind = "semistable";
  k2.k = 2;
  REQUIRE(cmd_enumerate(k2, o2, e2) == kExitPass);
  const auto j2 = ojson::parse(o2.str());
  CHECK(j2["records"].empty());
  CHECK(j2["note"] == "empty (proved: cA_1)");

  std::ostringstream o3, e3;
  EnumerateOptions normal;
  normal.kind = "normal";
  REQUIRE(cmd_enumerate(normal, o3, e3) == kExitPass);
  const auto j3 = ojson::parse(o3.str());
  check_exact_numbers(j3);
  CHECK(j3["records"].size() == 3);

  std::ostringstream o4, e4;
  EnumerateOptions bad = opt;
  bad.out = "/nonexistent/dir/out.json";
  CHECK(cmd_enumerate(bad, o4, e4) == kExitInputError);
}
