// Text, JSON and DOT renderings. Every rational is printed as "p/q".
#pragma once

#include "cadiv/classification.hpp"
#include "cadiv/document.hpp"
#include "cadiv/enumeration.hpp"
#include "cadiv/germ.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cadiv::io {

using ojson = nlohmann::ordered_json;

struct ReportInput {
  const GraphDocument* document = nullptr;
  const GermAnalysis* analysis = nullptr;
  const NeighborhoodVerdict* verdict = nullptr;
  std::string class_source;  // "auto" or "hint"
  std::optional<std::pair<std::int64_t, std::int64_t>> axial;
};

ojson analysis_json(const GermAnalysis& a);
ojson verdict_json(const NeighborhoodVerdict& v);
ojson report_json(const ReportInput& r);
std::string report_text(const ReportInput& r);

/// Marked curves are filled nodes, the glue is a dashed edge.
std::string to_dot(const GraphDocument& doc);

ojson semistable_catalog(std::int64_t k, std::int64_t bound, const std::vector<SemistableDatum>& data);
ojson normal_catalog(std::int64_t max_n, std::int64_t max_d, std::int64_t max_chain,
                     const std::vector<NormalGerm>& germs);

}  // namespace cadiv::io
