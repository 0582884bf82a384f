#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sperf/certify.hpp"
#include "sperf/cliques.hpp"
#include "sperf/detect.hpp"
#include "sperf/families.hpp"

namespace sperf::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Where an input graph came from.
struct Provenance {
  std::optional<FamilySpec> family;
  std::optional<std::size_t> stream_index;  // 1-based record number
  std::optional<std::string> file;
};

json vertex_list(VertexSet s);
VertexSet vertex_set_from(const json& j);

json provenance_json(const Provenance& p);
json budget_json(const Budget& b, std::uint64_t nodes_used);

// Document skeleton shared by every check kind; the caller adds verdict and
// witnesses.
json certificate_header(const std::string& kind, const Graph& g, const Provenance& p);

struct Revalidation {
  bool valid = true;
  std::vector<std::string> problems;
  void fail(std::string why) {
    valid = false;
    problems.push_back(std::move(why));
  }
};

// Re-checks every witness in a check certificate definitionally against the
// embedded graph6, and recomputes claims that carry no witness.
Revalidation revalidate(const json& doc);

}  // namespace sperf::cli
