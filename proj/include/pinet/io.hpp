#pragma once

#include <filesystem>
#include <istream>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "pinet/basis.hpp"
#include "pinet/oracle.hpp"
#include "pinet/synth.hpp"

namespace pinet::io {

using Json = nlohmann::json;

// "TAIL HEAD" per line; blank lines and lines starting with '#' are skipped.
// Throws ParseError naming the offending line.
std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in);
DirectedGraph read_graph(const std::filesystem::path& file);

// [{"p": [labels...], "q": [labels...], "tag": "..."}]; an empty path is its
// single anchor label.
Json basis_to_json(const DirectedGraph& g, const Basis& basis);
// Throws ParseError on unknown labels, non-edges, or mismatched endpoints.
Basis basis_from_json(const DirectedGraph& g, const Json& json);
Basis read_basis(const DirectedGraph& g, const std::filesystem::path& file);

Json path_to_json(const DirectedGraph& g, const Path& p);
Json report_to_json(const DirectedGraph& g, const VerificationReport& report);
Json report_to_json(const ExperimentReport& report);
Json matrix_to_json(const Matrix& m);  // row-major float64 array
Json experiment_to_json(const ExperimentData& data);

}  // namespace pinet::io
