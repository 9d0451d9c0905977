#include "pinet/io.hpp"

#include <fstream>
#include <sstream>

namespace pinet::io {

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tail, head, extra;
    if (!(fields >> tail >> head) || (fields >> extra)) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'TAIL HEAD', got '" + line + "'");
    }
    edges.emplace_back(std::move(tail), std::move(head));
  }
  return edges;
}

DirectedGraph read_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open graph file '" + file.string() + "'");
  const auto edges = parse_edge_list(in);
  return build_graph(edges);
}

Json path_to_json(const DirectedGraph& g, const Path& p) {
  Json out = Json::array();
  for (VertexId v : p.vertices()) out.push_back(g.label(v));
  return out;
}

Json basis_to_json(const DirectedGraph& g, const Basis& basis) {
  Json out = Json::array();
  for (const auto& entry : basis) {
    out.push_back({{"p", path_to_json(g, entry.pair.p)},
                   {"q", path_to_json(g, entry.pair.q)},
                   {"tag", std::string(to_string(entry.tag))}});
  }
  return out;
}

namespace {

Path path_from_json(const DirectedGraph& g, const Json& json, std::size_t index) {
  const auto where = "basis entry " + std::to_string(index) + ": ";
  if (!json.is_array() || json.empty()) {
    throw Error(ErrorKind::ParseError, where + "path must be a nonempty array of labels");
  }
  std::vector<VertexId> seq;
  for (const auto& item : json) {
    if (!item.is_string()) throw Error(ErrorKind::ParseError, where + "labels must be strings");
    const auto v = g.find_vertex(item.get<std::string>());
    if (!v) throw Error(ErrorKind::ParseError, where + "unknown vertex '" + item.get<std::string>() + "'");
    seq.push_back(*v);
  }
  Path p(std::move(seq));
  if (!is_valid_in(p, g)) throw Error(ErrorKind::ParseError, where + "path uses a missing edge");
  return p;
}

}  // namespace

Basis basis_from_json(const DirectedGraph& g, const Json& json) {
  if (!json.is_array()) throw Error(ErrorKind::ParseError, "basis JSON must be an array");
  Basis basis;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const Json& item = json[i];
    if (!item.is_object() || !item.contains("p") || !item.contains("q")) {
      throw Error(ErrorKind::ParseError, "basis entry " + std::to_string(i) + " needs 'p' and 'q'");
    }
    PathPair pair{path_from_json(g, item["p"], i), path_from_json(g, item["q"], i)};
    if (!pair.endpoints_match()) {
      throw Error(ErrorKind::ParseError, "basis entry " + std::to_string(i) + ": endpoints differ");
    }
    Provenance tag = Provenance::dag;
    if (item.contains("tag")) {
      const auto parsed = item["tag"].is_string()
                              ? provenance_from_string(item["tag"].get<std::string>())
                              : std::nullopt;
      if (!parsed) throw Error(ErrorKind::ParseError, "basis entry " + std::to_string(i) + ": bad tag");
      tag = *parsed;
    }
    basis.add(std::move(pair), tag);
  }
  return basis;
}

Basis read_basis(const DirectedGraph& g, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open basis file '" + file.string() + "'");
  Json json;
  try {
    in >> json;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, "invalid basis JSON: " + std::string(e.what()));
  }
  return basis_from_json(g, json);
}

Json report_to_json(const DirectedGraph& g, const VerificationReport& report) {
  Json missing = Json::array();
  for (const auto& pair : report.missing) {
    missing.push_back({{"p", path_to_json(g, pair.p)}, {"q", path_to_json(g, pair.q)}});
  }
  return {{"verified", report.verified},
          {"missing", std::move(missing)},
          {"closure_size", report.closure_size},
          {"iterations", report.iterations},
          {"slack_used", report.slack_used}};
}

Json report_to_json(const ExperimentReport& report) {
  return {{"basis_size", report.basis_size},
          {"error_before", report.error_before},
          {"error_after", report.error_after},
          {"basis_residual_final", report.basis_residual_final},
          {"all_pairs_residual_final", report.all_pairs_residual_final},
          {"epochs", report.epochs},
          {"seed", report.seed}};
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
  return out;
}

Json experiment_to_json(const ExperimentData& data) {
  const DirectedGraph& g = data.ground_truth.graph();
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"tail", g.label(g.edge(e).tail)},
                     {"head", g.label(g.edge(e).head)},
                     {"ground_truth", matrix_to_json(data.ground_truth.map(e))},
                     {"input", matrix_to_json(data.optimized.input(e))},
                     {"optimized", matrix_to_json(data.optimized.map(e))}});
  }
  return {{"dim", data.ground_truth.dim()}, {"edges", std::move(edges)}};
}

}  // namespace pinet::io
