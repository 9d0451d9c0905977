#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pinet/dag_basis.hpp"
#include "pinet/general_basis.hpp"
#include "pinet/io.hpp"
#include "pinet/scc.hpp"

namespace {

using pinet::io::Json;

int fail(pinet::ErrorKind kind, const std::string& message) {
  Json err = {{"error", std::string(pinet::to_string(kind))}, {"message", message}};
  std::cerr << err.dump() << '\n';
  return kind == pinet::ErrorKind::BudgetExceeded ? 3 : 2;
}

void write_json(const std::string& file, const Json& json) {
  std::ofstream out(file);
  if (!out) throw pinet::Error(pinet::ErrorKind::InvalidArgument, "cannot write '" + file + "'");
  out << json.dump(2) << '\n';
}

int run_basis(const std::string& graph_file, const std::string& out_file) {
  const auto g = pinet::io::read_graph(graph_file);
  const auto basis = pinet::path_invariance_basis(g);
  // (|V|-1)|E| holds for DAGs, |V||E| in general
  const std::size_t v = g.vertex_count(), e = g.edge_count();
  const std::size_t bound = pinet::is_acyclic(g) ? (v - 1) * e : v * e;
  if (!out_file.empty()) write_json(out_file, pinet::io::basis_to_json(g, basis));
  std::cout << "pairs=" << basis.size() << " bound=" << bound << '\n';
  return 0;
}

int run_verify(const std::string& graph_file, const std::string& basis_file,
               std::optional<std::size_t> check_len, std::optional<std::size_t> slack) {
  const auto g = pinet::io::read_graph(graph_file);
  const auto basis = pinet::io::read_basis(g, basis_file);
  const auto report = pinet::verify_basis(g, basis, check_len.value_or(g.vertex_count()),
                                          slack.value_or(g.vertex_count()));
  std::cout << pinet::io::report_to_json(g, report).dump(2) << '\n';
  return report.verified ? 0 : 1;
}

int run_stats(const std::string& graph_file) {
  const auto g = pinet::io::read_graph(graph_file);
  const auto scc = pinet::tarjan_scc(g);
  const auto contracted = pinet::contract_graph(g, scc);
  std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " sccs=" << scc.size() << " dag_edges=" << contracted.dag.edge_count() << '\n';
  return 0;
}

int run_synth(const pinet::SynthConfig& config, const std::string& dump_file) {
  std::optional<pinet::ExperimentData> data;
  const auto report = pinet::synth_experiment(config, dump_file.empty() ? nullptr : &data);
  if (!dump_file.empty()) write_json(dump_file, pinet::io::experiment_to_json(*data));
  std::cout << pinet::io::report_to_json(report).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-invariance bases for directed map networks"};
  app.require_subcommand(1);

  std::string graph_file, basis_file, out_file, dump_file;

  auto* basis_cmd = app.add_subcommand("basis", "Compute a path-invariance basis");
  basis_cmd->add_option("graph", graph_file, "Edge list file")->required();
  basis_cmd->add_option("--out", out_file, "Write the basis as JSON");

  std::optional<std::size_t> check_len, slack;
  auto* verify_cmd = app.add_subcommand("verify", "Check a basis with the closure oracle");
  verify_cmd->add_option("graph", graph_file, "Edge list file")->required();
  verify_cmd->add_option("basis", basis_file, "Basis JSON file")->required();
  verify_cmd->add_option("--check-len", check_len, "Longest path checked (default |V|)");
  verify_cmd->add_option("--slack", slack, "Extra closure length (default |V|)");

  pinet::SynthConfig config;
  auto* synth_cmd = app.add_subcommand("synth", "Run a synthetic synchronization experiment");
  synth_cmd->add_option("--vertices", config.vertices)->capture_default_str();
  synth_cmd->add_option("--edge-prob", config.edge_prob)->capture_default_str();
  synth_cmd->add_option("--dim", config.dim)->capture_default_str();
  synth_cmd->add_option("--noise", config.noise_sigma)->capture_default_str();
  synth_cmd->add_option("--outliers", config.outlier_frac)->capture_default_str();
  synth_cmd->add_option("--seed", config.seed)->capture_default_str();
  synth_cmd->add_option("--lr", config.schedule.step_size, "ADAM step size")->capture_default_str();
  synth_cmd->add_option("--lr-decay", config.schedule.step_decay, "Step multiplier per lambda doubling")
      ->capture_default_str();
  synth_cmd->add_option("--dump", dump_file, "Write all matrices as JSON");

  auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics");
  stats_cmd->add_option("graph", graph_file, "Edge list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(pinet::ErrorKind::InvalidArgument, e.what());
  }

  try {
    if (*basis_cmd) return run_basis(graph_file, out_file);
    if (*verify_cmd) return run_verify(graph_file, basis_file, check_len, slack);
    if (*synth_cmd) return run_synth(config, dump_file);
    return run_stats(graph_file);
  } catch (const pinet::Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(pinet::ErrorKind::InvalidArgument, e.what());
  }
}
