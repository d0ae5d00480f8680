// compnet: generate size-matched random / scale-free / small-world graphs,
// run seeded parameter sweeps over them, and emit the series behind the
// comparison plots.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "compnet/edge_audit.hpp"
#include "compnet/errors.hpp"
#include "compnet/generators.hpp"
#include "compnet/plot_series.hpp"
#include "compnet/records_io.hpp"
#include "compnet/sweep.hpp"
#include "compnet/sweep_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GenerateArgs {
  std::string model;
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::optional<double> alpha;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  const auto model = compnet::parse_model(args.model);
  if (!model) {
    std::cerr << "generate: unknown model '" << args.model << "'\n";
    return kExitUsage;
  }
  compnet::ModelSpec spec;
  switch (*model) {
    case compnet::Model::kRandom:
      spec = compnet::ModelSpec::random(args.n, args.s);
      break;
    case compnet::Model::kScaleFree:
      if (!args.alpha) {
        std::cerr << "generate: --alpha is required for scale-free\n";
        return kExitUsage;
      }
      spec = compnet::ModelSpec::scale_free(args.n, args.s, *args.alpha);
      break;
    case compnet::Model::kSmallWorld:
      if (!args.p) {
        std::cerr << "generate: --p is required for small-world\n";
        return kExitUsage;
      }
      spec = compnet::ModelSpec::small_world(args.n, args.s, *args.p);
      break;
  }

  compnet::RngStream rng(args.seed);
  const compnet::Graph g = compnet::generate(spec, rng);
  if (args.out.empty() || args.out == "-") {
    compnet::write_edge_list(std::cout, g);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) {
      std::cerr << "generate: cannot write " << args.out << '\n';
      return kExitUsage;
    }
    compnet::write_edge_list(out, g);
  }
  return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& out_dir, unsigned threads) {
  const compnet::SweepConfig config = compnet::load_sweep_config(config_path);
  const compnet::SweepResult result = compnet::execute_sweep(config, threads);
  compnet::write_sweep_outputs(result, out_dir);
  std::cout << "wrote " << result.records.size() << " records and " << result.aggregates.size()
            << " aggregates to " << out_dir << '\n';
  return kExitOk;
}

int run_verify_edges(const std::string& config_path) {
  const compnet::SweepConfig config = compnet::load_sweep_config(config_path);
  const compnet::EdgeAuditResult audit = compnet::audit_edge_identity(config);
  if (audit.ok()) {
    std::cout << "verify-edges: " << audit.rows.size()
              << " specs, every model matches (n, m) for each (n, S)\n";
    return kExitOk;
  }
  std::cout << "verify-edges: mismatches found\n";
  compnet::write_audit_table(std::cout, audit.mismatches());
  return kExitFailure;
}

int run_plot_data(const std::string& records_path, const std::string& figure_id,
                  const std::string& out_dir, std::optional<std::uint64_t> panel) {
  const auto figure = compnet::parse_figure(figure_id);
  if (!figure) {
    std::cerr << "plot-data: unknown figure '" << figure_id
              << "' (edges_vertices|closeness|betweenness|asp|clustering)\n";
    return kExitUsage;
  }
  auto records = compnet::read_records(std::filesystem::path(records_path));
  std::stable_sort(records.begin(), records.end(),
                   [](const compnet::MetricRecord& a, const compnet::MetricRecord& b) {
                     if (auto c = compnet::compare_specs(a.spec, b.spec); c != 0) return c < 0;
                     return a.sample_index < b.sample_index;
                   });
  const auto aggregates = compnet::aggregate_all(records);
  const auto series = compnet::emit_plot_series(aggregates, *figure, panel);
  const auto files = compnet::write_plot_series(series, out_dir);
  std::cout << "wrote " << files.size() << " series to " << out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size-matched complex network generator and metric sweeps"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write one graph as a canonical edge list");
  generate->add_option("--model", gen.model, "random | scale-free | small-world")->required();
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--s", gen.s, "Edges per growth step (S = Nei)")->required();
  generate->add_option("--alpha", gen.alpha, "Attachment power (scale-free)");
  generate->add_option("--p", gen.p, "Rewiring probability (small-world)");
  generate->add_option("--seed", gen.seed, "64-bit seed")->required();
  generate->add_option("--out", gen.out, "Edge-list path (default: stdout)");

  std::string sweep_config;
  std::string sweep_out;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV outputs");
  sweep->add_option("--config", sweep_config, "Sweep config file")->required();
  sweep->add_option("--out", sweep_out, "Output directory")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  std::string verify_config;
  auto* verify = app.add_subcommand("verify-edges", "Check cross-model (n, m) identity");
  verify->add_option("--config", verify_config, "Sweep config file")->required();

  std::string records_path;
  std::string figure_id;
  std::string plot_out;
  std::optional<std::uint64_t> panel;
  auto* plot = app.add_subcommand("plot-data", "Emit plot series CSVs from a records file");
  plot->add_option("--records", records_path, "records.csv from a sweep")->required();
  plot->add_option("--figure", figure_id,
                   "edges_vertices | closeness | betweenness | asp | clustering")
      ->required();
  plot->add_option("--out", plot_out, "Output directory")->required();
  plot->add_option("--panel", panel, "Restrict to one S value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*sweep) return run_sweep(sweep_config, sweep_out, threads);
    if (*verify) return run_verify_edges(verify_config);
    if (*plot) return run_plot_data(records_path, figure_id, plot_out, panel);
  } catch (const compnet::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const compnet::VersionError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const compnet::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
