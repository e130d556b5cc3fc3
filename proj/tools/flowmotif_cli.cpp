// Command-line driver: graph ingestion, motif parsing, mode dispatch, and
// record output for the flow-motif search library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flowmotif/io.hpp"
#include "flowmotif/join_baseline.hpp"
#include "flowmotif/synth.hpp"

namespace fm = flowmotif;

namespace {

struct RunConfig {
  std::string graph_path;
  std::string motif_spec;
  std::optional<double> delta;
  std::optional<double> phi;
  std::string mode;
  std::size_t k = 1;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "tsv";
  std::string output_path;
  std::string group_by;
  // synth parameters
  std::uint32_t nodes = 0;
  std::uint32_t pairs = 0;
  std::uint64_t interactions = 0;
  std::uint64_t horizon = 0;
  std::string flow_law = "uniform:1:9";
};

fm::Motif resolve_motif(const RunConfig& config) {
  fm::Motif motif = fm::parse_motif_spec(config.motif_spec);
  if (config.delta) motif.set_delta(*config.delta);
  if (config.phi) motif.set_phi(*config.phi);
  if (!config.delta && config.motif_spec.rfind("chain:", 0) == 0) {
    throw std::invalid_argument("--delta is required with motif shorthand '" +
                                config.motif_spec + "'");
  }
  if (!config.delta && config.motif_spec.rfind("cycle:", 0) == 0) {
    throw std::invalid_argument("--delta is required with motif shorthand '" +
                                config.motif_spec + "'");
  }
  if (auto violation = fm::validate(motif)) {
    throw std::invalid_argument("invalid motif '" + config.motif_spec + "': " + *violation);
  }
  return motif;
}

int run(const RunConfig& config, std::ostream& out) {
  const fm::OutputFormat format =
      config.format == "jsonl" ? fm::OutputFormat::Jsonl : fm::OutputFormat::Tsv;

  if (config.mode == "synth") {
    fm::SynthConfig synth;
    synth.nodes = config.nodes;
    synth.pairs = config.pairs;
    synth.interactions = config.interactions;
    synth.horizon = config.horizon;
    synth.law = fm::FlowLaw::parse(config.flow_law);
    synth.seed = config.seed;
    fm::write_graph_file(out, fm::synthesize(synth));
    return 0;
  }

  const fm::TimeSeriesGraph g = fm::load_graph(config.graph_path);
  const fm::Motif motif = resolve_motif(config);

  if (config.mode == "enumerate" || config.mode == "count") {
    auto result = fm::enumerate_instances(g, motif, config.threads);
    if (config.mode == "count") {
      out << result.instances.size() << '\n';
    } else {
      fm::write_instances(out, g, motif, result.matches, result.instances, format);
    }
  } else if (config.mode == "matches") {
    auto matches = fm::find_structural_matches(g, motif);
    fm::write_matches(out, g, motif, matches, format);
  } else if (config.mode == "topk") {
    auto result = fm::topk(g, motif, motif.delta(), config.k, config.threads);
    fm::write_instances(out, g, motif, result.matches, result.instances, format, true);
  } else if (config.mode == "top1") {
    if (!config.group_by.empty()) {
      const fm::GroupBy group =
          config.group_by == "match" ? fm::GroupBy::Match : fm::GroupBy::Window;
      auto grouped = fm::top1_grouped(g, motif, motif.delta(), group, config.threads);
      fm::write_grouped(out, g, motif, grouped, format);
    } else if (auto best = fm::top1(g, motif, motif.delta(), config.threads)) {
      auto matches = fm::find_structural_matches(g, motif);
      fm::write_instances(out, g, motif, matches, {best->instance}, format, true);
    }
  } else if (config.mode == "baseline") {
    fm::JoinStats stats;
    auto result = fm::run_join(g, motif, &stats);
    fm::write_instances(out, g, motif, result.matches, result.instances, format);
    std::cerr << "tuples: " << stats.tuple_count << '\n';
    for (std::size_t level = 0; level < stats.level_counts.size(); ++level) {
      std::cerr << "level " << level + 1 << " chains: " << stats.level_counts[level] << '\n';
    }
  } else if (config.mode == "significance") {
    auto report = fm::significance_run(g, motif, config.samples, config.seed,
                                       config.motif_spec, config.threads);
    fm::write_significance(out, report, format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Maximal flow-motif instance search in temporal interaction networks"};

  app.add_option("--graph", config.graph_path, "Interaction graph file (`src dst t f` lines)");
  app.add_option("--motif", config.motif_spec,
                 "Motif: chain:<n>, cycle:<n>, or a motif file path");
  app.add_option("--delta", config.delta, "Duration bound (overrides the motif file)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--phi", config.phi, "Minimum edge-set flow (overrides the motif file)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--mode", config.mode, "Operation mode")
      ->required()
      ->check(CLI::IsMember({"enumerate", "count", "matches", "topk", "top1", "baseline",
                             "significance", "synth"}));
  app.add_option("--k", config.k, "Instances to return in topk mode")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", config.samples, "Randomized graphs in significance mode")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Base random seed");
  app.add_option("--threads", config.threads, "Worker thread cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output record format")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  app.add_option("--output", config.output_path, "Write records here instead of stdout");
  app.add_option("--group-by", config.group_by, "Per-group top-1 reporting in top1 mode")
      ->check(CLI::IsMember({"match", "window"}));
  app.add_option("--nodes", config.nodes, "synth: node count");
  app.add_option("--pairs", config.pairs, "synth: connected ordered pair count");
  app.add_option("--interactions", config.interactions, "synth: interaction count");
  app.add_option("--horizon", config.horizon, "synth: timestamps drawn from [0, horizon)");
  app.add_option("--flow-law", config.flow_law, "synth: constant:<x> or uniform:<lo>:<hi>");

  CLI11_PARSE(app, argc, argv);

  if (config.mode != "synth") {
    if (config.graph_path.empty()) {
      std::cerr << "error: --graph is required for mode " << config.mode << '\n';
      return 1;
    }
    if (config.motif_spec.empty()) {
      std::cerr << "error: --motif is required for mode " << config.mode << '\n';
      return 1;
    }
  }

  try {
    if (!config.output_path.empty()) {
      std::ofstream out(config.output_path);
      if (!out) {
        std::cerr << "error: cannot open output file '" << config.output_path << "'\n";
        return 1;
      }
      return run(config, out);
    }
    return run(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
