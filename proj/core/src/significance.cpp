#include "flowmotif/significance.hpp"

#include <cmath>

#include "flowmotif/random.hpp"

namespace flowmotif {

TimeSeriesGraph permute_flows(const TimeSeriesGraph& g, std::uint64_t seed) {
  std::vector<Flow> flows = g.flow_values();
  std::mt19937_64 rng(seed);
  deterministic_shuffle(flows, rng);
  return g.with_flows(flows);
}

std::optional<double> z_score(double real_count, double mean, double stddev) {
  if (stddev == 0) return std::nullopt;
  return (real_count - mean) / stddev;
}

NullModelReport significance_run(const TimeSeriesGraph& g, const Motif& motif,
                                 std::size_t samples, std::uint64_t base_seed,
                                 std::string motif_id, unsigned threads) {
  NullModelReport report;
  report.motif_id = std::move(motif_id);
  report.real_count = enumerate_instances(g, motif, threads).instances.size();

  if (samples == 0) return report;

  report.sample_counts.reserve(samples);
  for (std::size_t s = 1; s <= samples; ++s) {
    TimeSeriesGraph randomized = permute_flows(g, base_seed + s);
    report.sample_counts.push_back(enumerate_instances(randomized, motif, threads).instances.size());
  }

  const double n = static_cast<double>(samples);
  double sum = 0;
  for (std::size_t c : report.sample_counts) sum += static_cast<double>(c);
  report.mean = sum / n;
  double variance = 0;
  for (std::size_t c : report.sample_counts) {
    const double d = static_cast<double>(c) - report.mean;
    variance += d * d;
  }
  report.stddev = std::sqrt(variance / n);
  report.z = z_score(static_cast<double>(report.real_count), report.mean, report.stddev);

  std::size_t above = 0;
  for (std::size_t c : report.sample_counts) {
    if (c > report.real_count) ++above;
  }
  report.p_value = static_cast<double>(above) / n;
  return report;
}

}  // namespace flowmotif
