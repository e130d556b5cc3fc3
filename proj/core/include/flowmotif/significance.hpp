#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowmotif/enumerator.hpp"

namespace flowmotif {

/// Flow-permutation null model: same nodes, pairs and timestamps, the global
/// multiset of flow values reassigned by a seeded uniform permutation over
/// the canonical interaction order (pairs sorted, then timestamps).
TimeSeriesGraph permute_flows(const TimeSeriesGraph& g, std::uint64_t seed);

struct NullModelReport {
  std::string motif_id;
  std::size_t real_count = 0;
  std::vector<std::size_t> sample_counts;  // one per randomized graph
  double mean = 0;
  double stddev = 0;          // population formula over the samples
  std::optional<double> z;    // undefined when stddev == 0
  double p_value = 0;         // fraction of samples with count > real_count
};

/// z = (r - mean) / stddev; nullopt when stddev == 0.
std::optional<double> z_score(double real_count, double mean, double stddev);

/// Counts maximal instances in g and in `samples` permuted graphs (seeds
/// base_seed+1 .. base_seed+samples) and fills all report fields.
NullModelReport significance_run(const TimeSeriesGraph& g, const Motif& motif,
                                 std::size_t samples, std::uint64_t base_seed,
                                 std::string motif_id = "motif", unsigned threads = 1);

}  // namespace flowmotif
