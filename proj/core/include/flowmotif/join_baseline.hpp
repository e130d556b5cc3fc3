#pragma once

#include <cstdint>
#include <vector>

#include "flowmotif/enumerator.hpp"

namespace flowmotif {

/// Aggregated contiguous run of one pair's series: the quintuple
/// (u, v, t_s, t_e, f) plus the series index range it covers.
struct IntervalTuple {
  PairIdx pair;
  std::uint32_t begin;  // series index range [begin, end)
  std::uint32_t end;
  Timestamp t_s;  // first/last timestamps of the run
  Timestamp t_e;
  Flow f;  // aggregated flow of the run

  friend bool operator==(const IntervalTuple&, const IntervalTuple&) = default;
};

/// All tuples plus the two sorted access paths of the merge join:
/// by_source orders tuple indices by (starting vertex u, t_s),
/// by_target by (ending vertex v, t_s).
struct TupleTables {
  std::vector<IntervalTuple> tuples;
  std::vector<std::uint32_t> by_source;
  std::vector<std::uint32_t> by_target;
  std::vector<std::uint32_t> source_offsets;  // per-node slice of by_source
};

/// One tuple per contiguous run of each pair's series whose span is at most
/// delta (singletons included); runs aggregating less than phi are dropped.
TupleTables build_tuples(const TimeSeriesGraph& g, double delta, Flow phi);

/// A partially joined chain of tuples: adjacent tuples chain on vertices and
/// on time (strictly increasing, non-overlapping intervals), overall span
/// within delta.
struct PartialChain {
  std::vector<std::uint32_t> tuple_idx;
  Timestamp start_t;  // t_s of the first tuple
  Timestamp last_e;   // t_e of the last tuple
};

/// Extends every chain by the tuples whose source equals the chain's last
/// target, start strictly after the chain's last end, and whose end keeps
/// the chain span within delta.
std::vector<PartialChain> join_level(const TimeSeriesGraph& g,
                                     const std::vector<PartialChain>& left,
                                     const TupleTables& tables, double delta);

struct JoinStats {
  std::vector<std::size_t> level_counts;  // chains alive after each level
  std::size_t tuple_count = 0;
};

/// The hierarchical-join baseline: m join levels, motif vertex-identity
/// filtering, maximality filtering and deduplication. Produces exactly the
/// same instance set as enumerate_instances.
EnumerationResult run_join(const TimeSeriesGraph& g, const Motif& motif,
                           JoinStats* stats = nullptr);

}  // namespace flowmotif
