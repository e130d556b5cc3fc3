#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowmotif/errors.hpp"

namespace flowmotif {

using Timestamp = double;
using Flow = double;
using NodeId = std::uint32_t;
using PairIdx = std::uint32_t;

constexpr PairIdx kNoPair = static_cast<PairIdx>(-1);

/// One timestamped flow transfer. Valid interactions have f > 0 and finite t.
struct Interaction {
  Timestamp t;
  Flow f;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

/// A raw input record before grouping; `line` is kept for diagnostics
/// (0 for programmatically built records).
struct InteractionRecord {
  std::string src;
  std::string dst;
  Timestamp t;
  Flow f;
  std::uint32_t line = 0;
};

/// Time-ordered interaction series of one ordered node pair, with prefix
/// sums of the flows for O(1) range aggregation.
struct PairSeries {
  NodeId u;
  NodeId v;
  std::vector<Interaction> events;  // strictly increasing t
  std::vector<Flow> prefix;         // prefix[i] = sum of events[0..i).f

  std::size_t size() const { return events.size(); }

  /// First index with events[i].t >= t.
  std::size_t lower(Timestamp t) const;
  /// First index with events[i].t > t.
  std::size_t upper(Timestamp t) const;

  Flow range_sum(std::size_t begin, std::size_t end) const {
    return prefix[end] - prefix[begin];
  }

  friend bool operator==(const PairSeries& a, const PairSeries& b) {
    return a.u == b.u && a.v == b.v && a.events == b.events;
  }
};

struct OutEdge {
  NodeId to;
  PairIdx pair;
};

/// Directed interaction multigraph in merged (time-series) form: per ordered
/// node pair, one strictly time-ordered series. Immutable after ingestion,
/// safe for concurrent reads.
class TimeSeriesGraph {
 public:
  TimeSeriesGraph() = default;

  /// Groups records by (src, dst) and sorts each group by timestamp.
  /// Throws IngestError on non-positive/non-finite flow, non-finite
  /// timestamp, or two records with identical (src, dst, t).
  static TimeSeriesGraph ingest(std::span<const InteractionRecord> records);

  std::size_t node_count() const { return names_.size(); }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t interaction_count() const { return interaction_count_; }

  const std::string& node_name(NodeId id) const { return names_[id]; }
  std::optional<NodeId> find_node(std::string_view name) const;

  const PairSeries& pair(PairIdx idx) const { return pairs_[idx]; }
  std::span<const PairSeries> pairs() const { return pairs_; }
  PairIdx find_pair(NodeId u, NodeId v) const;

  /// R(u, v) exactly as stored; empty span when the pair was never ingested
  /// (stored series are never empty).
  std::span<const Interaction> series(NodeId u, NodeId v) const;

  /// Out-neighbors of u with their pair index, sorted by neighbor id.
  std::span<const OutEdge> out_edges(NodeId u) const;

  /// Same structure and timestamps, flows replaced positionally:
  /// flows[k] lands on the k-th interaction in canonical order
  /// (pairs in stored order, events in time order).
  TimeSeriesGraph with_flows(std::span<const Flow> flows) const;

  /// All flow values in canonical order.
  std::vector<Flow> flow_values() const;

  friend bool operator==(const TimeSeriesGraph& a, const TimeSeriesGraph& b) {
    return a.names_ == b.names_ && a.pairs_ == b.pairs_;
  }

 private:
  std::vector<std::string> names_;  // NodeId -> name, lexicographically sorted
  std::vector<PairSeries> pairs_;   // sorted by (u, v)
  std::vector<OutEdge> adjacency_;  // flattened per-u out edges
  std::vector<std::uint32_t> adjacency_offsets_;  // size node_count()+1
  std::size_t interaction_count_ = 0;

  void rebuild_indexes();
};

/// Total flow of the interactions of `series` with lo <= t <= hi (inclusive
/// ends); 0 when none qualify. Throws std::invalid_argument when lo > hi.
Flow window_flow(std::span<const Interaction> series, Timestamp lo, Timestamp hi);

/// Reads `src dst t f` lines; '#'-prefixed lines are comments, node
/// identifiers are arbitrary non-whitespace tokens. Throws ParseError.
std::vector<InteractionRecord> read_interaction_records(std::istream& in);
std::vector<InteractionRecord> read_interaction_file(const std::string& path);

/// Convenience: read + ingest.
TimeSeriesGraph load_graph(const std::string& path);

}  // namespace flowmotif
