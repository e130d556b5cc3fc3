#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowmotif/motif.hpp"
#include "flowmotif/structural_match.hpp"
#include "flowmotif/time_series_graph.hpp"

namespace flowmotif {

/// Sliding window [start, end] with end = start + delta, both ends
/// inclusive. `skippable` marks windows whose last-motif-edge in-window
/// interaction set is identical to the previously emitted window's; skipping
/// them cannot lose maximal instances.
struct Window {
  Timestamp start;
  Timestamp end;
  bool skippable = false;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Half-open index range [begin, end) into the matched pair's event series.
/// Edge assignments produced by the enumerator are always contiguous runs;
/// maximality forces this (a skipped middle interaction could be added).
struct EdgeAssignment {
  std::uint32_t begin;
  std::uint32_t end;

  std::uint32_t size() const { return end - begin; }
  friend bool operator==(const EdgeAssignment&, const EdgeAssignment&) = default;
  friend auto operator<=>(const EdgeAssignment&, const EdgeAssignment&) = default;
};

/// A motif instance: per motif edge, a non-empty interaction run from the
/// matched pair's series, time-respecting across edges, span <= delta,
/// with flow = min over edges of the run's flow sum.
struct MotifInstance {
  std::uint32_t match_idx;            // position in the deterministic match list
  std::vector<EdgeAssignment> edges;  // one range per motif edge
  Flow flow;
  Timestamp span_first;
  Timestamp span_last;

  friend bool operator==(const MotifInstance&, const MotifInstance&) = default;
};

struct EnumerationResult {
  std::vector<StructuralMatch> matches;  // sorted as by find_structural_matches
  std::vector<MotifInstance> instances;  // sorted by (match, span.first, timestamps)
};

/// One window [t, t + delta] per distinct timestamp t of the first matched
/// edge's series, in ascending order, with the skip rule applied.
std::vector<Window> candidate_windows(const TimeSeriesGraph& g, const StructuralMatch& match,
                                      double delta);

/// The recursive instance-finding module: all assignments of the motif-edge
/// suffix starting at `suffix_start` to interactions inside the interval
/// (lo, hi] (closed at lo when lo_inclusive). Every prefix of the current
/// edge must aggregate at least phi; when prune_phi is false the phi check
/// is skipped entirely and callers filter afterwards.
std::vector<std::vector<EdgeAssignment>> find_instances(const TimeSeriesGraph& g,
                                                        const StructuralMatch& match,
                                                        std::size_t suffix_start, Timestamp lo,
                                                        bool lo_inclusive, Timestamp hi,
                                                        Flow phi, bool prune_phi = true);

/// Convenience overload: full spanning path inside a candidate window.
std::vector<std::vector<EdgeAssignment>> find_instances(const TimeSeriesGraph& g,
                                                        const StructuralMatch& match,
                                                        const Window& window, Flow phi,
                                                        bool prune_phi = true);

/// True iff no interaction from any matched pair's series can be added to
/// its edge-set without breaking the strict time-respecting order or the
/// duration bound. Flow sums only grow under addition, so phi never newly
/// fails and does not participate.
bool is_maximal(const TimeSeriesGraph& g, const StructuralMatch& match,
                std::span<const EdgeAssignment> edges, double delta);

/// Grows the given assignment to a maximal one in place (deterministic
/// fixpoint sweep). Flow can only grow.
void extend_to_maximal(const TimeSeriesGraph& g, const StructuralMatch& match,
                       std::vector<EdgeAssignment>& edges, double delta);

/// Flow (Eq.-1 min over edges) and span of an assignment.
MotifInstance make_instance(const TimeSeriesGraph& g, const StructuralMatch& match,
                            std::uint32_t match_idx, std::vector<EdgeAssignment> edges);

/// Phase P1 + P2: exactly the maximal instances of `motif` in `g`,
/// deterministically ordered. Work is split per structural match when
/// threads > 1; results are identical for any thread count.
EnumerationResult enumerate_instances(const TimeSeriesGraph& g, const Motif& motif,
                                      unsigned threads = 1);

}  // namespace flowmotif
