// Independent brute-force oracles for the search modules. Everything here
// enumerates exhaustively from the definitions (injective vertex maps,
// arbitrary per-edge interaction subsets) and never reuses the library's
// search path.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flowmotif/enumerator.hpp"
#include "flowmotif/motif.hpp"
#include "flowmotif/structural_match.hpp"
#include "flowmotif/time_series_graph.hpp"

namespace fmtest {

using flowmotif::EnumerationResult;
using flowmotif::Motif;
using flowmotif::NodeId;
using flowmotif::StructuralMatch;
using flowmotif::Timestamp;
using flowmotif::TimeSeriesGraph;

/// All injective motif-vertex -> node assignments whose induced edges all
/// exist, sorted by walk like find_structural_matches.
std::vector<StructuralMatch> oracle_matches(const TimeSeriesGraph& g, const Motif& motif);

/// Per motif edge, the chosen series indices (sorted, non-empty).
using Picks = std::vector<std::vector<std::uint32_t>>;

/// Visits every valid instance of one match: any non-empty subset per edge,
/// strict time-respecting order across edges, span <= delta, per-edge flow
/// sum >= phi. Subsets are arbitrary, not just contiguous runs.
void oracle_for_each_valid(const TimeSeriesGraph& g, const StructuralMatch& match, double delta,
                           double phi, const std::function<void(const Picks&)>& fn);

/// True iff some single interaction can be added to some edge-set without
/// violating the order or duration constraints.
bool oracle_extendable(const TimeSeriesGraph& g, const StructuralMatch& match,
                       const Picks& picks, double delta);

double oracle_flow(const TimeSeriesGraph& g, const StructuralMatch& match, const Picks& picks);

/// Canonical form for set comparison: (match index, per-edge timestamps).
using Normalized = std::pair<std::uint32_t, std::vector<std::vector<Timestamp>>>;

/// All maximal instances over the given match list, sorted.
std::vector<Normalized> oracle_maximal_set(const TimeSeriesGraph& g, const Motif& motif,
                                           const std::vector<StructuralMatch>& matches);

/// Count of valid (not necessarily maximal) instances at (delta, phi).
std::size_t oracle_valid_count(const TimeSeriesGraph& g, const Motif& motif,
                               const std::vector<StructuralMatch>& matches, double delta,
                               double phi);

/// Max instance flow at phi = 0; 0 when no valid instance exists.
double oracle_max_flow(const TimeSeriesGraph& g, const Motif& motif,
                       const std::vector<StructuralMatch>& matches, double delta);

/// Max flow over valid instances of one match whose interactions all lie in
/// [window_start, window_end]; 0 when none.
double oracle_window_max_flow(const TimeSeriesGraph& g, const StructuralMatch& match,
                              double delta, Timestamp window_start, Timestamp window_end);

/// Library output in the oracle's canonical form, sorted.
std::vector<Normalized> normalize_result(const EnumerationResult& result,
                                         const TimeSeriesGraph& g);

}  // namespace fmtest
