#pragma once

#include <cstdint>
#include <vector>

#include "flowmotif/motif.hpp"
#include "flowmotif/time_series_graph.hpp"

namespace flowmotif {

/// Flow- and time-agnostic embedding of the motif graph: an injective map
/// from motif vertices to graph nodes plus, per motif edge, the index of the
/// matched graph pair.
struct StructuralMatch {
  std::vector<NodeId> vertex_map;  // motif-vertex index -> graph node
  std::vector<PairIdx> edge_seq;   // per motif edge, matched pair in g

  friend bool operator==(const StructuralMatch&, const StructuralMatch&) = default;
};

/// Nodes visited along the spanning path, size edge_count()+1.
std::vector<NodeId> match_walk(const StructuralMatch& match, const Motif& motif);

/// Phase P1: every walk of motif.edge_count() pair-edges in g that follows
/// the spanning path with an injective vertex assignment. Distinct
/// automorphic embeddings (e.g. cycle rotations) are distinct matches.
/// Deterministically sorted by the node walk.
std::vector<StructuralMatch> find_structural_matches(const TimeSeriesGraph& g,
                                                     const Motif& motif);

}  // namespace flowmotif
