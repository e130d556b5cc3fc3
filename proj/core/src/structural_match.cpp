#include "flowmotif/structural_match.hpp"

#include <algorithm>

namespace flowmotif {

std::vector<NodeId> match_walk(const StructuralMatch& match, const Motif& motif) {
  std::vector<NodeId> walk;
  walk.reserve(match.edge_seq.size() + 1);
  for (std::uint32_t v : motif.path()) {
    walk.push_back(match.vertex_map[v]);
  }
  return walk;
}

namespace {

constexpr NodeId kUnassigned = static_cast<NodeId>(-1);

struct MatcherState {
  const TimeSeriesGraph& g;
  const std::vector<std::uint32_t>& path;  // motif vertices along the spanning path
  std::vector<NodeId> assignment;          // motif vertex -> node or kUnassigned
  std::vector<bool> node_used;             // injectivity
  std::vector<PairIdx> edge_seq;
  std::vector<StructuralMatch>* out;

  void walk_from(std::size_t depth) {
    if (depth == path.size()) {
      out->push_back(StructuralMatch{assignment, edge_seq});
      return;
    }
    const NodeId current = assignment[path[depth - 1]];
    const std::uint32_t want = path[depth];
    if (assignment[want] != kUnassigned) {
      // Revisit required by the motif (e.g. cycle closure); the edge to the
      // already-assigned node must exist.
      PairIdx p = g.find_pair(current, assignment[want]);
      if (p == kNoPair) return;
      edge_seq.push_back(p);
      walk_from(depth + 1);
      edge_seq.pop_back();
      return;
    }
    for (const OutEdge& e : g.out_edges(current)) {  // sorted by node id
      if (node_used[e.to]) continue;
      assignment[want] = e.to;
      node_used[e.to] = true;
      edge_seq.push_back(e.pair);
      walk_from(depth + 1);
      edge_seq.pop_back();
      node_used[e.to] = false;
      assignment[want] = kUnassigned;
    }
  }
};

}  // namespace

std::vector<StructuralMatch> find_structural_matches(const TimeSeriesGraph& g,
                                                     const Motif& motif) {
  std::vector<StructuralMatch> matches;
  if (motif.edge_count() == 0 || g.node_count() == 0) return matches;

  const auto path = motif.path();
  MatcherState state{g,
                     path,
                     std::vector<NodeId>(motif.vertex_count(), kUnassigned),
                     std::vector<bool>(g.node_count(), false),
                     {},
                     &matches};
  state.edge_seq.reserve(motif.edge_count());

  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (g.out_edges(start).empty()) continue;  // cannot begin a walk
    state.assignment[path[0]] = start;
    state.node_used[start] = true;
    state.walk_from(1);
    state.node_used[start] = false;
    state.assignment[path[0]] = kUnassigned;
  }

  std::sort(matches.begin(), matches.end(),
            [&](const StructuralMatch& a, const StructuralMatch& b) {
              return match_walk(a, motif) < match_walk(b, motif);
            });
  return matches;
}

}  // namespace flowmotif
