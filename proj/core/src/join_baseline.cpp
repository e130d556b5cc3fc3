#include "flowmotif/join_baseline.hpp"

#include <algorithm>
#include <cassert>

namespace flowmotif {

TupleTables build_tuples(const TimeSeriesGraph& g, double delta, Flow phi) {
  TupleTables tables;
  for (PairIdx p = 0; p < g.pair_count(); ++p) {
    const PairSeries& series = g.pair(p);
    for (std::uint32_t b = 0; b < series.size(); ++b) {
      for (std::uint32_t e = b; e < series.size(); ++e) {
        if (series.events[e].t - series.events[b].t > delta) break;
        Flow sum = series.range_sum(b, e + 1);
        if (sum < phi) continue;
        tables.tuples.push_back(
            {p, b, e + 1, series.events[b].t, series.events[e].t, sum});
      }
    }
  }

  const std::size_t n = tables.tuples.size();
  tables.by_source.resize(n);
  tables.by_target.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) tables.by_source[i] = tables.by_target[i] = i;

  auto key_u = [&](std::uint32_t i) {
    const auto& t = tables.tuples[i];
    return std::make_tuple(g.pair(t.pair).u, t.t_s, t.pair, t.begin, t.end);
  };
  auto key_v = [&](std::uint32_t i) {
    const auto& t = tables.tuples[i];
    return std::make_tuple(g.pair(t.pair).v, t.t_s, t.pair, t.begin, t.end);
  };
  std::sort(tables.by_source.begin(), tables.by_source.end(),
            [&](std::uint32_t a, std::uint32_t b) { return key_u(a) < key_u(b); });
  std::sort(tables.by_target.begin(), tables.by_target.end(),
            [&](std::uint32_t a, std::uint32_t b) { return key_v(a) < key_v(b); });

  tables.source_offsets.assign(g.node_count() + 1, 0);
  for (std::uint32_t i : tables.by_source) {
    ++tables.source_offsets[g.pair(tables.tuples[i].pair).u + 1];
  }
  for (std::size_t i = 1; i < tables.source_offsets.size(); ++i) {
    tables.source_offsets[i] += tables.source_offsets[i - 1];
  }
  return tables;
}

std::vector<PartialChain> join_level(const TimeSeriesGraph& g,
                                     const std::vector<PartialChain>& left,
                                     const TupleTables& tables, double delta) {
  std::vector<PartialChain> extended;
  for (const PartialChain& chain : left) {
    const IntervalTuple& tail = tables.tuples[chain.tuple_idx.back()];
    const NodeId join_node = g.pair(tail.pair).v;
    const Timestamp span_limit = chain.start_t + delta;

    const std::uint32_t* slice_begin = tables.by_source.data() + tables.source_offsets[join_node];
    const std::uint32_t* slice_end = tables.by_source.data() + tables.source_offsets[join_node + 1];
    // Slice is sorted by t_s; candidates start strictly after the chain.
    const std::uint32_t* it = std::upper_bound(
        slice_begin, slice_end, chain.last_e,
        [&](Timestamp t, std::uint32_t idx) { return t < tables.tuples[idx].t_s; });
    for (; it != slice_end && tables.tuples[*it].t_s <= span_limit; ++it) {
      const IntervalTuple& next = tables.tuples[*it];
      if (next.t_e > span_limit) continue;
      PartialChain grown = chain;
      grown.tuple_idx.push_back(*it);
      grown.last_e = next.t_e;
      extended.push_back(std::move(grown));
    }
  }
  return extended;
}

namespace {

/// walk[q] for q <= level must realize the motif's vertex-identity pattern:
/// a repeated motif vertex lands on the already-bound node, a new motif
/// vertex on a node unused so far.
bool pattern_ok(const TimeSeriesGraph& g, const TupleTables& tables, const PartialChain& chain,
                const std::vector<std::uint32_t>& first_occurrence) {
  std::vector<NodeId> walk;
  walk.reserve(chain.tuple_idx.size() + 1);
  walk.push_back(g.pair(tables.tuples[chain.tuple_idx.front()].pair).u);
  for (std::uint32_t idx : chain.tuple_idx) {
    walk.push_back(g.pair(tables.tuples[idx].pair).v);
  }
  const std::size_t p = walk.size() - 1;
  if (first_occurrence[p] < p) {
    return walk[p] == walk[first_occurrence[p]];
  }
  for (std::size_t q = 0; q < p; ++q) {
    if (walk[q] == walk[p]) return false;
  }
  return true;
}

}  // namespace

EnumerationResult run_join(const TimeSeriesGraph& g, const Motif& motif, JoinStats* stats) {
  EnumerationResult result;
  result.matches = find_structural_matches(g, motif);

  const TupleTables tables = build_tuples(g, motif.delta(), motif.phi());
  if (stats) {
    stats->tuple_count = tables.tuples.size();
    stats->level_counts.clear();
  }

  const auto path = motif.path();
  std::vector<std::uint32_t> first_occurrence(path.size());
  for (std::size_t p = 0; p < path.size(); ++p) {
    std::size_t q = 0;
    while (path[q] != path[p]) ++q;
    first_occurrence[p] = static_cast<std::uint32_t>(q);
  }

  std::vector<PartialChain> chains;
  for (std::uint32_t i = 0; i < tables.tuples.size(); ++i) {
    PartialChain chain{{i}, tables.tuples[i].t_s, tables.tuples[i].t_e};
    if (pattern_ok(g, tables, chain, first_occurrence)) {
      chains.push_back(std::move(chain));
    }
  }
  if (stats) stats->level_counts.push_back(chains.size());

  for (std::size_t level = 2; level <= motif.edge_count(); ++level) {
    chains = join_level(g, chains, tables, motif.delta());
    std::erase_if(chains, [&](const PartialChain& c) {
      return !pattern_ok(g, tables, c, first_occurrence);
    });
    if (stats) stats->level_counts.push_back(chains.size());
  }

  auto match_index_of = [&](const std::vector<NodeId>& walk) {
    auto it = std::lower_bound(result.matches.begin(), result.matches.end(), walk,
                               [&](const StructuralMatch& m, const std::vector<NodeId>& w) {
                                 return match_walk(m, motif) < w;
                               });
    assert(it != result.matches.end() && match_walk(*it, motif) == walk);
    return static_cast<std::uint32_t>(it - result.matches.begin());
  };

  for (const PartialChain& chain : chains) {
    std::vector<NodeId> walk;
    walk.push_back(g.pair(tables.tuples[chain.tuple_idx.front()].pair).u);
    std::vector<EdgeAssignment> edges;
    edges.reserve(chain.tuple_idx.size());
    for (std::uint32_t idx : chain.tuple_idx) {
      const IntervalTuple& t = tables.tuples[idx];
      walk.push_back(g.pair(t.pair).v);
      edges.push_back({t.begin, t.end});
    }
    const std::uint32_t mi = match_index_of(walk);
    if (!is_maximal(g, result.matches[mi], edges, motif.delta())) continue;
    result.instances.push_back(make_instance(g, result.matches[mi], mi, std::move(edges)));
  }

  std::sort(result.instances.begin(), result.instances.end(),
            [](const MotifInstance& a, const MotifInstance& b) {
              if (a.match_idx != b.match_idx) return a.match_idx < b.match_idx;
              if (a.span_first != b.span_first) return a.span_first < b.span_first;
              return a.edges < b.edges;
            });
  result.instances.erase(std::unique(result.instances.begin(), result.instances.end()),
                         result.instances.end());
  return result;
}

}  // namespace flowmotif
