// Shared helpers for unit and acceptance tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "flowmotif/random.hpp"
#include "flowmotif/time_series_graph.hpp"

namespace fmtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(FLOWMOTIF_FIXTURES_DIR) + "/" + name;
}

/// Seeded random interaction graph, sized for the brute-force oracles:
/// 3..6 nodes, short per-pair series, integer timestamps and flows 1..9.
inline flowmotif::TimeSeriesGraph random_graph(std::uint64_t seed,
                                               std::size_t max_interactions = 16,
                                               std::size_t max_per_pair = 3) {
  using flowmotif::draw_below;
  std::mt19937_64 rng(seed);

  const std::uint32_t nodes = 3 + static_cast<std::uint32_t>(draw_below(rng, 4));  // 3..6
  const std::uint64_t all_pairs = static_cast<std::uint64_t>(nodes) * (nodes - 1);
  const std::uint64_t pair_count =
      std::min<std::uint64_t>(all_pairs, nodes + draw_below(rng, nodes));

  std::vector<std::uint64_t> codes(all_pairs);
  for (std::uint64_t i = 0; i < all_pairs; ++i) codes[i] = i;
  flowmotif::deterministic_shuffle(codes, rng);
  codes.resize(pair_count);

  std::vector<flowmotif::InteractionRecord> records;
  std::size_t total = 0;
  for (std::uint64_t code : codes) {
    if (total >= max_interactions) break;
    const std::uint32_t u = static_cast<std::uint32_t>(code / (nodes - 1));
    std::uint32_t v = static_cast<std::uint32_t>(code % (nodes - 1));
    if (v >= u) ++v;
    const std::size_t events =
        std::min(max_interactions - total, 1 + static_cast<std::size_t>(draw_below(rng, max_per_pair)));
    std::vector<bool> used(30, false);
    for (std::size_t e = 0; e < events; ++e) {
      std::uint64_t t = draw_below(rng, 30);
      while (used[t]) t = (t + 1) % 30;
      used[t] = true;
      flowmotif::InteractionRecord r;
      r.src = std::string(1, static_cast<char>('a' + u));
      r.dst = std::string(1, static_cast<char>('a' + v));
      r.t = static_cast<flowmotif::Timestamp>(t);
      r.f = static_cast<flowmotif::Flow>(1 + draw_below(rng, 9));
      records.push_back(std::move(r));
      ++total;
    }
  }
  return flowmotif::TimeSeriesGraph::ingest(records);
}

/// Graph time span (max t - min t); 0 for empty graphs.
inline double graph_span(const flowmotif::TimeSeriesGraph& g) {
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto& ps : g.pairs()) {
    for (const auto& e : ps.events) {
      if (!any) {
        lo = hi = e.t;
        any = true;
      }
      lo = std::min(lo, e.t);
      hi = std::max(hi, e.t);
    }
  }
  return hi - lo;
}

}  // namespace fmtest
