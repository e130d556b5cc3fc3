#include "flowmotif/topk.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "flowmotif/parallel.hpp"

namespace flowmotif {

namespace {

constexpr std::uint32_t kNoSplit = static_cast<std::uint32_t>(-1);

/// Per-edge cumulative in-window flows aligned to the merged timestamp
/// sequence: cum[k][a] = total flow of edge k's in-window interactions with
/// t <= timestamps[a].
struct WindowSums {
  std::vector<Timestamp> timestamps;
  std::vector<std::vector<Flow>> cum;

  WindowSums(const TimeSeriesGraph& g, const StructuralMatch& match, const Window& window) {
    const std::size_t m = match.edge_seq.size();
    std::vector<std::pair<std::size_t, std::size_t>> ranges(m);
    for (std::size_t k = 0; k < m; ++k) {
      const PairSeries& series = g.pair(match.edge_seq[k]);
      ranges[k] = {series.lower(window.start), series.upper(window.end)};
      for (std::size_t i = ranges[k].first; i < ranges[k].second; ++i) {
        timestamps.push_back(series.events[i].t);
      }
    }
    std::sort(timestamps.begin(), timestamps.end());
    timestamps.erase(std::unique(timestamps.begin(), timestamps.end()), timestamps.end());

    cum.assign(m, std::vector<Flow>(timestamps.size(), 0));
    for (std::size_t k = 0; k < m; ++k) {
      const PairSeries& series = g.pair(match.edge_seq[k]);
      std::size_t pos = ranges[k].first;
      Flow running = 0;
      for (std::size_t a = 0; a < timestamps.size(); ++a) {
        while (pos < ranges[k].second && series.events[pos].t <= timestamps[a]) {
          running += series.events[pos].f;
          ++pos;
        }
        cum[k][a] = running;
      }
    }
  }

  // flow([t_j, t_i], edge k), boundaries inclusive; j == 0 means from the
  // window start.
  Flow range_flow(std::size_t k, std::size_t j, std::size_t i) const {
    return cum[k][i] - (j > 0 ? cum[k][j - 1] : 0);
  }
};

}  // namespace

DpTable dp_table(const TimeSeriesGraph& g, const StructuralMatch& match, const Window& window) {
  const std::size_t m = match.edge_seq.size();
  WindowSums sums(g, match, window);
  const std::size_t tau = sums.timestamps.size();

  DpTable table;
  table.timestamps = sums.timestamps;
  table.rows.assign(m, std::vector<Flow>(tau, 0));
  table.split.assign(m >= 1 ? m - 1 : 0, std::vector<std::uint32_t>(tau, kNoSplit));
  if (tau == 0) return table;

  table.rows[0] = sums.cum[0];
  for (std::size_t kappa = 2; kappa <= m; ++kappa) {
    const auto& prev = table.rows[kappa - 2];
    auto& row = table.rows[kappa - 1];
    auto& split = table.split[kappa - 2];
    for (std::size_t i = 0; i < tau; ++i) {
      Flow best = 0;
      std::uint32_t best_j = kNoSplit;
      for (std::size_t j = 1; j <= i; ++j) {
        Flow candidate = std::min(prev[j - 1], sums.range_flow(kappa - 1, j, i));
        if (candidate > best) {
          best = candidate;
          best_j = static_cast<std::uint32_t>(j);
        }
      }
      row[i] = best;
      split[i] = best_j;
    }
  }
  return table;
}

Flow dp_maxflow(const TimeSeriesGraph& g, const StructuralMatch& match, const Window& window) {
  const std::size_t m = match.edge_seq.size();
  WindowSums sums(g, match, window);
  const std::size_t tau = sums.timestamps.size();
  if (tau == 0) return 0;

  std::vector<Flow> prev = sums.cum[0];
  std::vector<Flow> row(tau);
  for (std::size_t kappa = 2; kappa <= m; ++kappa) {
    for (std::size_t i = 0; i < tau; ++i) {
      Flow best = 0;
      for (std::size_t j = 1; j <= i; ++j) {
        Flow candidate = std::min(prev[j - 1], sums.range_flow(kappa - 1, j, i));
        if (candidate > best) best = candidate;
      }
      row[i] = best;
    }
    std::swap(prev, row);
  }
  return prev[tau - 1];
}

std::vector<EdgeAssignment> dp_witness(const TimeSeriesGraph& g, const StructuralMatch& match,
                                       const Window& window, const DpTable& table) {
  const std::size_t m = match.edge_seq.size();
  if (table.final_value() <= 0) return {};

  std::vector<EdgeAssignment> edges(m);
  std::size_t i = table.timestamps.size() - 1;
  for (std::size_t kappa = m; kappa >= 2; --kappa) {
    const std::uint32_t j = table.split[kappa - 2][i];
    assert(j != kNoSplit);
    const PairSeries& series = g.pair(match.edge_seq[kappa - 1]);
    edges[kappa - 1] = {
        static_cast<std::uint32_t>(series.lower(table.timestamps[j])),
        static_cast<std::uint32_t>(series.upper(table.timestamps[i]))};
    i = j - 1;
  }
  const PairSeries& first = g.pair(match.edge_seq[0]);
  edges[0] = {static_cast<std::uint32_t>(first.lower(window.start)),
              static_cast<std::uint32_t>(first.upper(table.timestamps[i]))};
  return edges;
}

namespace {

struct MatchBest {
  Flow flow = 0;
  Window window{};
};

std::vector<MatchBest> best_per_match(const TimeSeriesGraph& g,
                                      const std::vector<StructuralMatch>& matches, double delta,
                                      unsigned threads) {
  std::vector<MatchBest> best(matches.size());
  parallel_for(matches.size(), threads, [&](std::size_t mi) {
    for (const Window& w : candidate_windows(g, matches[mi], delta)) {
      if (w.skippable) continue;
      Flow f = dp_maxflow(g, matches[mi], w);
      if (f > best[mi].flow) best[mi] = {f, w};
    }
  });
  return best;
}

}  // namespace

std::optional<Top1Result> top1(const TimeSeriesGraph& g, const Motif& motif_graph, double delta,
                               unsigned threads) {
  const auto matches = find_structural_matches(g, motif_graph);
  const auto best = best_per_match(g, matches, delta, threads);

  std::size_t winner = matches.size();
  for (std::size_t mi = 0; mi < matches.size(); ++mi) {
    if (best[mi].flow > 0 && (winner == matches.size() || best[mi].flow > best[winner].flow)) {
      winner = mi;
    }
  }
  if (winner == matches.size()) return std::nullopt;

  const DpTable table = dp_table(g, matches[winner], best[winner].window);
  std::vector<EdgeAssignment> edges = dp_witness(g, matches[winner], best[winner].window, table);
  extend_to_maximal(g, matches[winner], edges, delta);
  MotifInstance inst =
      make_instance(g, matches[winner], static_cast<std::uint32_t>(winner), std::move(edges));
  assert(inst.flow == best[winner].flow);
  return Top1Result{best[winner].flow, static_cast<std::uint32_t>(winner), best[winner].window,
                    std::move(inst)};
}

GroupedTop1 top1_grouped(const TimeSeriesGraph& g, const Motif& motif_graph, double delta,
                         GroupBy group_by, unsigned threads) {
  GroupedTop1 result;
  result.matches = find_structural_matches(g, motif_graph);

  if (group_by == GroupBy::Match) {
    const auto best = best_per_match(g, result.matches, delta, threads);
    for (std::size_t mi = 0; mi < best.size(); ++mi) {
      if (best[mi].flow > 0) {
        result.by_match.push_back({static_cast<std::uint32_t>(mi), best[mi].flow});
      }
    }
    return result;
  }

  std::vector<std::vector<WindowGroupRow>> per_match(result.matches.size());
  parallel_for(result.matches.size(), threads, [&](std::size_t mi) {
    for (const Window& w : candidate_windows(g, result.matches[mi], delta)) {
      if (w.skippable) continue;
      Flow f = dp_maxflow(g, result.matches[mi], w);
      if (f > 0) per_match[mi].push_back({w, f});
    }
  });
  std::map<Timestamp, Flow> merged;
  for (const auto& rows : per_match) {
    for (const auto& row : rows) {
      auto [it, inserted] = merged.emplace(row.window.start, row.flow);
      if (!inserted) it->second = std::max(it->second, row.flow);
    }
  }
  for (const auto& [start, flow] : merged) {
    result.by_window.push_back({Window{start, start + delta, false}, flow});
  }
  return result;
}

TopKResult topk(const TimeSeriesGraph& g, const Motif& motif_graph, double delta, std::size_t k,
                unsigned threads) {
  TopKResult result;
  result.matches = find_structural_matches(g, motif_graph);

  const unsigned workers =
      std::max(1u, static_cast<unsigned>(
                       std::min<std::size_t>(threads, std::max<std::size_t>(1, result.matches.size()))));
  std::vector<TopKState> states(workers, TopKState(k));
  parallel_for(workers, workers, [&](std::size_t w) {
    TopKState& state = states[w];
    for (std::size_t mi = w; mi < result.matches.size(); mi += workers) {
      const StructuralMatch& match = result.matches[mi];
      for (const Window& window : candidate_windows(g, match, delta)) {
        if (window.skippable) continue;
        // The floating threshold stands in for phi; it only tightens as
        // better instances arrive, so no qualifying instance is pruned.
        for (auto& assignment : find_instances(g, match, window, state.threshold())) {
          if (!is_maximal(g, match, assignment, delta)) continue;
          state.insert(
              make_instance(g, match, static_cast<std::uint32_t>(mi), std::move(assignment)));
        }
      }
    }
  });

  TopKState merged(std::move(states[0]));
  for (unsigned w = 1; w < workers; ++w) merged.merge(std::move(states[w]));
  result.instances = merged.take_ranked();
  return result;
}

}  // namespace flowmotif
