#include "flowmotif/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "flowmotif/parallel.hpp"

namespace flowmotif {

namespace {

constexpr Timestamp kNegInf = -std::numeric_limits<Timestamp>::infinity();
constexpr Timestamp kPosInf = std::numeric_limits<Timestamp>::infinity();

}  // namespace

std::vector<Window> candidate_windows(const TimeSeriesGraph& g, const StructuralMatch& match,
                                      double delta) {
  std::vector<Window> windows;
  const PairSeries& first = g.pair(match.edge_seq.front());
  const PairSeries& last = g.pair(match.edge_seq.back());

  bool have_emitted = false;
  std::size_t emitted_lo = 0, emitted_hi = 0;  // last edge's in-window range
  for (const Interaction& anchor : first.events) {
    Window w{anchor.t, anchor.t + delta, false};
    std::size_t lo = last.lower(w.start);
    std::size_t hi = last.upper(w.end);
    w.skippable = have_emitted && lo == emitted_lo && hi == emitted_hi;
    if (!w.skippable) {
      have_emitted = true;
      emitted_lo = lo;
      emitted_hi = hi;
    }
    windows.push_back(w);
  }
  return windows;
}

namespace {

struct InstanceFinder {
  const TimeSeriesGraph& g;
  const StructuralMatch& match;
  Timestamp window_end;
  Flow phi;
  bool prune_phi;
  std::vector<EdgeAssignment> stack;
  std::vector<std::vector<EdgeAssignment>>* out;

  void recurse(std::size_t edge, Timestamp lo, bool lo_inclusive) {
    const PairSeries& series = g.pair(match.edge_seq[edge]);
    const std::size_t begin = lo_inclusive ? series.lower(lo) : series.upper(lo);
    const std::size_t end = series.upper(window_end);
    if (begin >= end) return;

    if (edge + 1 == match.edge_seq.size()) {
      // Base case: the full remaining in-window set instantiates the last edge.
      if (!prune_phi || series.range_sum(begin, end) >= phi) {
        stack.push_back({static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(end)});
        out->push_back(stack);
        stack.pop_back();
      }
      return;
    }
    // One prefix per interaction of the current edge; the chosen cut is the
    // last interaction assigned to it, and the next edge continues strictly
    // after it.
    for (std::size_t cut = begin; cut < end; ++cut) {
      if (prune_phi && series.range_sum(begin, cut + 1) < phi) continue;
      stack.push_back({static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(cut + 1)});
      recurse(edge + 1, series.events[cut].t, false);
      stack.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<EdgeAssignment>> find_instances(const TimeSeriesGraph& g,
                                                        const StructuralMatch& match,
                                                        std::size_t suffix_start, Timestamp lo,
                                                        bool lo_inclusive, Timestamp hi,
                                                        Flow phi, bool prune_phi) {
  std::vector<std::vector<EdgeAssignment>> result;
  InstanceFinder finder{g, match, hi, phi, prune_phi, {}, &result};
  finder.stack.reserve(match.edge_seq.size() - suffix_start);
  finder.recurse(suffix_start, lo, lo_inclusive);
  return result;
}

std::vector<std::vector<EdgeAssignment>> find_instances(const TimeSeriesGraph& g,
                                                        const StructuralMatch& match,
                                                        const Window& window, Flow phi,
                                                        bool prune_phi) {
  return find_instances(g, match, 0, window.start, true, window.end, phi, prune_phi);
}

bool is_maximal(const TimeSeriesGraph& g, const StructuralMatch& match,
                std::span<const EdgeAssignment> edges, double delta) {
  const std::size_t m = edges.size();
  const Timestamp span_first = g.pair(match.edge_seq[0]).events[edges[0].begin].t;
  const Timestamp span_last = g.pair(match.edge_seq[m - 1]).events[edges[m - 1].end - 1].t;

  for (std::size_t i = 0; i < m; ++i) {
    const PairSeries& series = g.pair(match.edge_seq[i]);
    const Timestamp prev_last =
        i > 0 ? g.pair(match.edge_seq[i - 1]).events[edges[i - 1].end - 1].t : kNegInf;
    const Timestamp next_first =
        i + 1 < m ? g.pair(match.edge_seq[i + 1]).events[edges[i + 1].begin].t : kPosInf;

    // Interactions addable to edge i: strictly between the neighboring
    // edge-sets and keeping the overall span within delta. Every interaction
    // already assigned to edge i lies in this interval.
    std::size_t lo = std::max(series.lower(span_last - delta), series.upper(prev_last));
    std::size_t hi = std::min(series.upper(span_first + delta), series.lower(next_first));
    const std::size_t available = hi > lo ? hi - lo : 0;
    if (available > edges[i].size()) return false;
  }
  return true;
}

void extend_to_maximal(const TimeSeriesGraph& g, const StructuralMatch& match,
                       std::vector<EdgeAssignment>& edges, double delta) {
  // Additions go one interaction at a time with the span recomputed after
  // each: two interactions can each be addable alone yet not together (both
  // ends of a single-edge motif, say). Always extending the earliest
  // extendable edge by the interaction adjacent to its current run (left
  // side first) makes the result canonical.
  const std::size_t m = edges.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < m && !changed; ++i) {
      const Timestamp span_first = g.pair(match.edge_seq[0]).events[edges[0].begin].t;
      const Timestamp span_last = g.pair(match.edge_seq[m - 1]).events[edges[m - 1].end - 1].t;
      const PairSeries& series = g.pair(match.edge_seq[i]);
      const Timestamp prev_last =
          i > 0 ? g.pair(match.edge_seq[i - 1]).events[edges[i - 1].end - 1].t : kNegInf;
      const Timestamp next_first =
          i + 1 < m ? g.pair(match.edge_seq[i + 1]).events[edges[i + 1].begin].t : kPosInf;
      std::size_t lo = std::max(series.lower(span_last - delta), series.upper(prev_last));
      std::size_t hi = std::min(series.upper(span_first + delta), series.lower(next_first));
      if (lo < edges[i].begin) {
        --edges[i].begin;
        changed = true;
      } else if (hi > edges[i].end) {
        ++edges[i].end;
        changed = true;
      }
    }
  }
  assert(is_maximal(g, match, edges, delta));
}

MotifInstance make_instance(const TimeSeriesGraph& g, const StructuralMatch& match,
                            std::uint32_t match_idx, std::vector<EdgeAssignment> edges) {
  MotifInstance inst;
  inst.match_idx = match_idx;
  inst.flow = std::numeric_limits<Flow>::infinity();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const PairSeries& series = g.pair(match.edge_seq[i]);
    inst.flow = std::min(inst.flow, series.range_sum(edges[i].begin, edges[i].end));
  }
  inst.span_first = g.pair(match.edge_seq[0]).events[edges[0].begin].t;
  inst.span_last = g.pair(match.edge_seq.back()).events[edges.back().end - 1].t;
  inst.edges = std::move(edges);
  return inst;
}

namespace {

bool instance_less(const MotifInstance& a, const MotifInstance& b) {
  if (a.match_idx != b.match_idx) return a.match_idx < b.match_idx;
  if (a.span_first != b.span_first) return a.span_first < b.span_first;
  return a.edges < b.edges;  // same match: ranges order == timestamp order
}

}  // namespace

EnumerationResult enumerate_instances(const TimeSeriesGraph& g, const Motif& motif,
                                      unsigned threads) {
  EnumerationResult result;
  result.matches = find_structural_matches(g, motif);

  std::vector<std::vector<MotifInstance>> per_match(result.matches.size());
  parallel_for(result.matches.size(), threads, [&](std::size_t mi) {
    const StructuralMatch& match = result.matches[mi];
    auto& bucket = per_match[mi];
    for (const Window& w : candidate_windows(g, match, motif.delta())) {
      if (w.skippable) continue;
      for (auto& assignment : find_instances(g, match, w, motif.phi())) {
        if (!is_maximal(g, match, assignment, motif.delta())) continue;
        bucket.push_back(
            make_instance(g, match, static_cast<std::uint32_t>(mi), std::move(assignment)));
      }
    }
  });

  std::size_t total = 0;
  for (const auto& bucket : per_match) total += bucket.size();
  result.instances.reserve(total);
  for (auto& bucket : per_match) {
    for (auto& inst : bucket) result.instances.push_back(std::move(inst));
  }

  std::sort(result.instances.begin(), result.instances.end(), instance_less);
  result.instances.erase(std::unique(result.instances.begin(), result.instances.end()),
                         result.instances.end());
  return result;
}

}  // namespace flowmotif
