#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "flowmotif/enumerator.hpp"

namespace flowmotif {

/// Total order used to rank instances: larger flow first, then earlier
/// span, then match order, then lexicographic assignment ranges.
struct RanksBefore {
  bool operator()(const MotifInstance& a, const MotifInstance& b) const {
    if (a.flow != b.flow) return a.flow > b.flow;
    if (a.span_first != b.span_first) return a.span_first < b.span_first;
    if (a.match_idx != b.match_idx) return a.match_idx < b.match_idx;
    return a.edges < b.edges;
  }
};

/// Bounded best-k collection with the floating threshold of the k-th
/// instance's flow (0 until k instances are held). The threshold never
/// decreases over a run, and merging per-worker states is associative.
class TopKState {
 public:
  explicit TopKState(std::size_t k) : k_(k) {}

  std::size_t size() const { return best_.size(); }
  Flow threshold() const { return best_.size() == k_ ? std::prev(best_.end())->flow : 0; }

  void insert(MotifInstance inst) {
    if (k_ == 0) return;
    best_.insert(std::move(inst));
    if (best_.size() > k_) best_.erase(std::prev(best_.end()));
  }

  void merge(TopKState&& other) {
    for (auto it = other.best_.begin(); it != other.best_.end();) {
      insert(std::move(other.best_.extract(it++).value()));
    }
  }

  std::vector<MotifInstance> take_ranked() {
    std::vector<MotifInstance> out(best_.begin(), best_.end());
    best_.clear();
    return out;
  }

 private:
  std::size_t k_;
  std::set<MotifInstance, RanksBefore> best_;
};

struct TopKResult {
  std::vector<StructuralMatch> matches;
  std::vector<MotifInstance> instances;  // best-first, at most k
};

/// The k maximal instances of largest flow (phi replaced by the floating
/// threshold during the search). motif.phi() is ignored.
TopKResult topk(const TimeSeriesGraph& g, const Motif& motif_graph, double delta, std::size_t k,
                unsigned threads = 1);

/// Max-min dynamic program over one candidate window: row 1 holds the
/// prefix window flows of the first matched edge, row kappa extends by the
/// best split point. Cells with no feasible assignment hold 0 (flows are
/// positive, so 0 always means infeasible).
struct DpTable {
  std::vector<Timestamp> timestamps;  // distinct in-window timestamps of the match
  std::vector<std::vector<Flow>> rows;  // rows[kappa-1][i]
  // split[kappa-2][i] = first maximizing split index j for row kappa >= 2.
  std::vector<std::vector<std::uint32_t>> split;

  Flow final_value() const {
    return rows.empty() || rows.back().empty() ? 0 : rows.back().back();
  }
};

DpTable dp_table(const TimeSeriesGraph& g, const StructuralMatch& match, const Window& window);

/// Same final value as dp_table but keeps only two rows.
Flow dp_maxflow(const TimeSeriesGraph& g, const StructuralMatch& match, const Window& window);

/// Traceback over the recorded split points; empty when no instance exists.
std::vector<EdgeAssignment> dp_witness(const TimeSeriesGraph& g, const StructuralMatch& match,
                                       const Window& window, const DpTable& table);

struct Top1Result {
  Flow flow;
  std::uint32_t match_idx;
  Window window;
  MotifInstance instance;  // maximal witness with flow == flow
};

/// Maximum of dp_maxflow over all matches and windows, with a maximal
/// witness reconstructed by traceback. nullopt when no instance exists.
std::optional<Top1Result> top1(const TimeSeriesGraph& g, const Motif& motif_graph, double delta,
                               unsigned threads = 1);

enum class GroupBy { Match, Window };

struct MatchGroupRow {
  std::uint32_t match_idx;
  Flow flow;
};
struct WindowGroupRow {
  Window window;
  Flow flow;
};

struct GroupedTop1 {
  std::vector<StructuralMatch> matches;
  std::vector<MatchGroupRow> by_match;    // when grouped by match
  std::vector<WindowGroupRow> by_window;  // when grouped by window
};

/// Per-group top-1 flows; groups with no feasible instance are omitted.
/// Window groups are keyed by the window interval and max-merged across
/// matches, in ascending window order.
GroupedTop1 top1_grouped(const TimeSeriesGraph& g, const Motif& motif_graph, double delta,
                         GroupBy group_by, unsigned threads = 1);

}  // namespace flowmotif
