#include "flowmotif/time_series_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace flowmotif {

namespace {

struct IndexedRecord {
  NodeId src;
  NodeId dst;
  Timestamp t;
  Flow f;
  std::uint32_t line;
};

bool parse_number(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

std::size_t PairSeries::lower(Timestamp t) const {
  return static_cast<std::size_t>(
      std::lower_bound(events.begin(), events.end(), t,
                       [](const Interaction& e, Timestamp x) { return e.t < x; }) -
      events.begin());
}

std::size_t PairSeries::upper(Timestamp t) const {
  return static_cast<std::size_t>(
      std::upper_bound(events.begin(), events.end(), t,
                       [](Timestamp x, const Interaction& e) { return x < e.t; }) -
      events.begin());
}

TimeSeriesGraph TimeSeriesGraph::ingest(std::span<const InteractionRecord> records) {
  TimeSeriesGraph g;

  for (const auto& r : records) {
    if (!std::isfinite(r.f) || r.f <= 0) {
      throw IngestError("rejected record (" + r.src + " -> " + r.dst +
                            "): flow must be positive, got " + std::to_string(r.f),
                        r.line);
    }
    if (!std::isfinite(r.t)) {
      throw IngestError("rejected record (" + r.src + " -> " + r.dst +
                            "): timestamp must be finite",
                        r.line);
    }
  }

  std::vector<std::string> names;
  names.reserve(records.size() * 2);
  for (const auto& r : records) {
    names.push_back(r.src);
    names.push_back(r.dst);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  g.names_ = std::move(names);

  auto id_of = [&g](const std::string& name) {
    auto it = std::lower_bound(g.names_.begin(), g.names_.end(), name);
    return static_cast<NodeId>(it - g.names_.begin());
  };

  std::vector<IndexedRecord> indexed;
  indexed.reserve(records.size());
  for (const auto& r : records) {
    indexed.push_back({id_of(r.src), id_of(r.dst), r.t, r.f, r.line});
  }
  std::sort(indexed.begin(), indexed.end(), [](const IndexedRecord& a, const IndexedRecord& b) {
    return std::tie(a.src, a.dst, a.t, a.line) < std::tie(b.src, b.dst, b.t, b.line);
  });

  for (std::size_t i = 0; i + 1 < indexed.size(); ++i) {
    const auto& a = indexed[i];
    const auto& b = indexed[i + 1];
    if (a.src == b.src && a.dst == b.dst && a.t == b.t) {
      std::ostringstream msg;
      msg << "duplicate timestamp " << a.t << " on pair (" << g.names_[a.src] << ", "
          << g.names_[a.dst] << ")";
      throw IngestError(msg.str(), b.line);
    }
  }

  for (std::size_t i = 0; i < indexed.size();) {
    std::size_t j = i;
    while (j < indexed.size() && indexed[j].src == indexed[i].src &&
           indexed[j].dst == indexed[i].dst) {
      ++j;
    }
    PairSeries ps;
    ps.u = indexed[i].src;
    ps.v = indexed[i].dst;
    ps.events.reserve(j - i);
    for (std::size_t k = i; k < j; ++k) {
      ps.events.push_back({indexed[k].t, indexed[k].f});
    }
    g.pairs_.push_back(std::move(ps));
    i = j;
  }

  g.interaction_count_ = records.size();
  g.rebuild_indexes();
  return g;
}

void TimeSeriesGraph::rebuild_indexes() {
  for (auto& ps : pairs_) {
    ps.prefix.resize(ps.events.size() + 1);
    ps.prefix[0] = 0;
    for (std::size_t i = 0; i < ps.events.size(); ++i) {
      ps.prefix[i + 1] = ps.prefix[i] + ps.events[i].f;
    }
  }

  adjacency_.clear();
  adjacency_offsets_.assign(names_.size() + 1, 0);
  for (const auto& ps : pairs_) {
    ++adjacency_offsets_[ps.u + 1];
  }
  for (std::size_t i = 1; i < adjacency_offsets_.size(); ++i) {
    adjacency_offsets_[i] += adjacency_offsets_[i - 1];
  }
  adjacency_.resize(pairs_.size());
  std::vector<std::uint32_t> cursor(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (PairIdx p = 0; p < pairs_.size(); ++p) {
    adjacency_[cursor[pairs_[p].u]++] = OutEdge{pairs_[p].v, p};
  }
  // pairs_ is sorted by (u, v), so each adjacency block is sorted by `to`.
}

std::optional<NodeId> TimeSeriesGraph::find_node(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<NodeId>(it - names_.begin());
}

PairIdx TimeSeriesGraph::find_pair(NodeId u, NodeId v) const {
  if (u >= names_.size()) return kNoPair;
  auto edges = out_edges(u);
  auto it = std::lower_bound(edges.begin(), edges.end(), v,
                             [](const OutEdge& e, NodeId x) { return e.to < x; });
  if (it == edges.end() || it->to != v) return kNoPair;
  return it->pair;
}

std::span<const Interaction> TimeSeriesGraph::series(NodeId u, NodeId v) const {
  PairIdx p = find_pair(u, v);
  if (p == kNoPair) return {};
  return pairs_[p].events;
}

std::span<const OutEdge> TimeSeriesGraph::out_edges(NodeId u) const {
  return std::span<const OutEdge>(adjacency_.data() + adjacency_offsets_[u],
                                  adjacency_offsets_[u + 1] - adjacency_offsets_[u]);
}

TimeSeriesGraph TimeSeriesGraph::with_flows(std::span<const Flow> flows) const {
  TimeSeriesGraph g = *this;
  std::size_t k = 0;
  for (auto& ps : g.pairs_) {
    for (auto& e : ps.events) {
      e.f = flows[k++];
    }
  }
  g.rebuild_indexes();
  return g;
}

std::vector<Flow> TimeSeriesGraph::flow_values() const {
  std::vector<Flow> flows;
  flows.reserve(interaction_count_);
  for (const auto& ps : pairs_) {
    for (const auto& e : ps.events) {
      flows.push_back(e.f);
    }
  }
  return flows;
}

Flow window_flow(std::span<const Interaction> series, Timestamp lo, Timestamp hi) {
  if (lo > hi) {
    throw std::invalid_argument("invalid interval: lo > hi");
  }
  auto begin = std::lower_bound(series.begin(), series.end(), lo,
                                [](const Interaction& e, Timestamp x) { return e.t < x; });
  auto end = std::upper_bound(series.begin(), series.end(), hi,
                              [](Timestamp x, const Interaction& e) { return x < e.t; });
  Flow sum = 0;
  for (auto it = begin; it != end; ++it) sum += it->f;
  return sum;
}

std::vector<InteractionRecord> read_interaction_records(std::istream& in) {
  std::vector<InteractionRecord> records;
  std::string line;
  std::uint32_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string src, dst, t_tok, f_tok, extra;
    if (!(fields >> src)) continue;  // blank line
    if (src[0] == '#') continue;
    if (!(fields >> dst >> t_tok >> f_tok)) {
      throw ParseError("expected 4 fields `src dst t f`", line_no);
    }
    if (fields >> extra) {
      throw ParseError("trailing field '" + extra + "'", line_no);
    }
    InteractionRecord r;
    r.src = std::move(src);
    r.dst = std::move(dst);
    r.line = line_no;
    if (!parse_number(t_tok, r.t)) {
      throw ParseError("bad timestamp '" + t_tok + "'", line_no);
    }
    if (!parse_number(f_tok, r.f)) {
      throw ParseError("bad flow '" + f_tok + "'", line_no);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<InteractionRecord> read_interaction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open graph file '" + path + "'", 0);
  }
  return read_interaction_records(in);
}

TimeSeriesGraph load_graph(const std::string& path) {
  auto records = read_interaction_file(path);
  return TimeSeriesGraph::ingest(records);
}

}  // namespace flowmotif
