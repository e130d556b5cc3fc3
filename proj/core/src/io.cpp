#include "flowmotif/io.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace flowmotif {

std::string format_number(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string walk_string(const TimeSeriesGraph& g, const std::vector<NodeId>& walk) {
  std::string s;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) s += "->";
    s += g.node_name(walk[i]);
  }
  return s;
}

namespace {

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

std::string edges_tsv(const TimeSeriesGraph& g, const StructuralMatch& match,
                      const MotifInstance& inst) {
  std::string s;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    if (i > 0) s += '|';
    const PairSeries& series = g.pair(match.edge_seq[i]);
    for (std::uint32_t k = inst.edges[i].begin; k < inst.edges[i].end; ++k) {
      if (k > inst.edges[i].begin) s += ',';
      s += format_number(series.events[k].t);
      s += ':';
      s += format_number(series.events[k].f);
    }
  }
  return s;
}

std::string edges_json(const TimeSeriesGraph& g, const StructuralMatch& match,
                       const MotifInstance& inst) {
  std::string s = "[";
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    if (i > 0) s += ',';
    s += '[';
    const PairSeries& series = g.pair(match.edge_seq[i]);
    for (std::uint32_t k = inst.edges[i].begin; k < inst.edges[i].end; ++k) {
      if (k > inst.edges[i].begin) s += ',';
      s += '[';
      s += format_number(series.events[k].t);
      s += ',';
      s += format_number(series.events[k].f);
      s += ']';
    }
    s += ']';
  }
  s += ']';
  return s;
}

std::string walk_json(const TimeSeriesGraph& g, const std::vector<NodeId>& walk) {
  std::string s = "[";
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) s += ',';
    append_json_string(s, g.node_name(walk[i]));
  }
  s += ']';
  return s;
}

}  // namespace

void write_instances(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                     const std::vector<StructuralMatch>& matches,
                     const std::vector<MotifInstance>& instances, OutputFormat format,
                     bool with_rank) {
  std::size_t rank = 0;
  for (const MotifInstance& inst : instances) {
    ++rank;
    const StructuralMatch& match = matches[inst.match_idx];
    const auto walk = match_walk(match, motif);
    if (format == OutputFormat::Tsv) {
      if (with_rank) out << rank << '\t';
      out << walk_string(g, walk) << '\t' << edges_tsv(g, match, inst) << '\t'
          << format_number(inst.flow) << '\t' << format_number(inst.span_first) << '\t'
          << format_number(inst.span_last) << '\n';
    } else {
      std::string line = "{";
      if (with_rank) {
        line += "\"rank\":" + std::to_string(rank) + ",";
      }
      line += "\"walk\":" + walk_json(g, walk);
      line += ",\"edges\":" + edges_json(g, match, inst);
      line += ",\"flow\":" + format_number(inst.flow);
      line += ",\"span\":[" + format_number(inst.span_first) + "," +
              format_number(inst.span_last) + "]}";
      out << line << '\n';
    }
  }
}

void write_matches(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                   const std::vector<StructuralMatch>& matches, OutputFormat format) {
  for (const StructuralMatch& match : matches) {
    const auto walk = match_walk(match, motif);
    if (format == OutputFormat::Tsv) {
      out << walk_string(g, walk) << '\n';
    } else {
      out << "{\"walk\":" << walk_json(g, walk) << "}\n";
    }
  }
}

void write_grouped(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                   const GroupedTop1& grouped, OutputFormat format) {
  for (const MatchGroupRow& row : grouped.by_match) {
    const auto walk = match_walk(grouped.matches[row.match_idx], motif);
    if (format == OutputFormat::Tsv) {
      out << walk_string(g, walk) << '\t' << format_number(row.flow) << '\n';
    } else {
      out << "{\"match\":" << walk_json(g, walk) << ",\"flow\":" << format_number(row.flow)
          << "}\n";
    }
  }
  for (const WindowGroupRow& row : grouped.by_window) {
    if (format == OutputFormat::Tsv) {
      out << format_number(row.window.start) << '\t' << format_number(row.window.end) << '\t'
          << format_number(row.flow) << '\n';
    } else {
      out << "{\"window\":[" << format_number(row.window.start) << ','
          << format_number(row.window.end) << "],\"flow\":" << format_number(row.flow)
          << "}\n";
    }
  }
}

void write_significance(std::ostream& out, const NullModelReport& report, OutputFormat format) {
  const std::string z = report.z ? format_number(*report.z) : "undefined";
  if (format == OutputFormat::Tsv) {
    out << "motif\treal_count\tmean\tstddev\tz\tp\n";
    out << report.motif_id << '\t' << report.real_count << '\t' << format_number(report.mean)
        << '\t' << format_number(report.stddev) << '\t' << z << '\t'
        << format_number(report.p_value) << '\n';
  } else {
    std::string line = "{\"motif\":";
    append_json_string(line, report.motif_id);
    line += ",\"real_count\":" + std::to_string(report.real_count);
    line += ",\"sample_counts\":[";
    for (std::size_t i = 0; i < report.sample_counts.size(); ++i) {
      if (i > 0) line += ',';
      line += std::to_string(report.sample_counts[i]);
    }
    line += "],\"mean\":" + format_number(report.mean);
    line += ",\"stddev\":" + format_number(report.stddev);
    line += ",\"z\":" + (report.z ? format_number(*report.z) : std::string("null"));
    line += ",\"p\":" + format_number(report.p_value) + "}";
    out << line << '\n';
  }
}

}  // namespace flowmotif
