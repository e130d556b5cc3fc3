#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flowmotif/enumerator.hpp"
#include "flowmotif/significance.hpp"
#include "flowmotif/topk.hpp"

namespace flowmotif {

enum class OutputFormat { Tsv, Jsonl };

/// Shortest decimal form that round-trips the exact double ("5", "0.1").
std::string format_number(double value);

/// Node walks joined with "->".
std::string walk_string(const TimeSeriesGraph& g, const std::vector<NodeId>& walk);

/// Instance records: walk, per-edge [t,f] lists, flow, span. TSV flattens
/// the per-edge lists as `t:f,t:f|t:f`; with_rank prepends a 1-based rank.
void write_instances(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                     const std::vector<StructuralMatch>& matches,
                     const std::vector<MotifInstance>& instances, OutputFormat format,
                     bool with_rank = false);

void write_matches(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                   const std::vector<StructuralMatch>& matches, OutputFormat format);

void write_grouped(std::ostream& out, const TimeSeriesGraph& g, const Motif& motif,
                   const GroupedTop1& grouped, OutputFormat format);

void write_significance(std::ostream& out, const NullModelReport& report, OutputFormat format);

}  // namespace flowmotif
