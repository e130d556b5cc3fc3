#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowmotif/time_series_graph.hpp"

namespace flowmotif {

/// Flow generator for synthetic graphs: "constant:<x>" or
/// "uniform:<lo>:<hi>" (integer flows drawn uniformly).
struct FlowLaw {
  enum class Kind { Constant, UniformInt };
  Kind kind = Kind::UniformInt;
  double value = 1;        // Constant
  std::int64_t lo = 1;     // UniformInt
  std::int64_t hi = 9;

  static FlowLaw parse(const std::string& spec);
};

struct SynthConfig {
  std::uint32_t nodes = 0;
  std::uint32_t pairs = 0;
  std::uint64_t interactions = 0;
  std::uint64_t horizon = 0;  // integer timestamps drawn from [0, horizon)
  FlowLaw law;
  std::uint64_t seed = 0;
};

/// Seeded, byte-deterministic interaction records: exactly
/// config.interactions records over config.pairs distinct ordered pairs
/// (u != v), timestamps unique per pair. Throws std::invalid_argument on
/// impossible parameter combinations.
std::vector<InteractionRecord> synthesize(const SynthConfig& config);

/// Writes the records in graph-file format (`src dst t f` lines).
void write_graph_file(std::ostream& out, const std::vector<InteractionRecord>& records);

}  // namespace flowmotif
