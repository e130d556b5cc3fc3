#include "flowmotif/synth.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <stdexcept>

#include "flowmotif/io.hpp"
#include "flowmotif/random.hpp"

namespace flowmotif {

FlowLaw FlowLaw::parse(const std::string& spec) {
  auto bad = [&] { return std::invalid_argument("bad flow law '" + spec + "'"); };
  auto parse_int = [&](const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };

  FlowLaw law;
  if (spec.rfind("constant:", 0) == 0) {
    law.kind = Kind::Constant;
    const std::string num = spec.substr(9);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), law.value);
    if (ec != std::errc() || ptr != num.data() + num.size() || !(law.value > 0)) throw bad();
    return law;
  }
  if (spec.rfind("uniform:", 0) == 0) {
    const std::string rest = spec.substr(8);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos) throw bad();
    law.kind = Kind::UniformInt;
    law.lo = parse_int(rest.substr(0, colon));
    law.hi = parse_int(rest.substr(colon + 1));
    if (law.lo < 1 || law.hi < law.lo) throw bad();
    return law;
  }
  throw bad();
}

namespace {

std::string node_label(std::uint32_t i, std::uint32_t width) {
  std::string digits = std::to_string(i);
  return "n" + std::string(width - std::min<std::size_t>(width, digits.size()), '0') + digits;
}

/// Floyd's algorithm: k distinct values from [0, n), deterministic.
std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t n,
                                           std::uint64_t k) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = n - k; j < n; ++j) {
    std::uint64_t r = draw_below(rng, j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

std::vector<InteractionRecord> synthesize(const SynthConfig& config) {
  if (config.nodes == 0 || config.pairs == 0 || config.interactions == 0) {
    throw std::invalid_argument("nodes, pairs, and interactions must all be positive");
  }
  const std::uint64_t max_pairs =
      static_cast<std::uint64_t>(config.nodes) * (config.nodes - 1);
  if (config.pairs > max_pairs) {
    throw std::invalid_argument("pairs exceeds nodes*(nodes-1) distinct ordered pairs");
  }
  const std::uint64_t per_pair_max = config.interactions / config.pairs + 1;
  if (per_pair_max > config.horizon) {
    throw std::invalid_argument("horizon too small for per-pair unique timestamps");
  }

  std::mt19937_64 rng(config.seed);

  // Distinct ordered pairs, sampled as indices into the u*(nodes-1)+v grid.
  std::vector<std::uint64_t> pair_codes = sample_distinct(rng, max_pairs, config.pairs);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(config.pairs);
  for (std::uint64_t code : pair_codes) {
    const std::uint32_t u = static_cast<std::uint32_t>(code / (config.nodes - 1));
    std::uint32_t v = static_cast<std::uint32_t>(code % (config.nodes - 1));
    if (v >= u) ++v;  // skip the diagonal
    pairs.push_back({u, v});
  }
  std::sort(pairs.begin(), pairs.end());

  // Interactions spread as evenly as possible over the pairs.
  std::vector<std::uint64_t> counts(config.pairs, config.interactions / config.pairs);
  for (std::uint64_t i = 0; i < config.interactions % config.pairs; ++i) ++counts[i];

  const std::uint32_t width =
      static_cast<std::uint32_t>(std::to_string(config.nodes - 1).size());
  std::vector<InteractionRecord> records;
  records.reserve(config.interactions);
  for (std::uint32_t p = 0; p < config.pairs; ++p) {
    if (counts[p] == 0) continue;
    std::vector<std::uint64_t> times = sample_distinct(rng, config.horizon, counts[p]);
    for (std::uint64_t t : times) {
      InteractionRecord r;
      r.src = node_label(pairs[p].first, width);
      r.dst = node_label(pairs[p].second, width);
      r.t = static_cast<Timestamp>(t);
      r.f = config.law.kind == FlowLaw::Kind::Constant
                ? config.law.value
                : static_cast<Flow>(config.law.lo +
                                    static_cast<std::int64_t>(draw_below(
                                        rng, static_cast<std::uint64_t>(config.law.hi -
                                                                        config.law.lo + 1))));
      records.push_back(std::move(r));
    }
  }
  return records;
}

void write_graph_file(std::ostream& out, const std::vector<InteractionRecord>& records) {
  for (const auto& r : records) {
    out << r.src << ' ' << r.dst << ' ' << format_number(r.t) << ' ' << format_number(r.f)
        << '\n';
  }
}

}  // namespace flowmotif
