#include "flowmotif/motif.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace flowmotif {

std::vector<std::uint32_t> Motif::path() const {
  std::vector<std::uint32_t> p;
  p.reserve(edges_.size() + 1);
  if (edges_.empty()) return p;
  p.push_back(edges_[0].src);
  for (const auto& e : edges_) p.push_back(e.dst);
  return p;
}

std::optional<std::string> validate(const Motif& motif) {
  const auto& edges = motif.edges();
  if (edges.empty()) {
    return "motif has no edges";
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].src == edges[i].dst) {
      return "edge " + std::to_string(i + 1) + " is a self-loop";
    }
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i].dst != edges[i + 1].src) {
      std::ostringstream msg;
      msg << "chain break at position " << i + 1 << "->" << i + 2
          << ": target of edge " << i + 1 << " is not the source of edge " << i + 2;
      return msg.str();
    }
  }
  std::vector<bool> touched(motif.vertex_count(), false);
  for (const auto& e : edges) {
    if (e.src >= motif.vertex_count() || e.dst >= motif.vertex_count()) {
      return "edge endpoint out of range";
    }
    touched[e.src] = true;
    touched[e.dst] = true;
  }
  for (std::uint32_t v = 0; v < motif.vertex_count(); ++v) {
    if (!touched[v]) {
      return "vertex " + motif.vertex_name(v) + " is not an endpoint of any edge";
    }
  }
  if (!(motif.delta() >= 0) || !std::isfinite(motif.delta())) {
    return "delta must be a finite number >= 0";
  }
  if (!(motif.phi() >= 0) || !std::isfinite(motif.phi())) {
    return "phi must be a finite number >= 0";
  }
  return std::nullopt;
}

Motif builtin(BuiltinKind kind, std::uint32_t n) {
  if (n < 2) {
    throw std::invalid_argument("builtin motifs need at least 2 nodes");
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  std::vector<MotifEdge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
  }
  if (kind == BuiltinKind::Cycle) {
    edges.push_back({n - 1, 0});
  }
  return Motif(std::move(names), std::move(edges), 0, 0);
}

namespace {

double parse_value(const std::string& token, const char* what, std::uint32_t line_no) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(std::string("bad ") + what + " value '" + token + "'", line_no);
  }
  return value;
}

}  // namespace

Motif parse_motif(std::istream& in) {
  std::optional<double> delta, phi;
  struct RawEdge {
    std::string src, dst;
    std::uint32_t line;
  };
  std::map<std::uint64_t, RawEdge> by_label;

  std::string line;
  std::uint32_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword[0] == '#') continue;

    if (keyword == "delta" || keyword == "phi") {
      std::string tok, extra;
      if (!(fields >> tok) || (fields >> extra)) {
        throw ParseError("expected `" + keyword + " <number>`", line_no);
      }
      auto& slot = keyword == "delta" ? delta : phi;
      if (slot.has_value()) {
        throw ParseError("duplicate " + keyword + " line", line_no);
      }
      slot = parse_value(tok, keyword.c_str(), line_no);
    } else if (keyword == "edge") {
      std::string label_tok, src, dst, extra;
      if (!(fields >> label_tok >> src >> dst) || (fields >> extra)) {
        throw ParseError("expected `edge <label> <src> <dst>`", line_no);
      }
      std::uint64_t label = 0;
      auto [ptr, ec] =
          std::from_chars(label_tok.data(), label_tok.data() + label_tok.size(), label);
      if (ec != std::errc() || ptr != label_tok.data() + label_tok.size() || label == 0) {
        throw ParseError("bad edge label '" + label_tok + "'", line_no);
      }
      auto [it, inserted] = by_label.emplace(label, RawEdge{src, dst, line_no});
      if (!inserted) {
        throw ParseError("duplicate edge label " + std::to_string(label), line_no);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
  }

  if (!delta.has_value()) throw ParseError("missing delta line", 0);
  if (!phi.has_value()) throw ParseError("missing phi line", 0);
  if (by_label.empty()) throw ParseError("motif has no edges", 0);

  std::uint64_t expected = 1;
  for (const auto& [label, edge] : by_label) {
    if (label != expected) {
      throw ParseError("label gap: expected label " + std::to_string(expected) + ", found " +
                           std::to_string(label),
                       edge.line);
    }
    ++expected;
  }

  // Vertex indices in order of first appearance along the label order.
  std::vector<std::string> names;
  auto intern = [&names](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::uint32_t>(it - names.begin());
    names.push_back(name);
    return static_cast<std::uint32_t>(names.size() - 1);
  };
  std::vector<MotifEdge> edges;
  edges.reserve(by_label.size());
  for (const auto& [label, edge] : by_label) {
    std::uint32_t s = intern(edge.src);
    std::uint32_t d = intern(edge.dst);
    edges.push_back({s, d});
  }

  Motif motif(std::move(names), std::move(edges), *delta, *phi);
  if (auto violation = validate(motif)) {
    throw ParseError(*violation, 0);
  }
  return motif;
}

Motif parse_motif_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open motif file '" + path + "'", 0);
  }
  return parse_motif(in);
}

Motif parse_motif_spec(const std::string& spec) {
  for (auto [prefix, kind] : {std::pair{"chain:", BuiltinKind::Chain},
                              std::pair{"cycle:", BuiltinKind::Cycle}}) {
    if (spec.rfind(prefix, 0) == 0) {
      const std::string num = spec.substr(6);
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc() || ptr != num.data() + num.size()) {
        throw ParseError("bad motif size in '" + spec + "'", 0);
      }
      return builtin(kind, n);
    }
  }
  return parse_motif_file(spec);
}

}  // namespace flowmotif
