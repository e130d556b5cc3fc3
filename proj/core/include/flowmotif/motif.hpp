#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flowmotif/errors.hpp"

namespace flowmotif {

struct MotifEdge {
  std::uint32_t src;  // motif-vertex index
  std::uint32_t dst;

  friend bool operator==(const MotifEdge&, const MotifEdge&) = default;
};

/// A flow motif: a small directed graph whose edges are totally ordered
/// (edge i holds label i+1) and chain into a spanning path, plus the
/// duration bound delta and the per-edge-set flow bound phi.
/// phi == 0 means "no flow constraint". Immutable by convention.
class Motif {
 public:
  Motif() = default;
  Motif(std::vector<std::string> vertex_names, std::vector<MotifEdge> edges, double delta,
        double phi)
      : vertex_names_(std::move(vertex_names)),
        edges_(std::move(edges)),
        delta_(delta),
        phi_(phi) {}

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<MotifEdge>& edges() const { return edges_; }
  const std::string& vertex_name(std::uint32_t v) const { return vertex_names_[v]; }

  double delta() const { return delta_; }
  double phi() const { return phi_; }
  void set_delta(double d) { delta_ = d; }
  void set_phi(double p) { phi_ = p; }

  /// Motif-vertex indices along the spanning path: path()[0] is the source
  /// of edge 1, path()[i] the target of edge i. Size edge_count()+1.
  /// Only meaningful on motifs that pass validate().
  std::vector<std::uint32_t> path() const;

  friend bool operator==(const Motif& a, const Motif& b) {
    return a.vertex_names_ == b.vertex_names_ && a.edges_ == b.edges_ &&
           a.delta_ == b.delta_ && a.phi_ == b.phi_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<MotifEdge> edges_;  // edges_[i] carries label i+1
  double delta_ = 0;
  double phi_ = 0;
};

/// nullopt when all invariants hold; otherwise a message naming the first
/// violated invariant. Returned, not thrown, so the CLI can print it.
std::optional<std::string> validate(const Motif& motif);

enum class BuiltinKind { Chain, Cycle };

/// chain:n = v1 -> v2 -> ... -> vn (n-1 edges, n >= 2);
/// cycle:n = chain:n closed back at v1 (n edges, n >= 2).
/// delta/phi start at 0 and are set by the caller.
Motif builtin(BuiltinKind kind, std::uint32_t n);

/// Parses `delta <x>` / `phi <x>` / `edge <label> <src> <dst>` lines
/// ('#' comments allowed). Edges may appear in any order; the result stores
/// them in label order and passes validate(). Throws ParseError on missing
/// delta/phi, duplicate or gapped labels, or malformed lines.
Motif parse_motif(std::istream& in);
Motif parse_motif_file(const std::string& path);

/// Accepts "chain:<n>", "cycle:<n>", or a motif file path.
Motif parse_motif_spec(const std::string& spec);

}  // namespace flowmotif
