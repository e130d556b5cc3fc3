#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flowmotif {

/// Error raised while parsing a text input (graph file, motif file).
/// `line` is 1-based; 0 means the input as a whole (e.g. a missing field).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::uint32_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : std::move(message)),
        line_(line) {}

  std::uint32_t line() const noexcept { return line_; }

 private:
  std::uint32_t line_;
};

/// Error raised when interaction records violate graph invariants
/// (non-positive flow, duplicate timestamp on a pair).
class IngestError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace flowmotif
