#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recon {

/// Bad argument or malformed input supplied by the caller.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text input that cannot be decoded; carries the byte offset of the defect.
struct parse_error : input_error {
  parse_error(const std::string& what, std::size_t at)
      : input_error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
  std::size_t offset;
};

/// A deck that cannot be realized by any graph (exact division failed,
/// no extension reproduces it, cards are inconsistent, ...).
struct illegitimate_deck_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap (spanning-tree count, sweep size) was exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace recon
