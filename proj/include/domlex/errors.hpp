#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlex {

// Malformed expression text or edge-list input. `offset` is the byte
// position of the offending token (0-based).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// A size limit was exceeded: graph order above 64, enumeration above the
// configured cap, or isomorphism test above the configured limit.
class CapError : public std::runtime_error {
public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domlex
