#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

/// Malformed textual input (graph6, edge list, JSON). `offset` is the byte
/// position of the offending character, or npos when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos)
      : std::runtime_error(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t offset_;
};

/// Raised by operations that require a connected graph. Carries two
/// components as a witness.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::vector<int> first, std::vector<int> second);

  const std::vector<int>& first_component() const noexcept { return first_; }
  const std::vector<int>& second_component() const noexcept { return second_; }

 private:
  std::vector<int> first_;
  std::vector<int> second_;
};

/// Input exceeds a size cap of an exponential algorithm or of the wire format.
class UnsupportedSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace koszul
