#pragma once

#include <stdexcept>
#include <string>

namespace p3hc {

// Thrown when a structural invariant of a tiling, graph or configuration is
// violated. Reaching one of these means a construction bug, not bad input.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace p3hc
