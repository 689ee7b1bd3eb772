#pragma once

#include <stdexcept>
#include <string>

namespace iplab {

// Always-on invariant check; these guard algorithmic postconditions, so they
// stay active in release builds.
#define IPLAB_ASSERT(cond, msg)                                     \
  do {                                                              \
    if (!(cond)) {                                                  \
      throw ::iplab::InvariantViolation(std::string("invariant: ") + (msg)); \
    }                                                               \
  } while (0)

struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace iplab
