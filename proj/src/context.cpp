#include "pong/context.hpp"

#include <string>

#include "pong/errors.hpp"

namespace pong {

Context make_pong_context(int m, int k) {
  if (m < 2 || k < 1 || k > m - 1) {
    throw InvalidArgument("pong algebra needs m >= 2 and 1 <= k <= m-1 (got m=" +
                          std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  return {m, k};
}

Context make_asteroids_context(int m, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw InvalidArgument("asteroids algebra needs m >= 1 and 1 <= k <= m (got m=" +
                          std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  return {m, k};
}

}  // namespace pong
