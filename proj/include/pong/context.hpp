#pragma once

#include <compare>

namespace pong {

// Number of markings m and strand count k.
struct Context {
  int m = 2;
  int k = 1;

  friend auto operator<=>(const Context&, const Context&) = default;
};

// Pong algebra P(m,k): m >= 2, 1 <= k <= m-1. Throws InvalidArgument.
Context make_pong_context(int m, int k);

// Asteroids algebra A(m,k): m >= 1, 1 <= k <= m. Throws InvalidArgument.
Context make_asteroids_context(int m, int k);

}  // namespace pong
