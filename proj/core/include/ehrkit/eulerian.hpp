#pragma once

#include "ehrkit/poly.hpp"

namespace ehrkit {

// The polynomial A_d^lambda defined by
//   sum_{n >= 0} (n + lambda)^d t^n = A_d^lambda(t) / (1 - t)^{d+1},
// for 0 <= lambda <= 1. Coefficient k is
//   sum_{j=0}^{k} (-1)^j binom(d+1, j) (k - j + lambda)^d.
// Results are memoized; the cache is guarded for concurrent use and
// correctness never depends on a hit.
Poly eulerian_poly(unsigned long d, const Rat& lambda);

}  // namespace ehrkit
