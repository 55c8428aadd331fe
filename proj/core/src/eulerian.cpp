#include "ehrkit/eulerian.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ehrkit {

namespace {

Poly compute(unsigned long d, const Rat& lambda) {
  RatVec coeffs(d + 2, Rat(0));
  for (unsigned long k = 0; k <= d + 1; ++k) {
    Rat acc = 0;
    for (unsigned long j = 0; j <= k; ++j) {
      Rat base = Rat(static_cast<long>(k - j)) + lambda;
      Rat term = Rat(binomial(d + 1, j)) * rat_pow(base, d);
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    coeffs[k] = acc;
  }
  return Poly(std::move(coeffs));
}

}  // namespace

Poly eulerian_poly(unsigned long d, const Rat& lambda) {
  if (lambda < 0 || lambda > 1) throw Error("eulerian_poly: lambda outside [0,1]");
  static std::mutex mu;
  static std::map<std::pair<unsigned long, Rat>, Poly> cache;
  const std::pair<unsigned long, Rat> key(d, lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poly p = compute(d, lambda);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(p)).first->second;
}

}  // namespace ehrkit
