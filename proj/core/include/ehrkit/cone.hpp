#pragma once

#include <set>
#include <vector>

#include "ehrkit/triangulation.hpp"

namespace ehrkit {

// Generators (g*u_i, g) of the homogenization of a half-open simplex, all with
// the same last coordinate g. strict mirrors the simplex's removed facets.
struct ConeGenerators {
  std::vector<IntVec> generators;  // each of length d+1
  std::set<std::size_t> strict;
  Int height;  // g
};

// Requires g to clear every vertex denominator.
ConeGenerators cone_generators(const HalfOpenSimplex& h, const Int& g);

// Integer point of the half-open fundamental parallelepiped together with its
// exact coordinates in the generators: x = sum lambda_i * w_i with
// lambda_i in [0,1) off the strict set and in (0,1] on it.
struct ParallelepipedPoint {
  IntVec x;
  RatVec lambdas;
  Int height;  // last coordinate of x
};

// All integer points of the half-open parallelepiped, sorted by
// (height, lexicographic x). The count equals the index of the lattice
// spanned by the generators inside the saturation of their span.
std::vector<ParallelepipedPoint> enumerate_points(const ConeGenerators& g);

}  // namespace ehrkit
