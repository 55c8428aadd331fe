#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ehrkit/polytope.hpp"

namespace ehrkit {

struct Triangulation {
  // Each cell holds dim+1 indices into the polytope's vertex list, sorted
  // ascending; the cell list itself is sorted for reproducible output.
  std::vector<std::vector<std::size_t>> cells;
};

// Barycentric coordinates of `point` with respect to affinely independent
// `simplex` vertices; nullopt when the point lies outside their affine hull.
std::optional<RatVec> barycentric_coordinates(
    const std::vector<RatVec>& simplex, const RatVec& point);

// Placing (beneath-beyond) triangulation of an arbitrary rational point set,
// inserting points in lexicographic order. Points inside the hull of the
// previously placed ones are skipped, so the result triangulates the convex
// hull using a subset of the input as vertices. Cells reference input indices.
std::vector<std::vector<std::size_t>> placing_triangulation(
    const std::vector<RatVec>& points);

bool in_convex_hull(const RatVec& point, const std::vector<RatVec>& points);
bool in_affine_hull(const RatVec& point, const std::vector<RatVec>& points);

// Deterministic triangulation of a nonempty polytope using no new vertices.
Triangulation triangulate(const Polytope& p);

// Simplex with a chosen set of facets removed: a point with barycentric
// coordinates c belongs iff c_i >= 0 for all i and c_i > 0 for i in strict
// (strict holds the indices of vertices whose opposite facet was removed).
struct HalfOpenSimplex {
  std::vector<RatVec> vertices;
  std::set<std::size_t> strict;

  std::size_t ambient_dim() const {
    return vertices.empty() ? 0 : vertices.front().size();
  }
  long dim() const { return static_cast<long>(vertices.size()) - 1; }
  Int denominator() const;
};

// Partitions P into half-open cells: one cell (the one containing an
// internally chosen generic anchor in relint P) stays closed, every other
// cell has exactly the facets facing the anchor removed. The anchor is the
// weighted vertex average with weights base^i; on a degenerate hit the base
// moves to the next prime, eight attempts in total.
std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p,
                                                     const Triangulation& t);

// Pyramid over a half-open simplex: apexes are appended as non-strict
// vertices (the new facets stay closed), strictness of the base is kept.
HalfOpenSimplex pyramid(const HalfOpenSimplex& base,
                        const std::vector<RatVec>& apexes);

// Closed-polytope membership via a precomputed triangulation.
bool polytope_contains(const Polytope& p, const Triangulation& t,
                       const RatVec& point);

}  // namespace ehrkit
