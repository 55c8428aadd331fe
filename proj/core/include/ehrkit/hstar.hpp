#pragma once

#include "ehrkit/cone.hpp"
#include "ehrkit/poly.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/weight.hpp"

namespace ehrkit {

// The weighted Ehrhart series of an r-dimensional polytope with denominator q
// under a homogeneous degree-m weight is numerator / (1 - t^period)^exponent
// with exponent = r + m + 1 and deg(numerator) <= period * exponent - 1.
struct HStarResult {
  Poly numerator;
  unsigned long period = 1;
  unsigned long exponent = 1;
  // informational
  long dim = 0;
  long weight_degree = 0;
  std::size_t ambient_dim = 0;
};

HStarResult make_hstar_result(Poly numerator, unsigned long period,
                              unsigned long exponent, long dim,
                              long weight_degree, std::size_t ambient_dim);

// Numerator contribution of one half-open simplex for a single product-of-
// linear-forms term, relative to (1 - t^g)^{r+m+1}: the sum over lattice
// points x of the half-open fundamental parallelepiped of
//   t^{x_{d+1}} * sum over assignments of the m factors to the r+1 generators
//   of (product of factor values at their generator) * prod_j A_{c_j}^{lambda_j(x)}(t^g),
// all scaled by the term's scalar. Factor values are taken at the integer
// generators (g*u_j, g).
Poly hstar_term_halfopen(const HalfOpenSimplex& h, const WeightTerm& term,
                         const Int& g);

// Sum of hstar_term_halfopen over the weight's terms.
Poly hstar_halfopen(const HalfOpenSimplex& h, const Weight& w, const Int& g);

// Same value as hstar_halfopen for w = ell^2, computed from the closed-form
// per-point contribution instead of assignment enumeration.
Poly hstar_ell_squared_halfopen(const HalfOpenSimplex& h, const LinForm& ell,
                                const Int& g);

// Caches the half-open decomposition and parallelepiped enumerations of a
// polytope so that many weights can be processed against the same geometry.
class HStarEngine {
 public:
  explicit HStarEngine(const Polytope& p);

  const Int& period() const { return q_; }
  long dim() const { return r_; }
  std::size_t ambient_dim() const { return d_; }

  Poly numerator(const Weight& w) const;
  Poly numerator_ell_squared(const LinForm& ell) const;

 private:
  struct Cell {
    ConeGenerators gens;
    std::vector<ParallelepipedPoint> points;
  };
  std::vector<Cell> cells_;
  Int q_;
  long r_ = 0;
  std::size_t d_ = 0;
};

// Full pipeline: triangulate, half-open, assemble with g = denominator(P).
// The empty polytope yields a zero numerator with period 1.
HStarResult hstar(const Polytope& p, const Weight& w);

// hstar for w = ell^2 through the closed-form fast path. ell may be given on
// R^d (lifted with zero height coefficient) or on R^{d+1}.
HStarResult hstar_ell_squared(const Polytope& p, const LinForm& ell);

struct ScaledResult {
  Rat coeff;
  HStarResult part;
};

// Rebases every part to the common denominator (1 - t^period)^exponent by
// multiplying with (1 + t^{q_i} + ... + t^{period - q_i})^{b_i} and
// (1 - t^period)^{exponent - b_i}, then sums coeff-scaled numerators.
// Requires q_i | period and b_i <= exponent.
HStarResult ratfun_combine(const std::vector<ScaledResult>& parts,
                           unsigned long period, unsigned long exponent);

// Taylor coefficients 0..n_max of numerator / (1 - t^period)^exponent.
RatVec series_expand(const HStarResult& r, std::size_t n_max);

}  // namespace ehrkit
