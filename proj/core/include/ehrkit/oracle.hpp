#pragma once

#include <vector>

#include "ehrkit/hstar.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/weight.hpp"

namespace ehrkit {

// Brute-force lattice point enumeration of the n-th dilate: scans the integer
// bounding box of n*P and keeps points lying in some triangulation cell.
// Deliberately naive; a guard rejects scans over 10^7 candidates.
std::vector<IntVec> lattice_points(const Polytope& p, const Int& n);

// sum of w(x, n) over the lattice points of n*P (height variable bound to n).
Rat weighted_sum(const Polytope& p, const Weight& w, const Int& n);
Rat weighted_sum(const Polytope& p,
                 const std::vector<std::pair<unsigned, Weight>>& parts,
                 const Int& n);

struct VerifyReport {
  bool pass = true;
  std::size_t first_mismatch = 0;
  RatVec expected;  // oracle sums, index n
  RatVec actual;    // series coefficients, index n
};

// Compares series_expand(hstar(P, w)) with the oracle sums for n = 0..n_max.
VerifyReport verify_series(const Polytope& p, const Weight& w,
                           std::size_t n_max);

// Mixed-degree variant: the parts are combined over the common denominator
// (1 - t^q)^{r + max(m) + 1} before expanding.
VerifyReport verify_series(const Polytope& p,
                           const std::vector<std::pair<unsigned, Weight>>& parts,
                           std::size_t n_max);

// Compares an arbitrary rational-function result against the oracle sums.
VerifyReport verify_against(const Polytope& p,
                            const std::vector<std::pair<unsigned, Weight>>& parts,
                            const HStarResult& result, std::size_t n_max);

// Combine homogeneous parts of one polynomial weight into a single rational
// function over (1 - t^q)^{r + max(m) + 1}.
HStarResult hstar_combined(const Polytope& p,
                           const std::vector<std::pair<unsigned, Weight>>& parts);

}  // namespace ehrkit
