#pragma once

#include <cstddef>
#include <vector>

#include "ehrkit/rational.hpp"

namespace ehrkit {

// Rational polytope given by its irredundant vertex list. The constructor
// rejects redundant input instead of repairing it, so golden tests cannot
// silently hide a bad vertex list.
class Polytope {
 public:
  Polytope(std::size_t ambient_dim, std::vector<RatVec> vertices);

  static Polytope empty(std::size_t ambient_dim) {
    return Polytope(ambient_dim, {});
  }

  std::size_t ambient_dim() const { return d_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  bool is_empty() const { return vertices_.empty(); }

  // Intrinsic dimension (affine rank - 1); -1 for the empty polytope.
  long dim() const { return dim_; }

  // Smallest positive integer q such that q * P has integer vertices;
  // 1 for the empty polytope.
  Int denominator() const;

  // The dilate k * P for an integer k >= 1.
  Polytope dilate(const Int& k) const;

 private:
  std::size_t d_;
  std::vector<RatVec> vertices_;
  long dim_;
};

// conv(P with the apexes appended); every apex must lie outside the affine
// hull of what has been built so far, so the dimension grows by one per apex.
Polytope pyramid(const Polytope& base, const std::vector<RatVec>& apexes);

// Coefficients c in Q^{d+1} of a linear form with c . (v_i, 1) = values[i]
// for every vertex v_i of the simplex. When the system is underdetermined the
// solver's minimum-support solution is returned.
RatVec linear_form_from_vertex_values(const Polytope& simplex,
                                      const RatVec& values);

}  // namespace ehrkit
