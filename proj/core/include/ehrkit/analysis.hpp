#pragma once

#include <optional>
#include <utility>

#include "ehrkit/hstar.hpp"
#include "ehrkit/poly.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/weight.hpp"

namespace ehrkit {

// nullopt = every coefficient nonnegative; otherwise the smallest offending
// exponent.
std::optional<std::size_t> check_nonneg_coeffs(const Poly& p);

struct RayCheck {
  bool pass;
  // When pass is false: a rational interval [lo, hi] isolating a
  // sign-violating root (lo == hi marks an exact point where p < 0 or a
  // rational root with a sign change).
  Rat lo, hi;
};

// Decides p(t) >= 0 for all t >= 0 exactly: squarefree decomposition, then
// Sturm root counting of the odd-multiplicity part on (0, inf).
RayCheck nonneg_on_ray(const Poly& p);

// Number of distinct real roots of p in the open interval (a, b), a < b,
// by Sturm's theorem. Exposed for the property suites.
std::size_t sturm_count_roots(const Poly& p, const Rat& a, const Rat& b);
std::size_t sturm_count_positive_roots(const Poly& p);

enum class WeightClass { RP, SP, Uncertified };

// Certificate check, not a decision procedure: RP iff every term has a
// nonnegative scalar and every factor is >= 0 at all homogenized vertices
// (q*u_i, q) (these generate the cone, so the check is exact); SP iff each
// term splits into coefficient-wise identical factor pairs plus RP-checked
// singletons.
WeightClass classify_weight(const Polytope& p, const Weight& w);

enum class MonotoneMode { Coeffwise, Ray };

struct MonotoneReport {
  bool pass;
  Poly lhs;  // (1 + t^{q_P} + ... + t^{g - q_P})^{dim P + m + 1} * h*_P
  Poly rhs;  // same for Q
  std::optional<std::size_t> witness_exponent;      // Coeffwise failure
  std::optional<std::pair<Rat, Rat>> witness_interval;  // Ray failure
};

// Checks the multiplied h*-polynomials of P inside Q: Coeffwise passes iff
// rhs - lhs has nonnegative coefficients, Ray iff rhs - lhs is nonnegative on
// [0, inf). Requires P ⊆ Q (vertex membership in a triangulation of Q), g
// divisible by both denominators, and for Ray equal dimensions.
MonotoneReport check_monotonicity(const Polytope& p, const Polytope& q,
                                  const Weight& w, const Int& g,
                                  MonotoneMode mode);

struct TriangleConditions {
  bool partially_open;            // neither completely closed nor fully open
  bool kernel_crosses_like_sides; // ker ell crosses the relative interior of
                                  // two sides that are both open or both closed
};

// Exact evaluation of the two triangle conditions for a half-open lattice
// triangle in R^2. The form lives on homogenized points, so its height
// coefficient acts as the affine constant of the line at dilation 1.
TriangleConditions triangle_conditions(const HalfOpenSimplex& h,
                                       const LinForm& ell);

struct SymMatrix {
  std::size_t n = 0;
  std::vector<Rat> a;  // row-major, kept symmetric

  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : n(dim), a(dim * dim, Rat(0)) {}
  Rat& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  Rat quadratic_form(const RatVec& v) const;
};

struct TensorHPoly {
  // coefficient matrices h_0^2 .. h_{d+2}^2
  std::vector<SymMatrix> coeffs;
};

// Matrix-valued h* coefficients of the rank-2 discrete moment tensor:
// entry (a, b) of coeffs[i] is the t^i coefficient of h*_{P, x_a x_b},
// computed by polarization over coordinate-form pairs. Requires a
// full-dimensional lattice polytope.
TensorHPoly h2_tensor(const Polytope& p);

struct PsdCheck {
  bool psd;
  RatVec witness;  // v with v^T M v < 0 when psd is false
  Rat value;       // v^T M v
};

// Exact positive-semidefiniteness via symmetric rational elimination with
// diagonal pivoting; no eigenvalues involved.
PsdCheck is_psd(const SymMatrix& m);

}  // namespace ehrkit
