#pragma once

#include <optional>

#include "ehrkit/matrix.hpp"

namespace ehrkit {

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

// Row-style HNF: upper echelon, positive pivots, entries above a pivot
// reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;  // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * m * v == d
};

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : m * x^T = 0}, returned as matrix rows.
// The kernel lattice is saturated by construction.
IntMatrix kernel_basis(const IntMatrix& m);

// Rows of the result form a basis of span_Q(rows of m) intersected with Z^n.
IntMatrix saturation_basis(const IntMatrix& m);

// Solves a * x = b exactly; free variables are set to zero, so the solution
// has minimal support among echelon solutions. nullopt when inconsistent.
std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b);

}  // namespace ehrkit
