#pragma once

// Seeded instance generators shared by the property suites and the
// acceptance runner. Every suite prints the seed it ran with so failures
// reproduce.

#include <optional>
#include <random>
#include <vector>

#include <ehrkit/matrix.hpp>
#include <ehrkit/polytope.hpp>
#include <ehrkit/triangulation.hpp>
#include <ehrkit/weight.hpp>

namespace testgen {

using ehrkit::Int;
using ehrkit::LinForm;
using ehrkit::Polytope;
using ehrkit::Rat;
using ehrkit::RatVec;
using ehrkit::Weight;
using ehrkit::WeightTerm;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long uniform(long lo, long hi) {  // inclusive bounds
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }

  Rat rat(long lo, long hi, long max_den) {
    long den = uniform(1, max_den);
    long num = uniform(lo * den, hi * den);
    return ehrkit::make_rat(Int(num), Int(den));
  }

  RatVec rat_point(std::size_t d, long lo, long hi, long max_den) {
    RatVec v(d);
    for (auto& x : v) x = rat(lo, hi, max_den);
    return v;
  }

  RatVec lattice_point(std::size_t d, long lo, long hi) {
    RatVec v(d);
    for (auto& x : v) x = Rat(uniform(lo, hi));
    return v;
  }
};

// Rank of the homogenized point matrix (rows (v, 1)); k + 1 on a k-simplex's
// vertex set.
inline std::size_t rank_of_homogenized(const std::vector<ehrkit::RatVec>& pts) {
  if (pts.empty()) return 0;
  ehrkit::RatMatrix m(pts.size(), pts.front().size() + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.front().size(); ++j) m.at(i, j) = pts[i][j];
    m.at(i, pts.front().size()) = 1;
  }
  return ehrkit::rank(m);
}

// Irredundant subset spanning the same hull (repeated passes until stable,
// so duplicate points fall out too).
inline std::vector<RatVec> hull_vertices(std::vector<RatVec> pts) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      std::vector<RatVec> others;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != j) others.push_back(pts[i]);
      if (ehrkit::in_convex_hull(pts[j], others)) {
        pts.erase(pts.begin() + static_cast<long>(j));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

inline Polytope random_lattice_polytope(Rng& rng, std::size_t d,
                                        std::size_t npoints, long box) {
  for (;;) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < npoints; ++i)
      pts.push_back(rng.lattice_point(d, -box, box));
    auto hull = hull_vertices(std::move(pts));
    if (hull.empty()) continue;
    return Polytope(d, std::move(hull));
  }
}

inline Polytope random_rational_polytope(Rng& rng, std::size_t d,
                                         std::size_t npoints, long box,
                                         long max_den) {
  for (;;) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < npoints; ++i)
      pts.push_back(rng.rat_point(d, -box, box, max_den));
    auto hull = hull_vertices(std::move(pts));
    if (hull.empty()) continue;
    return Polytope(d, std::move(hull));
  }
}

// A polytope of the requested intrinsic dimension.
inline Polytope random_polytope_of_dim(Rng& rng, std::size_t d, long want_dim,
                                       long box, long max_den) {
  for (;;) {
    Polytope p = max_den <= 1
                     ? random_lattice_polytope(rng, d, static_cast<std::size_t>(want_dim) + 2, box)
                     : random_rational_polytope(rng, d, static_cast<std::size_t>(want_dim) + 2, box, max_den);
    if (p.dim() == want_dim) return p;
  }
}

// Linear form on R^d (zero height coefficient), nonzero.
inline LinForm random_xform(Rng& rng, std::size_t d, long box) {
  for (;;) {
    RatVec c(d);
    bool nonzero = false;
    for (auto& x : c) {
      x = Rat(rng.uniform(-box, box));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    return ehrkit::lift_form(std::move(c));
  }
}

// ell(x) + c * n with c = max_v(-ell(v)): vanishes on the worst vertex and
// is nonnegative on the homogenization, i.e. a certified cone form.
inline LinForm shifted_cone_form(const Polytope& p, const LinForm& xform) {
  Rat shift = 0;
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    Rat value = 0;
    for (std::size_t i = 0; i < v.size(); ++i) value += xform.coeffs[i] * v[i];
    if (first || -value > shift) shift = -value;
    first = false;
  }
  if (shift < 0) shift = 0;
  LinForm out = xform;
  out.coeffs.back() = shift;
  return out;
}

inline Weight product_weight(std::size_t d, std::vector<LinForm> factors,
                             const Rat& scalar = Rat(1)) {
  WeightTerm t;
  t.scalar = scalar;
  t.factors = std::move(factors);
  unsigned deg = static_cast<unsigned>(t.factors.size());
  return Weight(d, deg, {std::move(t)});
}

}  // namespace testgen
