#pragma once

// Concrete instances used across the unit suites and the acceptance runner.

#include <ehrkit/polytope.hpp>
#include <ehrkit/weight.hpp>

namespace fixtures {

using ehrkit::Int;
using ehrkit::LinForm;
using ehrkit::Polytope;
using ehrkit::Rat;
using ehrkit::RatVec;

inline Polytope unit_segment() { return Polytope(1, {{Rat(0)}, {Rat(1)}}); }

inline Polytope standard_triangle() {
  return Polytope(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

inline Polytope unit_square() {
  return Polytope(2, {{Rat(0), Rat(0)},
                      {Rat(1), Rat(0)},
                      {Rat(0), Rat(1)},
                      {Rat(1), Rat(1)}});
}

// The unimodular segment P = conv{(3,-2),(2,-2)} and triangle
// Q = conv{(3,-2),(2,-2),(2,-1)} with the form 2*x1 + 3*x2 taking values
// 0, -2, 1 on the three vertices.
inline Polytope seg_P() { return Polytope(2, {{Rat(3), Rat(-2)}, {Rat(2), Rat(-2)}}); }
inline Polytope tri_Q() {
  return Polytope(2, {{Rat(3), Rat(-2)}, {Rat(2), Rat(-2)}, {Rat(2), Rat(-1)}});
}
inline LinForm form_2x1_3x2() { return ehrkit::lift_form({Rat(2), Rat(3)}); }

// Rational triangle with denominator q: (1,1), (1,(q-1)/q), ((q+1)/q,1),
// paired with the form 2q(1-q)*x1 + q(2q-1)*x2.
inline Polytope delta_q(long q) {
  return Polytope(2, {{Rat(1), Rat(1)},
                      {Rat(1), Rat(q - 1, q)},
                      {Rat(q + 1, q), Rat(1)}});
}
inline LinForm form_delta_q(long q) {
  return ehrkit::lift_form({Rat(2 * q * (1 - q)), Rat(q * (2 * q - 1))});
}

// Non-convex quadrilateral (1,0),(-3,-1),(2,0),(-3,1) dissected into the
// triangles T1, T2 sharing the segment conv{(1,0),(2,0)}.
inline Polytope nonconvex_T1() {
  return Polytope(2, {{Rat(1), Rat(0)}, {Rat(-3), Rat(-1)}, {Rat(2), Rat(0)}});
}
inline Polytope nonconvex_T2() {
  return Polytope(2, {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(-3), Rat(1)}});
}
inline Polytope nonconvex_shared_segment() {
  return Polytope(2, {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}});
}

// 20-dimensional lattice simplex: the 19-dimensional simplex with vertices
// 0, e_1..e_18, 3e_19 + e_1 + ... + e_9 - e_10 - ... - e_18 is embedded at
// height 1 in R^20 and coned over the origin. Vertex order: the twenty
// embedded vertices first, the origin apex last.
inline Polytope simplex20() {
  std::vector<RatVec> verts;
  auto embed = [](RatVec u) {
    u.push_back(Rat(1));
    return u;
  };
  RatVec u0(19, Rat(0));
  verts.push_back(embed(u0));
  for (int i = 1; i <= 18; ++i) {
    RatVec u(19, Rat(0));
    u[i - 1] = 1;
    verts.push_back(embed(u));
  }
  RatVec last(19, Rat(0));
  for (int i = 0; i < 9; ++i) last[i] = 1;
  for (int i = 9; i < 18; ++i) last[i] = -1;
  last[18] = 3;
  verts.push_back(embed(last));
  Polytope base(20, std::move(verts));
  return ehrkit::pyramid(base, {RatVec(20, Rat(0))});
}

// Vertex values +1 on the first ten embedded vertices, -1 on the next ten,
// 0 on the origin apex (matching simplex20's vertex order).
inline RatVec simplex20_vertex_values() {
  RatVec values;
  for (int i = 0; i < 10; ++i) values.push_back(Rat(1));
  for (int i = 0; i < 10; ++i) values.push_back(Rat(-1));
  values.push_back(Rat(0));
  return values;
}

}  // namespace fixtures
