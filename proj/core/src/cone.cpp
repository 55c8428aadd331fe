#include "ehrkit/cone.hpp"

#include <algorithm>

#include "ehrkit/linalg.hpp"

namespace ehrkit {

ConeGenerators cone_generators(const HalfOpenSimplex& h, const Int& g) {
  if (g < 1) throw Error("cone_generators: g must be positive");
  ConeGenerators out;
  out.strict = h.strict;
  out.height = g;
  out.generators.reserve(h.vertices.size());
  for (const RatVec& v : h.vertices) {
    IntVec w(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat scaled = Rat(g) * v[i];
      if (scaled.get_den() != 1)
        throw Error("cone_generators: g does not clear vertex denominators");
      w[i] = scaled.get_num();
    }
    w[v.size()] = g;
    out.generators.push_back(std::move(w));
  }
  return out;
}

namespace {

RatMatrix columns_of(const std::vector<IntVec>& vecs) {
  const std::size_t n = vecs.empty() ? 0 : vecs.front().size();
  RatMatrix m(n, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = Rat(vecs[j][i]);
  return m;
}

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& v) {
  const std::size_t n = v.rows();
  RatMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = Rat(v.at(i, j));
    w.at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c) == 0) ++p;
    if (p == n) throw Error("unimodular_inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(c, j), w.at(p, j));
    Rat inv = 1 / w.at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) w.at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w.at(i, c) == 0) continue;
      Rat f = w.at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = w.at(i, n + j);
      if (x.get_den() != 1) throw Error("unimodular_inverse: matrix not unimodular");
      out.at(i, j) = x.get_num();
    }
  return out;
}

}  // namespace

std::vector<ParallelepipedPoint> enumerate_points(const ConeGenerators& g) {
  const std::size_t k = g.generators.size();
  if (k == 0) return {};
  const std::size_t n = g.generators.front().size();

  IntMatrix gen_rows(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) gen_rows.at(i, j) = g.generators[i][j];

  // Basis of span ∩ Z^n; the generators expressed in it give an integer
  // matrix whose row lattice has index |det| in the saturated lattice.
  IntMatrix basis = saturation_basis(gen_rows);
  if (basis.rows() != k)
    throw Error("enumerate_points: generators not linearly independent");

  RatMatrix basis_cols(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_cols.at(i, j) = Rat(basis.at(j, i));

  IntMatrix coords(k, k);  // row i = coordinates of generator i in the basis
  for (std::size_t i = 0; i < k; ++i) {
    RatVec rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = Rat(gen_rows.at(i, j));
    auto sol = solve_rational(basis_cols, rhs);
    if (!sol) throw Error("enumerate_points: generator outside saturated span");
    for (std::size_t j = 0; j < k; ++j) {
      if ((*sol)[j].get_den() != 1)
        throw Error("enumerate_points: non-integral basis coordinates");
      coords.at(i, j) = (*sol)[j].get_num();
    }
  }

  SnfResult snf = smith_normal_form(coords);
  IntMatrix v_inv = unimodular_inverse(snf.v);

  // Left inverse of the generator matrix: lambda(x) = lam * x. Row i solves
  // row . w_j = delta_ij, i.e. gen_cols^T * row = e_i.
  RatMatrix gen_rows_rat = columns_of(g.generators).transpose();  // k x n
  RatMatrix lam(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    RatVec e(k, Rat(0));
    e[i] = 1;
    auto row = solve_rational(gen_rows_rat, e);
    if (!row) throw Error("enumerate_points: no barycentric functional");
    for (std::size_t j = 0; j < n; ++j) lam.at(i, j) = (*row)[j];
  }

  std::vector<Int> diag(k);
  Int count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    diag[i] = snf.d.at(i, i);
    if (diag[i] == 0) throw Error("enumerate_points: singular coordinate matrix");
    count *= diag[i];
  }

  std::vector<ParallelepipedPoint> out;
  out.reserve(count.fits_ulong_p() ? count.get_ui() : 0);
  IntVec rep(k, Int(0));
  for (;;) {
    // class representative in original basis coordinates: rep * v_inv
    IntVec z(k, Int(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) z[j] += rep[i] * v_inv.at(i, j);
    // lift to Z^n
    RatVec point(n, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < n; ++c) point[c] += Rat(z[j]) * Rat(basis.at(j, c));
    // lambda coordinates, then translate into the half-open windows
    RatVec lambda(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rat acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += lam.at(i, c) * point[c];
      acc -= Rat(rat_floor(acc));
      if (acc == 0 && g.strict.count(i)) acc = 1;
      lambda[i] = acc;
    }
    ParallelepipedPoint pp;
    pp.lambdas = std::move(lambda);
    pp.x.assign(n, Int(0));
    RatVec xr(n, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < n; ++c)
        xr[c] += pp.lambdas[i] * Rat(g.generators[i][c]);
    for (std::size_t c = 0; c < n; ++c) {
      if (xr[c].get_den() != 1)
        throw Error("enumerate_points: non-integral parallelepiped point");
      pp.x[c] = xr[c].get_num();
    }
    pp.height = pp.x[n - 1];
    out.push_back(std::move(pp));

    // odometer over the diagonal boxes
    std::size_t pos = 0;
    while (pos < k) {
      rep[pos] += 1;
      if (rep[pos] < diag[pos]) break;
      rep[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }

  if (Int(static_cast<unsigned long>(out.size())) != count)
    throw Error("enumerate_points: point count does not match lattice index");
  std::sort(out.begin(), out.end(),
            [](const ParallelepipedPoint& a, const ParallelepipedPoint& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.x < b.x;
            });
  return out;
}

}  // namespace ehrkit
