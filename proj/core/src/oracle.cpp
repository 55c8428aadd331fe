#include "ehrkit/oracle.hpp"

#include <algorithm>

#include "ehrkit/linalg.hpp"
#include "ehrkit/triangulation.hpp"

namespace ehrkit {

namespace {

constexpr unsigned long kScanGuard = 10'000'000UL;

// Integer functionals deciding membership of a homogenized integer point
// (x, n) in the cone over one closed cell: aff rows must vanish, bary rows
// must be nonnegative. Integer-scaled so the scan stays in mpz arithmetic.
struct CellTest {
  std::vector<IntVec> bary;  // r+1 rows of length d+1
  std::vector<IntVec> aff;   // d-r rows of length d+1
};

IntVec scale_row(const RatVec& row) {
  Int l = 1;
  for (const Rat& x : row) l = lcm(l, x.get_den());
  IntVec out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rat s = Rat(l) * row[i];
    out[i] = s.get_num();
  }
  return out;
}

std::vector<CellTest> build_cell_tests(const Polytope& p, const Triangulation& t) {
  const std::size_t d = p.ambient_dim();
  std::vector<CellTest> tests;
  for (const auto& cell : t.cells) {
    const std::size_t k = cell.size();
    RatMatrix rows(k, d + 1);  // homogenized cell vertices as rows
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < d; ++j) rows.at(i, j) = p.vertices()[cell[i]][j];
      rows.at(i, d) = 1;
    }
    CellTest ct;
    // barycentric functionals: row_i . (v_j, 1) = delta_ij
    for (std::size_t i = 0; i < k; ++i) {
      RatVec e(k, Rat(0));
      e[i] = 1;
      auto sol = solve_rational(rows, e);
      if (!sol) throw Error("oracle: no barycentric functional");
      ct.bary.push_back(scale_row(*sol));
    }
    // affine hull equations: integer kernel of the scaled vertex rows
    IntMatrix scaled(k, d + 1);
    for (std::size_t i = 0; i < k; ++i) {
      IntVec r = scale_row(rows.row(i));
      for (std::size_t j = 0; j <= d; ++j) scaled.at(i, j) = r[j];
    }
    IntMatrix ker = kernel_basis(scaled);
    for (std::size_t i = 0; i < ker.rows(); ++i) ct.aff.push_back(ker.row(i));
    tests.push_back(std::move(ct));
  }
  return tests;
}

Int eval_int_row(const IntVec& row, const IntVec& pt) {
  Int s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += row[i] * pt[i];
  return s;
}

bool contains_homogenized(const std::vector<CellTest>& tests, const IntVec& hpt) {
  for (const CellTest& ct : tests) {
    bool ok = true;
    for (const IntVec& row : ct.aff)
      if (eval_int_row(row, hpt) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const IntVec& row : ct.bary)
      if (eval_int_row(row, hpt) < 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<IntVec> lattice_points(const Polytope& p, const Int& n) {
  if (n < 0) throw Error("lattice_points: negative dilation");
  std::vector<IntVec> out;
  if (p.is_empty()) return out;
  const std::size_t d = p.ambient_dim();
  if (n == 0) {
    out.push_back(IntVec(d, Int(0)));
    return out;
  }
  // bounding box of n * P
  IntVec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rat mn = p.vertices()[0][j], mx = mn;
    for (const RatVec& v : p.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    Rat smn = Rat(n) * mn, smx = Rat(n) * mx;
    mpz_cdiv_q(lo[j].get_mpz_t(), smn.get_num_mpz_t(), smn.get_den_mpz_t());
    mpz_fdiv_q(hi[j].get_mpz_t(), smx.get_num_mpz_t(), smx.get_den_mpz_t());
    if (hi[j] < lo[j]) return out;
  }
  Int candidates = 1;
  for (std::size_t j = 0; j < d; ++j) candidates *= hi[j] - lo[j] + 1;
  if (candidates > kScanGuard)
    throw Error("lattice_points: bounding box exceeds the scan guard");

  Triangulation t = triangulate(p);
  std::vector<CellTest> tests = build_cell_tests(p, t);

  IntVec pt = lo;
  IntVec hpt(d + 1);
  for (;;) {
    for (std::size_t j = 0; j < d; ++j) hpt[j] = pt[j];
    hpt[d] = n;
    if (contains_homogenized(tests, hpt)) out.push_back(pt);
    std::size_t pos = 0;
    while (pos < d) {
      pt[pos] += 1;
      if (pt[pos] <= hi[pos]) break;
      pt[pos] = lo[pos];
      ++pos;
    }
    if (pos == d) break;
  }
  return out;
}

Rat weighted_sum(const Polytope& p, const Weight& w, const Int& n) {
  Rat s = 0;
  for (const IntVec& x : lattice_points(p, n)) s += w.eval(x, n);
  return s;
}

Rat weighted_sum(const Polytope& p,
                 const std::vector<std::pair<unsigned, Weight>>& parts,
                 const Int& n) {
  Rat s = 0;
  for (const IntVec& x : lattice_points(p, n))
    for (const auto& [deg, w] : parts) s += w.eval(x, n);
  return s;
}

HStarResult hstar_combined(const Polytope& p,
                           const std::vector<std::pair<unsigned, Weight>>& parts) {
  if (parts.empty()) throw Error("hstar_combined: no weight parts");
  unsigned max_deg = 0;
  for (const auto& [deg, w] : parts) max_deg = std::max(max_deg, deg);
  std::vector<ScaledResult> scaled;
  unsigned long period = 1;
  for (const auto& [deg, w] : parts) {
    ScaledResult sr{Rat(1), hstar(p, w)};
    period = std::max(period, sr.part.period);
    scaled.push_back(std::move(sr));
  }
  const long r = p.is_empty() ? 0 : p.dim();
  return ratfun_combine(scaled, period,
                        static_cast<unsigned long>(r) + max_deg + 1);
}

namespace {

VerifyReport compare(const Polytope& p, const RatVec& coeffs,
                     const std::vector<std::pair<unsigned, Weight>>& parts,
                     std::size_t n_max) {
  VerifyReport rep;
  rep.actual = coeffs;
  rep.expected.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    rep.expected[n] = weighted_sum(p, parts, Int(static_cast<unsigned long>(n)));
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (rep.expected[n] != rep.actual[n]) {
      rep.pass = false;
      rep.first_mismatch = n;
      break;
    }
  }
  return rep;
}

}  // namespace

VerifyReport verify_series(const Polytope& p, const Weight& w,
                           std::size_t n_max) {
  return compare(p, series_expand(hstar(p, w), n_max), {{w.degree(), w}}, n_max);
}

VerifyReport verify_series(const Polytope& p,
                           const std::vector<std::pair<unsigned, Weight>>& parts,
                           std::size_t n_max) {
  return compare(p, series_expand(hstar_combined(p, parts), n_max), parts, n_max);
}

VerifyReport verify_against(const Polytope& p,
                            const std::vector<std::pair<unsigned, Weight>>& parts,
                            const HStarResult& result, std::size_t n_max) {
  return compare(p, series_expand(result, n_max), parts, n_max);
}

}  // namespace ehrkit
