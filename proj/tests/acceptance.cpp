// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <ehrkit/analysis.hpp>
#include <ehrkit/eulerian.hpp>
#include <ehrkit/oracle.hpp>
#include <ehrkit/weight_expr.hpp>

#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace ehrkit;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > limit_seconds) ok = false;
  if (!ok) ++g_failures;
  std::printf("criterion %d: %s (%.2f s, limit %.0f s) %s%s\n", number,
              ok ? "PASS" : "FAIL", elapsed, limit_seconds, name.c_str(),
              error.empty() ? "" : ("  [" + error + "]").c_str());
  std::fflush(stdout);
}

Poly make(std::initializer_list<long> coeffs) {
  RatVec v;
  for (long c : coeffs) v.push_back(Rat(c));
  return Poly(std::move(v));
}

Weight single_weight(const std::string& expr, std::size_t d) {
  auto parts = weight_parts(parse_weight(expr, d), d);
  if (parts.size() != 1) throw Error("expected a homogeneous weight");
  return parts[0].second;
}

bool intro_examples() {
  Polytope seg = fixtures::unit_segment();
  HStarResult sq = hstar(seg, single_weight("x1^2", 1));
  bool ok = sq.numerator == make({0, 1, 1}) && sq.period == 1 && sq.exponent == 4;

  HStarResult one = hstar(seg, Weight::constant(1, Rat(1)));
  ok = ok && one.numerator == make({1}) && one.period == 1 && one.exponent == 2;

  HStarResult mixed =
      hstar_combined(seg, weight_parts(parse_weight("x1^2 + 1", 1), 1));
  ok = ok && mixed.numerator == make({1, -1, 2}) && mixed.period == 1 &&
       mixed.exponent == 4;
  return ok;
}

bool monotonicity_counterexample() {
  LinForm ell = fixtures::form_2x1_3x2();
  HStarResult hq = hstar_ell_squared(fixtures::tri_Q(), ell);
  HStarResult hp = hstar_ell_squared(fixtures::seg_P(), ell);
  bool ok = hq.numerator == make({0, 5, 1}) && hp.numerator == make({0, 4, 4});

  Weight w = testgen::product_weight(2, {ell, ell});
  MonotoneReport rep = check_monotonicity(fixtures::seg_P(), fixtures::tri_Q(),
                                          w, Int(1), MonotoneMode::Coeffwise);
  ok = ok && !rep.pass;
  ok = ok && hq.numerator.eval(Rat(1)) == 6 && hp.numerator.eval(Rat(1)) == 8;
  return ok;
}

bool quartic_triangle() {
  Polytope tri = fixtures::standard_triangle();
  Weight w = single_weight("(2*x1 - x2)^2 * (2*x2 - x1)^2", 2);
  HStarResult r = hstar(tri, w);
  bool ok = r.numerator == make({0, 8, 81, -6, 1}) && r.period == 1 &&
            r.exponent == 7;
  ok = ok && verify_series(tri, w, 8).pass;
  return ok;
}

bool nonconvex_dissection() {
  Weight w = single_weight("x1^2", 2);
  HStarResult t1 = hstar(fixtures::nonconvex_T1(), w);
  HStarResult t2 = hstar(fixtures::nonconvex_T2(), w);
  HStarResult seg = hstar(fixtures::nonconvex_shared_segment(), w);
  HStarResult r =
      ratfun_combine({{Rat(1), t1}, {Rat(1), t2}, {Rat(-1), seg}}, 1, 5);
  bool ok = r.numerator == make({0, 23, -4, 9});
  ok = ok && nonneg_on_ray(r.numerator).pass;
  auto witness = check_nonneg_coeffs(r.numerator);
  ok = ok && witness.has_value() && *witness == 2;
  return ok;
}

bool denominator_six_triangle() {
  Polytope d6 = fixtures::delta_q(6);
  LinForm ell = fixtures::form_delta_q(6);
  HStarResult r = hstar(d6, testgen::product_weight(2, {ell, ell}));
  Poly expected = make({0, 36, 144, 324, 576, 900, 2772, 2484, 2052, 1476,
                        756, -108, 324, 576, 900, 1296, 1764, 2304});
  return r.numerator == expected && r.numerator.coeff(11) == -108 &&
         r.period == 6 && r.exponent == 5;
}

bool tensor_counterexample() {
  Polytope p20 = fixtures::simplex20();
  RatVec c = linear_form_from_vertex_values(p20, fixtures::simplex20_vertex_values());
  HStarResult r = hstar_ell_squared(p20, LinForm{c});
  bool ok = r.numerator.coeff(11) == Rat(-40, 9);

  TensorHPoly t = h2_tensor(p20);
  const SymMatrix& h11 = t.coeffs[11];
  RatVec v(c.begin(), c.end() - 1);  // drop the height coefficient
  ok = ok && h11.quadratic_form(v) == Rat(-40, 9);
  PsdCheck pc = is_psd(h11);
  ok = ok && !pc.psd && pc.value < 0 && h11.quadratic_form(pc.witness) == pc.value;
  return ok;
}

bool oracle_equivalence() {
  auto r = propsuite::run_oracle_suite(0xacc7, 50);
  std::printf("  oracle suite: 50 instances, seed 0x%x, failures %zu\n", 0xacc7,
              r.failures);
  return r.failures == 0;
}

bool theorem_suites() {
  struct Entry {
    const char* name;
    std::uint64_t seed;
    propsuite::SuiteResult (*fn)(std::uint64_t, std::size_t);
  };
  const Entry entries[] = {
      {"nonnegativity (coefficients)", 0xacc801, propsuite::run_nonneg_coeff_suite},
      {"nonnegativity (ray)", 0xacc802, propsuite::run_ray_nonneg_suite},
      {"monotonicity (coefficientwise)", 0xacc803, propsuite::run_monotone_coeff_suite},
      {"monotonicity (ray)", 0xacc804, propsuite::run_monotone_ray_suite},
      {"polygons", 0xacc805, propsuite::run_polygon_suite},
      {"pyramids", 0xacc806, propsuite::run_pyramid_suite},
      {"safe triangles", 0xacc807, propsuite::run_safe_triangle_suite},
  };
  bool ok = true;
  for (const Entry& e : entries) {
    propsuite::SuiteResult r = e.fn(e.seed, 50);
    std::printf("  %s: 50 instances, seed 0x%llx, failures %zu\n", e.name,
                static_cast<unsigned long long>(e.seed), r.failures);
    std::fflush(stdout);
    ok = ok && r.failures == 0;
  }
  return ok;
}

bool eulerian_suite() {
  const RatVec grid = {Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
  bool ok = true;
  for (const Rat& lam : grid) {
    Poly a1 = eulerian_poly(1, lam);
    ok = ok && a1.coeff(0) == lam && a1.coeff(1) == 1 - lam;
    Poly a2 = eulerian_poly(2, lam);
    Rat c1 = 1 + 2 * lam - 2 * lam * lam;
    ok = ok && a2.coeff(0) == lam * lam && a2.coeff(1) == c1 &&
         a2.coeff(2) == (1 - lam) * (1 - lam);
  }
  auto classic = [](std::initializer_list<long> cs) {
    RatVec v;
    for (long c : cs) v.push_back(Rat(c));
    return Poly(std::move(v));
  };
  ok = ok && eulerian_poly(1, Rat(1)) == classic({1});
  ok = ok && eulerian_poly(2, Rat(1)) == classic({1, 1});
  ok = ok && eulerian_poly(3, Rat(1)) == classic({1, 4, 1});
  ok = ok && eulerian_poly(4, Rat(1)) == classic({1, 11, 11, 1});
  ok = ok && eulerian_poly(5, Rat(1)) == classic({1, 26, 66, 26, 1});
  ok = ok && eulerian_poly(6, Rat(1)) == classic({1, 57, 302, 302, 57, 1});
  for (unsigned long d = 0; d <= 8 && ok; ++d) {
    for (const Rat& lam : grid) {
      Poly a = eulerian_poly(d, lam);
      for (const Rat& c : a.coeffs()) ok = ok && c >= 0;
      // defining series to order 20
      RatVec partial(21);
      for (std::size_t n = 0; n <= 20; ++n)
        partial[n] = rat_pow(Rat(static_cast<unsigned long>(n)) + lam, d);
      Poly lhs = Poly(RatVec{Rat(1), Rat(-1)}).pow(d + 1) * Poly(std::move(partial));
      for (std::size_t k = 0; k + d + 1 <= 20; ++k)
        ok = ok && lhs.coeff(k) == a.coeff(k);
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite (all comparisons exact)\n");
  criterion(1, "intro segment series", 1.0, intro_examples);
  criterion(2, "monotonicity counterexample (segment in triangle)", 1.0,
            monotonicity_counterexample);
  criterion(3, "quartic weight on the standard triangle", 5.0, quartic_triangle);
  criterion(4, "non-convex quadrilateral dissection", 5.0, nonconvex_dissection);
  criterion(5, "denominator-6 triangle", 10.0, denominator_six_triangle);
  criterion(6, "20-dimensional tensor counterexample", 60.0, tensor_counterexample);
  criterion(7, "oracle equivalence (50 seeded instances)", 300.0, oracle_equivalence);
  criterion(8, "theorem property suites (7 x 50 seeded instances)", 600.0,
            theorem_suites);
  criterion(9, "Eulerian polynomial unit suite", 10.0, eulerian_suite);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
