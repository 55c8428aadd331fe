#include <doctest.h>

#include <algorithm>

#include <ehrkit/oracle.hpp>
#include <ehrkit/weight_expr.hpp>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/testgen.hpp"

using namespace ehrkit;

namespace {

Weight weight_from(const std::string& expr, std::size_t d) {
  auto parts = weight_parts(parse_weight(expr, d), d);
  REQUIRE(parts.size() == 1);
  return parts[0].second;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("lattice point scans") {
  auto seg3 = lattice_points(fixtures::unit_segment(), Int(3));
  REQUIRE(seg3.size() == 4);
  for (long i = 0; i <= 3; ++i) CHECK(seg3[static_cast<std::size_t>(i)] == IntVec{Int(i)});

  CHECK(lattice_points(fixtures::standard_triangle(), Int(2)).size() == 6);

  auto p1 = lattice_points(fixtures::seg_P(), Int(1));
  std::sort(p1.begin(), p1.end());
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == IntVec{Int(2), Int(-2)});
  CHECK(p1[1] == IntVec{Int(3), Int(-2)});

  CHECK(lattice_points(Polytope::empty(2), Int(4)).empty());
  auto origin = lattice_points(fixtures::unit_square(), Int(0));
  REQUIRE(origin.size() == 1);
  CHECK(origin[0] == IntVec{Int(0), Int(0)});
}

TEST_CASE("scan guard rejects oversized boxes") {
  Polytope wide(2, {{Rat(0), Rat(0)}, {Rat(100000), Rat(0)},
                    {Rat(0), Rat(100000)}});
  CHECK_THROWS_AS(lattice_points(wide, Int(1)), Error);
}

TEST_CASE("picks theorem on random lattice polygons") {
  testgen::Rng rng(0x0bac1e);
  INFO("seed = ", 0x0bac1e);
  int done = 0;
  while (done < 8) {
    Polytope p = testgen::random_lattice_polytope(rng, 2, 7, 4);
    if (p.dim() != 2) continue;
    ++done;
    // boundary count: sum of gcds along the angularly ordered edges
    std::vector<RatVec> v = p.vertices();
    RatVec c(2, Rat(0));
    for (const RatVec& x : v) {
      c[0] += x[0];
      c[1] += x[1];
    }
    c[0] /= static_cast<unsigned long>(v.size());
    c[1] /= static_cast<unsigned long>(v.size());
    std::sort(v.begin(), v.end(), [&](const RatVec& a, const RatVec& b) {
      auto half = [&](const RatVec& x) {
        Rat dy = x[1] - c[1];
        if (dy != 0) return sgn(dy) > 0 ? 0 : 1;
        return sgn(x[0] - c[0]) > 0 ? 0 : 1;
      };
      int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
      return sgn(cross) > 0;
    });
    Int boundary = 0;
    Rat twice_area = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const RatVec& a = v[i];
      const RatVec& b = v[(i + 1) % v.size()];
      Rat dx = b[0] - a[0], dy = b[1] - a[1];
      boundary += gcd(Int(dx.get_num()), Int(dy.get_num()));
      twice_area += a[0] * b[1] - a[1] * b[0];
    }
    Rat area = abs(twice_area) / 2;
    Int total(static_cast<unsigned long>(lattice_points(p, Int(1)).size()));
    Rat interior = Rat(total - boundary);
    CHECK(area == interior + Rat(boundary) / 2 - 1);
  }
}

TEST_CASE("weighted sums") {
  CHECK(weighted_sum(fixtures::unit_segment(), weight_from("x1^2", 1), Int(2)) == 5);
  // n = 0 evaluates the weight at the origin with height 0
  std::vector<std::pair<unsigned, Weight>> parts =
      weight_parts(parse_weight("x1 + 3", 2), 2);
  CHECK(weighted_sum(fixtures::standard_triangle(), parts, Int(0)) == 3);

  LinForm ell = fixtures::form_2x1_3x2();
  Weight sq = testgen::product_weight(2, {ell, ell});
  CHECK(weighted_sum(fixtures::seg_P(), sq, Int(1)) == 4);
  RatVec series = series_expand(hstar_ell_squared(fixtures::seg_P(), ell), 1);
  CHECK(series[1] == 4);
}

TEST_CASE("weighted sums are additive over half-open partitions") {
  Polytope p = fixtures::unit_square();
  Weight w = weight_from("x1*x2 + x2^2", 2);
  auto cells = half_open_decomposition(p, triangulate(p));
  for (long n = 0; n <= 4; ++n) {
    Rat total = 0;
    for (const auto& h : cells) total += brute::halfopen_weighted_sum(h, w, Int(n));
    CHECK(total == weighted_sum(p, w, Int(n)));
  }
}

TEST_CASE("series verification") {
  CHECK(verify_series(fixtures::unit_segment(), weight_from("x1^2", 1), 10).pass);
  CHECK(verify_series(fixtures::standard_triangle(),
                      weight_from("(2*x1 - x2)^2 * (2*x2 - x1)^2", 2), 8)
            .pass);

  // corrupted numerator is caught at the first divergent index
  Weight w = weight_from("x1^2", 1);
  HStarResult good = hstar(fixtures::unit_segment(), w);
  RatVec bad_coeffs = good.numerator.coeffs();
  bad_coeffs[2] += 1;
  HStarResult bad = make_hstar_result(Poly(std::move(bad_coeffs)), good.period,
                                      good.exponent, good.dim,
                                      good.weight_degree, good.ambient_dim);
  VerifyReport rep = verify_against(fixtures::unit_segment(),
                                    {{w.degree(), w}}, bad, 8);
  CHECK(!rep.pass);
  CHECK(rep.first_mismatch == 2);
}

}  // TEST_SUITE
