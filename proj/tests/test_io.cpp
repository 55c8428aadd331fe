#include <doctest.h>

#include "../tools/io.hpp"

using namespace ehrkit;

TEST_SUITE("io") {

TEST_CASE("polytope json round trip") {
  for (const char* src :
       {R"({"vertices": [[0],[1]]})",
        R"({"vertices": [["1","1"],["1","5/6"],["7/6","1"]]})",
        R"({"vertices": [[3,-2],[2,-2],[2,-1]]})",
        R"({"vertices": [], "dim": 3})"}) {
    Polytope p = cli::parse_polytope(src);
    Polytope again = cli::parse_polytope(cli::polytope_to_json(p));
    CHECK(again.ambient_dim() == p.ambient_dim());
    CHECK(again.vertices() == p.vertices());
  }
}

TEST_CASE("polytope json errors") {
  CHECK_THROWS_AS(cli::parse_polytope("not json"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"vertices": [[0,0],[1]]})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"vertices": [[0],[1],[2]]})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"vertices": [[0.5]]})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"vertices": [["1/0"]]})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"points": []})"), Error);
}

TEST_CASE("result serialization") {
  HStarResult r = make_hstar_result(Poly(RatVec{Rat(0), Rat(1), Rat(1)}), 1, 4, 1, 2, 1);
  CHECK(cli::hstar_to_json(r) ==
        R"({"exponent":4,"numerator":["0","1","1"],"period":1})");
  CHECK(cli::hstar_to_text(r) == "h*(t) = t^2 + t\ndenominator: (1 - t)^4");
  HStarResult r6 = make_hstar_result(Poly(RatVec{Rat(1)}), 6, 3, 2, 0, 2);
  CHECK(cli::hstar_to_text(r6) == "h*(t) = 1\ndenominator: (1 - t^6)^3");
}

}  // TEST_SUITE
