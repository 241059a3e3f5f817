#include <doctest.h>

#include <random>

#include "genus_forge/error.hpp"
#include "genus_forge/modular.hpp"
#include "genus_forge/selftest.hpp"
#include "genus_forge/serialize.hpp"

using namespace genus_forge;

TEST_CASE("fixed-point data round-trips") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const FixedPointData fpd = random_manifold_data(4, 9, rng);
    CHECK(fixed_points_from_json(json::parse(fixed_points_to_json(fpd).dump())) == fpd);
  }
}

TEST_CASE("relations round-trip") {
  const Relation rel = build_relation(cpn_fixed_points({1, 3}), 3, 6);
  CHECK(relation_from_json(json::parse(relation_to_json(rel).dump())) == rel);
}

TEST_CASE("series round-trip") {
  for (int N : {2, 3, 5, 12})
    for (int k = 1; k <= 4; ++k) {
      const QSeries& g = eisenstein_qexp(k, N, 7);
      CHECK(series_from_json(json::parse(series_to_json(g).dump())) == g);
    }
  const json j = series_to_json(eisenstein_qexp(1, 3, 2));
  CHECK(j["variable"] == "q");
  CHECK(j["level"] == 3);
  CHECK(j["precision"] == 2);
  CHECK(j["coeffs"][0][1] == "1/6 + 1/3*z");
}

TEST_CASE("input files") {
  const FixedPointData cp2 = fixed_points_from_json(read_json_file(GENUS_FORGE_TEST_DATA "/cp2.json"));
  CHECK(cp2.n == 2);
  CHECK(cp2.asserted_index == 3);
  CHECK(cp2.points[1].label == "P1");
  CHECK_THROWS_WITH_AS(fixed_points_from_json(read_json_file(GENUS_FORGE_TEST_DATA "/zero_weight.json")),
                       "zero weight at point 0 (P0), slot 1", ValidationError);
  CHECK_THROWS_AS(read_json_file(GENUS_FORGE_TEST_DATA "/missing.json"), ValidationError);

  const OrbitSpec orbit = orbit_from_json(read_json_file(GENUS_FORGE_TEST_DATA "/orbit_gr2_r5.json"));
  CHECK(orbit.root_system().name() == "B2");
  CHECK_THROWS_AS(orbit_from_json(json{{"family", "C"}, {"rank", 2}}), ValidationError);

  CHECK(polytope_from_json(read_json_file(GENUS_FORGE_TEST_DATA "/cube3.json")).f == std::vector<long>{8, 12, 6, 1});
  CHECK(polytope_from_json(read_json_file(GENUS_FORGE_TEST_DATA "/dilated_triangle.json")).edges.size() == 3);
  CHECK_THROWS_AS(polytope_from_json(json{{"g", 1}}), ValidationError);
  CHECK_THROWS_AS(fixed_points_from_json(json{{"n", "two"}, {"points", json::array()}}), ValidationError);
}
