#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lakm/synthgen.hpp"

using namespace lakm;

TEST_SUITE("synthgen") {

TEST_CASE("defaults give 10010 points in 1000 dimensions") {
  auto inst = lower_bound_instance();
  CHECK(inst.points.size() == 10010);
  CHECK(inst.points.dim() == 1000);
  CHECK(inst.labels.size() == 10010);
  CHECK(inst.optimal_centers.size() == 10);
}

TEST_CASE("closed-form optimal cost matches an independent recomputation") {
  for (auto [k, d] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 7}, {10, 40}}) {
    auto inst = lower_bound_instance(k, d, 1000.0);
    CHECK(inst.optimal_cost ==
          doctest::Approx(double(k) * double(d) * double(d) / double(d + 1))
              .epsilon(1e-12));
  }
}

TEST_CASE("optimal cost equals the centroid-then-cost oracle to 1e-12") {
  auto inst = lower_bound_instance(4, 25, 1000.0);
  const double oracle = testutil::partition_cost(inst.points, inst.labels, 4);
  CHECK(std::abs(inst.optimal_cost - oracle) <= 1e-12 * oracle);
  // And the stored centers are those centroids.
  CHECK(cost_kmeans(inst.points, inst.optimal_centers) ==
        doctest::Approx(inst.optimal_cost).epsilon(1e-12));
}

TEST_CASE("k=1, d=2 worked example") {
  auto inst = lower_bound_instance(1, 2, 1000.0);
  REQUIRE(inst.points.size() == 3);
  CHECK(inst.points.at(0, 0) == 1000.0);
  CHECK(inst.points.at(0, 1) == 0.0);
  CHECK(inst.points.at(1, 0) == 1001.0);
  CHECK(inst.points.at(2, 1) == 1.0);
}

TEST_CASE("k > d is rejected") {
  CHECK_THROWS_AS(lower_bound_instance(5, 3, 1000.0), invalid_input);
}

TEST_CASE("any single-point reassignment strictly increases cost (k=2, d=5)") {
  auto inst = lower_bound_instance(2, 5, 1000.0);
  const double base = testutil::partition_cost(inst.points, inst.labels, 2);
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    auto labels = inst.labels;
    labels[i] = 1 - labels[i];
    CHECK(testutil::partition_cost(inst.points, labels, 2) > base);
  }
}

TEST_CASE("planted_mixture with zero noise places points on the centers") {
  auto mix = planted_mixture(3, 4, 10, 50.0, 0.0, RngStream{70, 0});
  REQUIRE(mix.points.size() == 30);
  for (std::size_t i = 0; i < mix.points.size(); ++i) {
    const auto label = std::size_t(mix.labels[i]);
    CHECK(squared_distance(mix.points.row(i), mix.centers.row(label)) == 0.0);
  }
}

TEST_CASE("well-separated mixture is recovered by nearest-center assignment") {
  auto mix = planted_mixture(4, 10, 200, 200.0, 1.0, RngStream{71, 0});
  auto labels = assign_nearest(mix.points, mix.centers);
  CHECK(labels == mix.labels);
}

TEST_CASE("generation is deterministic per stream") {
  auto a = planted_mixture(2, 3, 20, 10.0, 1.0, RngStream{72, 0});
  auto b = planted_mixture(2, 3, 20, 10.0, 1.0, RngStream{72, 0});
  CHECK(a.points.values() == b.points.values());
}

}  // TEST_SUITE
