#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lakm/learned_kmeans.hpp"

using namespace lakm;
using testutil::make_centers;
using testutil::make_points;

namespace {

PointSet two_clusters_1d() {
  std::vector<double> values;
  for (int i = 0; i < 50; ++i) values.push_back(0.0);
  for (int i = 0; i < 50; ++i) values.push_back(100.0);
  return PointSet::create(100, 1, values);
}

LabelAssignment perfect_labels() {
  LabelAssignment labels(100, 0);
  for (int i = 50; i < 100; ++i) labels[i] = 1;
  return labels;
}

}  // namespace

TEST_SUITE("learned") {

TEST_CASE("alpha grid default is .01 to .15 step .01") {
  auto values = AlphaGrid{}.values();
  REQUIRE(values.size() == 15);
  CHECK(values.front() == doctest::Approx(0.01));
  CHECK(values.back() == doctest::Approx(0.15));
}

TEST_CASE("perfect predictor on separated 1-D clusters gives exact centers") {
  auto points = two_clusters_1d();
  auto labels = perfect_labels();
  auto out = cluster_with_predictor(points, labels, 2, 0.05, RngStream{3, 0});
  CHECK(out.centers.row(0)[0] == 0.0);
  CHECK(out.centers.row(1)[0] == 100.0);
  CHECK(out.warnings.empty());
}

TEST_CASE("10% flipped labels stay within 1.2x of the optimal centers' cost") {
  auto points = two_clusters_1d();
  auto optimal = make_centers(1, {0.0, 100.0});
  const double opt_cost = cost_kmeans(points, optimal);
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto labels = perfect_labels();
    auto engine = RngStream{seed, 99}.engine();
    for (int flips = 0; flips < 10; ++flips) {
      const auto i = engine.uniform_below(100);
      labels[i] = 1 - labels[i];
    }
    auto out = cluster_with_predictor(points, labels, 2, 0.1, RngStream{seed, 0});
    // opt_cost is 0 on this instance, so bound additively by a small slack
    // of the squared separation.
    CHECK(cost_kmeans(points, out.centers) <= std::max(1.2 * opt_cost, 1.0));
  }
}

TEST_CASE("labels >= k are rejected") {
  auto points = two_clusters_1d();
  LabelAssignment labels(100, 5);
  CHECK_THROWS_AS(cluster_with_predictor(points, labels, 2, 0.05, RngStream{1, 0}),
                  invalid_input);
}

TEST_CASE("empty class produces a fallback center and a warning") {
  auto points = two_clusters_1d();
  auto labels = perfect_labels();
  auto out = cluster_with_predictor(points, labels, 3, 0.05, RngStream{4, 0});
  REQUIRE(out.centers.size() == 3);
  CHECK(!out.warnings.empty());
  // The fallback is a real input point, far from the other centers.
  const double c2 = out.centers.row(2)[0];
  CHECK((c2 == 0.0 || c2 == 100.0));
}

TEST_CASE("select_alpha with a one-value grid equals a direct run") {
  auto points = two_clusters_1d();
  auto labels = perfect_labels();
  labels[0] = 1;  // mild noise so the run is not fully degenerate
  RngStream rng{17, 0};
  auto sel = select_alpha(points, labels, 2, AlphaGrid{0.07, 0.07, 0.01}, rng);
  auto direct = cluster_with_predictor(points, labels, 2, 0.07, rng);
  CHECK(sel.alpha == doctest::Approx(0.07));
  CHECK(sel.centers.values() == direct.centers.values());
}

TEST_CASE("select_alpha ties resolve to the smallest alpha") {
  auto points = two_clusters_1d();
  auto labels = perfect_labels();
  auto sel = select_alpha(points, labels, 2, AlphaGrid{}, RngStream{5, 0});
  CHECK(sel.alpha == doctest::Approx(0.01));
  CHECK(sel.cost == doctest::Approx(0.0));
}

TEST_CASE("select_alpha cost is the minimum over individually-run grid points") {
  auto points = two_clusters_1d();
  auto labels = perfect_labels();
  auto engine = RngStream{21, 7}.engine();
  for (int i = 0; i < 15; ++i) {
    const auto j = engine.uniform_below(100);
    labels[j] = int32_t(engine.uniform_below(2));
  }
  RngStream rng{6, 0};
  auto sel = select_alpha(points, labels, 2, AlphaGrid{}, rng);
  double best = std::numeric_limits<double>::infinity();
  for (double alpha : AlphaGrid{}.values()) {
    auto run = cluster_with_predictor(points, labels, 2, alpha, rng);
    best = std::min(best, cost_kmeans(points, run.centers));
  }
  CHECK(sel.cost == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("results are identical across thread counts") {
  auto engine = RngStream{30, 0}.engine();
  std::vector<double> values(400 * 8);
  for (auto& v : values) v = 10.0 * engine.uniform();
  auto points = PointSet::create(400, 8, values);
  LabelAssignment labels(400);
  for (auto& l : labels) l = int32_t(engine.uniform_below(4));
  set_max_threads(1);
  auto a = cluster_with_predictor(points, labels, 4, 0.08, RngStream{8, 0});
  set_max_threads(8);
  auto b = cluster_with_predictor(points, labels, 4, 0.08, RngStream{8, 0});
  set_max_threads(0);
  CHECK(a.centers.values() == b.centers.values());
}

}  // TEST_SUITE
