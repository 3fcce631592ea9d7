#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lakm/kmedian.hpp"

using namespace lakm;
using testutil::make_points;

namespace {

/// Grid-search oracle for the 2-D geometric median: three refinement passes
/// over a shrinking lattice around the best cell.
std::vector<double> grid_median_2d(const PointSet& points) {
  double lo_x = points.at(0, 0), hi_x = lo_x, lo_y = points.at(0, 1), hi_y = lo_y;
  for (std::size_t i = 0; i < points.size(); ++i) {
    lo_x = std::min(lo_x, points.at(i, 0));
    hi_x = std::max(hi_x, points.at(i, 0));
    lo_y = std::min(lo_y, points.at(i, 1));
    hi_y = std::max(hi_y, points.at(i, 1));
  }
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<double> best{(lo_x + hi_x) / 2, (lo_y + hi_y) / 2};
  double span_x = std::max(hi_x - lo_x, 1e-9), span_y = std::max(hi_y - lo_y, 1e-9);
  for (int pass = 0; pass < 4; ++pass) {
    double best_obj = median_objective(points, all, best);
    std::vector<double> next = best;
    const int steps = 40;
    for (int ix = -steps; ix <= steps; ++ix) {
      for (int iy = -steps; iy <= steps; ++iy) {
        std::vector<double> cand{best[0] + span_x * ix / steps,
                                 best[1] + span_y * iy / steps};
        const double obj = median_objective(points, all, cand);
        if (obj < best_obj) {
          best_obj = obj;
          next = cand;
        }
      }
    }
    best = next;
    span_x /= steps;
    span_y /= steps;
  }
  return best;
}

}  // namespace

TEST_SUITE("kmedian") {

TEST_CASE("median of collinear odd-count points is the middle point") {
  auto points = make_points(1, {0, 1, 2, 3, 100});
  auto med = geometric_median(points, 1e-9);
  CHECK(med[0] == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("median_objective is the plain distance sum") {
  auto points = make_points(2, {0, 0, 3, 4});
  std::vector<std::size_t> all{0, 1};
  std::vector<double> y{0, 0};
  CHECK(median_objective(points, all, y) == doctest::Approx(5.0));
}

TEST_CASE("geometric_median is within (1+eps) of the 2-D grid-search oracle") {
  auto engine = RngStream{40, 0}.engine();
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 3 + engine.uniform_below(28);
    std::vector<double> values(n * 2);
    for (auto& v : values) v = 20.0 * engine.uniform() - 10.0;
    auto points = PointSet::create(n, 2, values);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    const double eps = 1e-4;
    auto med = geometric_median(points, eps);
    auto oracle = grid_median_2d(points);
    CHECK(median_objective(points, all, med) <=
          (1 + eps) * median_objective(points, all, oracle) + 1e-12);
  }
}

TEST_CASE("median at a collocated data point does not diverge") {
  // The Weiszfeld iteration visits a data point; the Vardi-Zhang step must
  // handle the singular weight.
  auto points = make_points(2, {0, 0, 0, 0, 0, 0, 10, 0, 0, 10});
  auto med = geometric_median(points, 1e-9);
  CHECK(med[0] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(med[1] == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("kmedian_cluster picks the k most common labels, ties to smaller") {
  auto points = make_points(1, {0, 0, 0, 50, 50, 100, 100});
  LabelAssignment labels{0, 0, 0, 1, 1, 2, 2};
  auto out = kmedian_cluster(points, labels, 2, 0.2, RngStream{41, 0});
  REQUIRE(out.centers.size() == 2);
  CHECK(out.center_labels == std::vector<int32_t>{0, 1});
}

TEST_CASE("kmedian_cluster warns when fewer than k labels exist") {
  auto points = make_points(1, {0, 0, 50, 50});
  LabelAssignment labels{0, 0, 1, 1};
  auto out = kmedian_cluster(points, labels, 3, 0.2, RngStream{45, 0});
  CHECK(out.centers.size() < 3);
  CHECK(!out.warnings.empty());
}

TEST_CASE("kmedian_cluster centers approximate class medians") {
  auto engine = RngStream{42, 0}.engine();
  std::vector<double> values;
  LabelAssignment labels;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 200; ++i) {
      values.push_back(100.0 * c + engine.normal());
      values.push_back(engine.normal());
      labels.push_back(c);
    }
  }
  auto points = PointSet::create(600, 2, values);
  auto out = kmedian_cluster(points, labels, 3, 0.2, RngStream{43, 0});
  REQUIRE(out.centers.size() == 3);
  for (int c = 0; c < 3; ++c) {
    CHECK(std::abs(out.centers.row(c)[0] - 100.0 * c) < 2.0);
    CHECK(std::abs(out.centers.row(c)[1]) < 2.0);
  }
}

TEST_CASE("kmedian_cluster is deterministic") {
  auto points = make_points(1, {0, 1, 2, 10, 11, 12});
  LabelAssignment labels{0, 0, 0, 1, 1, 1};
  auto a = kmedian_cluster(points, labels, 2, 0.3, RngStream{44, 0});
  auto b = kmedian_cluster(points, labels, 2, 0.3, RngStream{44, 0});
  CHECK(a.centers.values() == b.centers.values());
}

}  // TEST_SUITE
