#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lakm/deletion.hpp"
#include "lakm/synthgen.hpp"

using namespace lakm;
using testutil::make_points;

TEST_SUITE("deletion") {

TEST_CASE("surviving labels give exact per-label means") {
  auto points = make_points(1, {0, 2, 100, 102, 50});
  LabelAssignment partial{0, 0, 1, 1, kNoLabel};
  auto out = deletion_cluster(points, partial, 2);
  REQUIRE(out.centers.size() == 2);
  CHECK(out.centers.row(0)[0] == doctest::Approx(1.0));
  CHECK(out.centers.row(1)[0] == doctest::Approx(101.0));
  CHECK(out.center_labels == std::vector<int32_t>{0, 1});
  // The unlabeled point at 50 is filled with the nearest center's label.
  CHECK(out.labels[4] == 0);
  // Pre-labeled entries are untouched.
  for (int i = 0; i < 4; ++i) CHECK(out.labels[i] == partial[i]);
  CHECK(out.warnings.empty());
}

TEST_CASE("a label with no survivors is dropped with a warning") {
  auto points = make_points(1, {0, 1, 10});
  LabelAssignment partial{0, 0, kNoLabel};
  auto out = deletion_cluster(points, partial, 3);
  CHECK(out.centers.size() == 1);
  CHECK(out.center_labels == std::vector<int32_t>{0});
  CHECK(!out.warnings.empty());
  CHECK(out.labels[2] == 0);
}

TEST_CASE("an entirely unlabeled input is an error") {
  auto points = make_points(1, {0, 1});
  LabelAssignment partial{kNoLabel, kNoLabel};
  CHECK_THROWS_AS(deletion_cluster(points, partial, 2), invalid_input);
}

TEST_CASE("fills recover ground truth on a separated mixture") {
  auto mix = planted_mixture(3, 6, 200, 40.0, 1.0, RngStream{20, 0});
  LabelAssignment partial = mix.labels;
  // Delete 90% of labels deterministically.
  auto engine = RngStream{21, 0}.engine();
  for (auto& l : partial) {
    if (engine.uniform() < 0.9) l = kNoLabel;
  }
  auto out = deletion_cluster(mix.points, partial, 3);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < mix.labels.size(); ++i) {
    agree += out.labels[i] == mix.labels[i];
  }
  CHECK(double(agree) / double(mix.labels.size()) > 0.99);
}

TEST_CASE("deterministic: identical inputs give identical outputs") {
  auto mix = planted_mixture(2, 4, 100, 30.0, 1.0, RngStream{22, 0});
  LabelAssignment partial = mix.labels;
  for (std::size_t i = 0; i < partial.size(); i += 3) partial[i] = kNoLabel;
  auto a = deletion_cluster(mix.points, partial, 2);
  auto b = deletion_cluster(mix.points, partial, 2);
  CHECK(a.centers.values() == b.centers.values());
  CHECK(a.labels == b.labels);
}

}  // TEST_SUITE
