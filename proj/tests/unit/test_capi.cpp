#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "lakm.h"

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "lakm_capi_test";
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("points lifecycle and accessors") {
  const double data[] = {1, 2, 3, 4, 5, 6};
  lakm_points* p = nullptr;
  REQUIRE(lakm_points_create(data, 3, 2, &p) == LAKM_OK);
  CHECK(lakm_points_count(p) == 3);
  CHECK(lakm_points_dim(p) == 2);
  CHECK(std::memcmp(lakm_points_data(p), data, sizeof data) == 0);
  lakm_points_free(p);
}

TEST_CASE("invalid input sets the error code and message") {
  const double bad[] = {1.0, std::numeric_limits<double>::quiet_NaN()};
  lakm_points* p = nullptr;
  CHECK(lakm_points_create(bad, 1, 2, &p) == LAKM_ERR_INVALID);
  CHECK(std::string(lakm_last_error()).size() > 0);
  CHECK(lakm_points_create(nullptr, 1, 2, &p) == LAKM_ERR_INVALID);
}

TEST_CASE("missing files return the io error code") {
  lakm_points* p = nullptr;
  CHECK(lakm_points_load_csv("/nonexistent/file.csv", &p) == LAKM_ERR_IO);
}

TEST_CASE("csv round-trip through the C surface") {
  TempDir dir;
  const auto path = (dir.path / "pts.csv").string();
  const double data[] = {0.25, -1.5, 3.75, 42.0};
  lakm_points* p = nullptr;
  REQUIRE(lakm_points_create(data, 2, 2, &p) == LAKM_OK);
  REQUIRE(lakm_points_save_csv(p, path.c_str()) == LAKM_OK);
  lakm_points* back = nullptr;
  REQUIRE(lakm_points_load_csv(path.c_str(), &back) == LAKM_OK);
  CHECK(std::memcmp(lakm_points_data(back), data, sizeof data) == 0);
  lakm_points_free(p);
  lakm_points_free(back);
}

TEST_CASE("cost, assignment, and partition cost agree with hand values") {
  const double pts[] = {0, 0, 2, 0, 10, 0, 12, 0};
  const double ctr[] = {1, 0, 11, 0};
  lakm_points* p = nullptr;
  lakm_centers* c = nullptr;
  REQUIRE(lakm_points_create(pts, 4, 2, &p) == LAKM_OK);
  REQUIRE(lakm_centers_create(ctr, 2, 2, &c) == LAKM_OK);
  double cost = 0.0;
  REQUIRE(lakm_cost_kmeans(p, c, &cost) == LAKM_OK);
  CHECK(cost == doctest::Approx(4.0));
  REQUIRE(lakm_cost_kmedian(p, c, &cost) == LAKM_OK);
  CHECK(cost == doctest::Approx(4.0));
  lakm_labels* l = nullptr;
  REQUIRE(lakm_assign_nearest(p, c, &l) == LAKM_OK);
  const int32_t* lab = lakm_labels_data(l);
  CHECK(lab[0] == 0);
  CHECK(lab[3] == 1);
  double pc = 0.0;
  REQUIRE(lakm_partition_cost_kmeans(p, l, 2, &pc) == LAKM_OK);
  CHECK(pc == doctest::Approx(4.0));
  lakm_labels_free(l);
  lakm_centers_free(c);
  lakm_points_free(p);
}

TEST_CASE("gen_synth plus cluster_main with the auto grid recovers the optimum") {
  lakm_points* p = nullptr;
  lakm_labels* l = nullptr;
  lakm_centers* opt = nullptr;
  double opt_cost = 0.0;
  REQUIRE(lakm_gen_synth(4, 30, 1000.0, &p, &l, &opt, &opt_cost) == LAKM_OK);
  CHECK(lakm_points_count(p) == 4 * 31);

  lakm_labels* corrupted = nullptr;
  REQUIRE(lakm_corrupt(l, 4, LAKM_CORRUPT_UNIFORM, 0.3, 7, nullptr, nullptr,
                       &corrupted) == LAKM_OK);

  lakm_result* r = nullptr;
  REQUIRE(lakm_cluster_main(p, corrupted, 4, /*alpha=*/-1.0, 7, &r) == LAKM_OK);
  const double alpha = lakm_result_alpha(r);
  CHECK(alpha >= 0.01 - 1e-12);
  CHECK(alpha <= 0.15 + 1e-12);

  lakm_labels* assigned = nullptr;
  REQUIRE(lakm_assign_nearest(p, lakm_result_centers(r), &assigned) == LAKM_OK);
  double pc = 0.0;
  REQUIRE(lakm_partition_cost_kmeans(p, assigned, 4, &pc) == LAKM_OK);
  CHECK(pc == doctest::Approx(opt_cost).epsilon(1e-9));

  lakm_labels_free(assigned);
  lakm_result_free(r);
  lakm_labels_free(corrupted);
  lakm_centers_free(opt);
  lakm_labels_free(l);
  lakm_points_free(p);
}

TEST_CASE("deletion mode empties labels and cluster_deletion fills them") {
  lakm_points* p = nullptr;
  lakm_labels* l = nullptr;
  REQUIRE(lakm_gen_synth(3, 10, 1000.0, &p, &l, nullptr, nullptr) == LAKM_OK);
  lakm_labels* partial = nullptr;
  REQUIRE(lakm_corrupt(l, 3, LAKM_CORRUPT_DELETION, 0.5, 11, nullptr, nullptr,
                       &partial) == LAKM_OK);
  lakm_result* r = nullptr;
  REQUIRE(lakm_cluster_deletion(p, partial, 3, &r) == LAKM_OK);
  const lakm_labels* filled = lakm_result_labels(r);
  REQUIRE(filled != nullptr);
  const int32_t* lab = lakm_labels_data(filled);
  for (size_t i = 0; i < lakm_labels_count(filled); ++i) CHECK(lab[i] >= 0);
  lakm_result_free(r);
  lakm_labels_free(partial);
  lakm_labels_free(l);
  lakm_points_free(p);
}

TEST_CASE("fast and kmedian runs reject the auto-alpha sentinel") {
  lakm_points* p = nullptr;
  lakm_labels* l = nullptr;
  REQUIRE(lakm_gen_synth(3, 10, 1000.0, &p, &l, nullptr, nullptr) == LAKM_OK);
  lakm_result* r = nullptr;
  CHECK(lakm_cluster_fast(p, l, 3, -1.0, 1, &r) == LAKM_ERR_INVALID);
  CHECK(lakm_cluster_kmedian(p, l, 3, -1.0, 1, &r) == LAKM_ERR_INVALID);
  CHECK(lakm_cluster_fast(p, l, 3, 0.05, 1, &r) == LAKM_OK);
  lakm_result_free(r);
  lakm_labels_free(l);
  lakm_points_free(p);
}

TEST_CASE("random sampling baseline reports its q") {
  lakm_points* p = nullptr;
  lakm_labels* l = nullptr;
  REQUIRE(lakm_gen_synth(3, 20, 1000.0, &p, &l, nullptr, nullptr) == LAKM_OK);
  lakm_result* r = nullptr;
  REQUIRE(lakm_random_sampling_baseline(p, l, 3, nullptr, 0, 5, &r) == LAKM_OK);
  CHECK(lakm_result_q(r) > 0.0);
  CHECK(lakm_result_centers(r) != nullptr);
  lakm_result_free(r);
  lakm_labels_free(l);
  lakm_points_free(p);
}

}  // TEST_SUITE
