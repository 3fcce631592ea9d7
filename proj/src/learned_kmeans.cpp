#include "lakm/learned_kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lakm/crd_est.hpp"

namespace lakm {

std::vector<double> AlphaGrid::values() const {
  if (lo <= 0.0 || hi < lo || step <= 0.0) throw invalid_input("AlphaGrid: bad range");
  std::vector<double> out;
  for (double a = lo; a <= hi + step * 0.5; a += step) out.push_back(a);
  return out;
}

ClusterOutput cluster_with_predictor(const PointSet& points,
                                     const LabelAssignment& predicted, std::size_t k,
                                     double alpha, RngStream rng) {
  if (k == 0 || k > points.size()) throw invalid_input("k out of range");
  if (predicted.size() != points.size()) throw invalid_input("label count != point count");
  for (std::int32_t l : predicted) {
    if (l == kNoLabel) throw invalid_input("cluster_with_predictor: unlabeled point");
  }
  const std::size_t d = points.dim();
  auto groups = group_by_label(predicted, k);

  std::vector<double> centers(k * d, 0.0);
  // One crd_est per (class, coordinate); stream-id = class*d + coordinate.
  parallel_for(k * d, [&](std::size_t t) {
    const std::size_t c = t / d;
    const std::size_t j = t % d;
    const auto& idx = groups[c];
    if (idx.empty()) return;
    thread_local std::vector<double> column;
    thread_local std::vector<double> scratch;
    column.resize(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) column[r] = points.at(idx[r], j);
    centers[c * d + j] = detail::crd_est_impl(column, alpha, rng.derive(t), scratch);
  });

  ClusterOutput out;
  std::vector<std::size_t> empty_classes;
  for (std::size_t c = 0; c < k; ++c) {
    if (groups[c].empty()) empty_classes.push_back(c);
  }
  if (!empty_classes.empty()) {
    // Farthest-point fallback keeps k centers when a label never occurs.
    std::vector<std::span<const double>> placed;
    for (std::size_t c = 0; c < k; ++c) {
      if (!groups[c].empty()) placed.emplace_back(centers.data() + c * d, d);
    }
    for (std::size_t c : empty_classes) {
      std::size_t far_idx = 0;
      double far_d2 = -1.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        double near = 0.0;
        if (!placed.empty()) {
          near = std::numeric_limits<double>::infinity();
          for (auto& ctr : placed) {
            near = std::min(near, squared_distance(points.row(i), ctr));
          }
        }
        if (near > far_d2) {
          far_d2 = near;
          far_idx = i;
        }
      }
      auto src = points.row(far_idx);
      std::copy(src.begin(), src.end(), centers.begin() + c * d);
      placed.emplace_back(centers.data() + c * d, d);
      out.warnings.push_back("empty class " + std::to_string(c) +
                             ": fallback farthest-point center");
    }
  }
  out.centers = CenterSet::create(k, d, std::move(centers));
  return out;
}

AlphaSelection select_alpha(const PointSet& points, const LabelAssignment& predicted,
                            std::size_t k, const AlphaGrid& grid, RngStream rng) {
  AlphaSelection best;
  bool have = false;
  for (double a : grid.values()) {
    auto run = cluster_with_predictor(points, predicted, k, a, rng);
    const double cost = cost_kmeans(points, run.centers);
    if (!have || cost < best.cost) {
      have = true;
      best.alpha = a;
      best.centers = std::move(run.centers);
      best.cost = cost;
      best.warnings = std::move(run.warnings);
    }
  }
  if (!have) throw invalid_input("select_alpha: empty grid");
  return best;
}

}  // namespace lakm
