#include "lakm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lakm {

CenterSet kmeanspp_seed(const PointSet& points, std::size_t k, RngStream rng) {
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  if (k == 0 || k > n) throw invalid_input("kmeanspp_seed: k out of range");
  auto eng = rng.engine();

  std::vector<double> centers;
  centers.reserve(k * d);
  std::vector<bool> chosen(n, false);
  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());

  std::size_t first = eng.uniform_below(n);
  auto add_center = [&](std::size_t idx) {
    chosen[idx] = true;
    auto row = points.row(idx);
    centers.insert(centers.end(), row.begin(), row.end());
    for (std::size_t i = 0; i < n; ++i) {
      min_d2[i] = std::min(min_d2[i], squared_distance(points.row(i), row));
    }
  };
  add_center(first);

  for (std::size_t c = 1; c < k; ++c) {
    Accumulator total;
    for (double v : min_d2) total.add(v);
    const double mass = total.value();
    std::size_t pick = n;
    if (mass > 0.0) {
      const double target = eng.uniform() * mass;
      double run = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        run += min_d2[i];
        if (run > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) {  // numerical tail
        for (std::size_t i = n; i-- > 0;) {
          if (min_d2[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    }
    if (pick == n) {
      // All remaining mass is zero (duplicate-heavy input): uniform over the
      // not-yet-chosen points.
      std::size_t remaining = 0;
      for (bool b : chosen) remaining += b ? 0 : 1;
      std::size_t r = eng.uniform_below(remaining);
      for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i] && r-- == 0) {
          pick = i;
          break;
        }
      }
    }
    add_center(pick);
  }
  return CenterSet::create(k, d, std::move(centers));
}

CenterSet lloyd(const PointSet& points, const CenterSet& init, std::size_t max_iters,
                double tol) {
  if (points.dim() != init.dim()) throw invalid_input("lloyd: dimension mismatch");
  const std::size_t k = init.size();
  const std::size_t d = points.dim();
  CenterSet centers = init;
  double prev_cost = cost_kmeans(points, centers);
  for (std::size_t it = 0; it < max_iters; ++it) {
    auto labels = assign_nearest(points, centers);
    auto groups = group_by_label(labels, k);
    std::vector<double> values(centers.values());
    for (std::size_t c = 0; c < k; ++c) {
      if (groups[c].empty()) {
        // Re-seed at the point farthest from its assigned center.
        std::size_t far_idx = 0;
        double far_d2 = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
          const double d2 = squared_distance(
              points.row(i), centers.row(static_cast<std::size_t>(labels[i])));
          if (d2 > far_d2) {
            far_d2 = d2;
            far_idx = i;
          }
        }
        auto row = points.row(far_idx);
        std::copy(row.begin(), row.end(), values.begin() + c * d);
        continue;
      }
      auto mean = centroid(points, groups[c]);
      std::copy(mean.begin(), mean.end(), values.begin() + c * d);
    }
    centers = CenterSet::create(k, d, std::move(values));
    const double cost = cost_kmeans(points, centers);
    if (prev_cost == 0.0 || (prev_cost - cost) / prev_cost < tol) {
      prev_cost = cost;
      break;
    }
    prev_cost = cost;
  }
  return centers;
}

SamplingBaselineOutput random_sampling_baseline(const PointSet& points,
                                                const LabelAssignment& labels,
                                                std::size_t k,
                                                const std::vector<double>& q_grid,
                                                RngStream rng) {
  if (q_grid.empty()) throw invalid_input("random_sampling_baseline: empty q grid");
  for (double q : q_grid) {
    if (q <= 0.0 || q > 1.0) throw invalid_input("q out of (0,1]");
  }
  for (std::int32_t l : labels) {
    if (l == kNoLabel) throw invalid_input("random_sampling_baseline: unlabeled point");
  }
  SamplingBaselineOutput best;
  bool have = false;
  for (std::size_t qi = 0; qi < q_grid.size(); ++qi) {
    const double q = q_grid[qi];
    RngStream qrng = rng.derive(qi);
    LabelAssignment sampled(labels.size(), kNoLabel);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto eng = qrng.derive(i).engine();
      if (eng.uniform() < q) sampled[i] = labels[i];
    }
    std::vector<std::string> warnings;
    CenterSet centers = class_centroids(points, sampled, k, &warnings);
    const double cost = cost_kmeans(points, centers);
    if (!have || cost < best.cost) {
      have = true;
      best.q = q;
      best.centers = std::move(centers);
      best.cost = cost;
      best.warnings = std::move(warnings);
    }
  }
  return best;
}

}  // namespace lakm
