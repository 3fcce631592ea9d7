#pragma once

#include <string>
#include <vector>

#include "lakm/core.hpp"

namespace lakm {

/// kmeans++ D^2 seeding: first center uniform over points, each next center
/// sampled proportionally to the squared distance to the chosen set.
CenterSet kmeanspp_seed(const PointSet& points, std::size_t k, RngStream rng);

/// Lloyd iterations from `init` until the relative cost improvement drops
/// below tol or max_iters is hit. A cluster emptied by reassignment is
/// re-seeded at the point farthest from its current center.
CenterSet lloyd(const PointSet& points, const CenterSet& init, std::size_t max_iters = 300,
                double tol = 1e-6);

struct SamplingBaselineOutput {
  double q = 0.0;
  CenterSet centers;
  double cost = 0.0;
  std::vector<std::string> warnings;
};

inline const std::vector<double>& default_q_grid() {
  static const std::vector<double> grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  return grid;
}

/// Random-sampling baseline: for each q keep each labeled point w.p. q, take
/// per-class centroids of the sample, score on the full point set, and
/// return the best q (ties to the earlier grid entry).
SamplingBaselineOutput random_sampling_baseline(const PointSet& points,
                                                const LabelAssignment& labels,
                                                std::size_t k,
                                                const std::vector<double>& q_grid,
                                                RngStream rng);

}  // namespace lakm
