#pragma once

#include <string>
#include <vector>

#include "lakm/core.hpp"

namespace lakm {

struct AlphaGrid {
  double lo = 0.01;
  double hi = 0.15;
  double step = 0.01;

  /// Grid values lo, lo+step, ... up to hi (inclusive within a half-step).
  std::vector<double> values() const;
};

struct ClusterOutput {
  CenterSet centers;
  std::vector<std::string> warnings;
};

/// Per-label, per-coordinate robust center estimation: for each predicted
/// class the center is the vector of crd_est outputs over the d coordinates.
/// Empty classes get the farthest-point fallback center plus a warning.
ClusterOutput cluster_with_predictor(const PointSet& points,
                                     const LabelAssignment& predicted, std::size_t k,
                                     double alpha, RngStream rng);

struct AlphaSelection {
  double alpha = 0.0;
  CenterSet centers;
  double cost = 0.0;
  std::vector<std::string> warnings;
};

/// Runs cluster_with_predictor for every grid alpha and keeps the centers of
/// minimum k-means cost; ties go to the smaller alpha.
AlphaSelection select_alpha(const PointSet& points, const LabelAssignment& predicted,
                            std::size_t k, const AlphaGrid& grid, RngStream rng);

}  // namespace lakm
