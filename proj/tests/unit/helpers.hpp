#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "lakm/core.hpp"

namespace testutil {

inline lakm::PointSet make_points(std::size_t d, std::vector<double> values) {
  const std::size_t n = values.size() / d;
  return lakm::PointSet::create(n, d, std::move(values));
}

inline lakm::CenterSet make_centers(std::size_t d, std::vector<double> values) {
  const std::size_t k = values.size() / d;
  return lakm::CenterSet::create(k, d, std::move(values));
}

/// Reference k-means cost: plain double loop, no blocking or compensation.
inline double naive_cost_kmeans(const lakm::PointSet& points,
                                const lakm::CenterSet& centers) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < points.dim(); ++j) {
        const double diff = points.at(i, j) - centers.row(c)[j];
        d2 += diff * diff;
      }
      best = std::min(best, d2);
    }
    total += best;
  }
  return total;
}

/// Cost of a partition: per-part exact centroids, then summed squared error.
inline double partition_cost(const lakm::PointSet& points,
                             const lakm::LabelAssignment& labels, std::size_t k) {
  const std::size_t d = points.dim();
  std::vector<double> sums(k * d, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto lab = static_cast<std::size_t>(labels[i]);
    for (std::size_t j = 0; j < d; ++j) sums[lab * d + j] += points.at(i, j);
    ++counts[lab];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) sums[c * d + j] /= double(counts[c]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto lab = static_cast<std::size_t>(labels[i]);
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = points.at(i, j) - sums[lab * d + j];
      total += diff * diff;
    }
  }
  return total;
}

}  // namespace testutil
