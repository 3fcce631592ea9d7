#pragma once

#include <string>
#include <vector>

#include "lakm/core.hpp"

namespace lakm {

/// (1+eps)-approximate geometric median by damped Weiszfeld iteration with
/// the Vardi-Zhang fix at data points. Deterministic.
std::vector<double> geometric_median(const PointSet& points, double eps);
std::vector<double> geometric_median(const PointSet& points,
                                     std::span<const std::size_t> subset, double eps);

/// Sum of distances from the selected rows to y.
double median_objective(const PointSet& points, std::span<const std::size_t> subset,
                        std::span<const double> y);

struct KMedianOutput {
  CenterSet centers;
  /// Original label for each center row (labels ordered most-common first).
  std::vector<std::int32_t> center_labels;
  std::vector<std::string> warnings;
};

/// Learning-augmented k-median: for the k most common predicted labels
/// (descending frequency, ties to the smaller label), sample
/// min(class size, ceil(1/alpha^4 ln^2(k/alpha))) class points uniformly
/// without replacement and return the (1+alpha/4)-approximate geometric
/// median of the sample in the original coordinates.
KMedianOutput kmedian_cluster(const PointSet& points, const LabelAssignment& predicted,
                              std::size_t k, double alpha, RngStream rng);

}  // namespace lakm
