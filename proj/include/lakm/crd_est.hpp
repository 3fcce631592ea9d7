#pragma once

#include <span>
#include <vector>

#include "lakm/common.hpp"

namespace lakm {

struct Interval {
  double a = 0.0;
  double b = 0.0;
  double width() const { return b - a; }
  bool contains(double x) const { return x >= a && x <= b; }
};

/// Shortest window of `count` consecutive elements of an ascending-sorted
/// list; among equal-width windows the leftmost wins. One pass.
Interval shortest_interval(std::span<const double> sorted_values, std::size_t count);

/// One-dimensional robust center estimate: randomly halve the values, take
/// the shortest interval holding a (1-5*alpha) fraction of the training
/// half, and average the test half restricted to that interval.
///
/// Degenerate fallbacks (tiny inputs, empty test intersection) keep the
/// output inside [min(values), max(values)].
double crd_est(std::span<const double> values, double alpha, RngStream rng);

namespace detail {

/// Scratch-buffer variant for hot loops; `values` is consumed.
double crd_est_impl(std::vector<double>& values, double alpha, RngStream rng,
                    std::vector<double>& train_scratch);

}  // namespace detail

}  // namespace lakm
