#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lakm/common.hpp"

namespace lakm {

/// Sentinel for an unlabeled (deleted) point.
inline constexpr std::int32_t kNoLabel = -1;

/// Per-point cluster labels; entries are in [0, k) or kNoLabel.
using LabelAssignment = std::vector<std::int32_t>;

/// Dense n x d point matrix, row-major. Immutable after construction.
class PointSet {
 public:
  PointSet() = default;

  /// Validates shape and finiteness.
  static PointSet create(std::size_t n, std::size_t d, std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * d_, d_};
  }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * d_ + j]; }

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<double> values_;
};

/// Dense k x d center matrix.
class CenterSet {
 public:
  CenterSet() = default;

  static CenterSet create(std::size_t k, std::size_t d, std::vector<double> values);

  std::size_t size() const { return k_; }
  std::size_t dim() const { return d_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * d_, d_};
  }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t k_ = 0;
  std::size_t d_ = 0;
  std::vector<double> values_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

/// Index of the nearest center to p; ties broken by smallest index.
std::size_t nearest_center(std::span<const double> p, const CenterSet& centers);

/// Sum over points of the squared distance to the nearest center.
double cost_kmeans(const PointSet& points, const CenterSet& centers);

/// Sum over points of the distance to the nearest center.
double cost_kmedian(const PointSet& points, const CenterSet& centers);

LabelAssignment assign_nearest(const PointSet& points, const CenterSet& centers);

/// Coordinate-wise mean of the selected rows. Throws on an empty subset.
std::vector<double> centroid(const PointSet& points, std::span<const std::size_t> subset);

/// Per-class centroids for labels in [0, k). Classes with no points get the
/// farthest-point fallback center and an entry in `warnings`.
CenterSet class_centroids(const PointSet& points, const LabelAssignment& labels,
                          std::size_t k, std::vector<std::string>* warnings = nullptr);

/// Groups point indices by label; throws on a label >= k. Unlabeled points
/// are skipped.
std::vector<std::vector<std::size_t>> group_by_label(const LabelAssignment& labels,
                                                     std::size_t k);

}  // namespace lakm
