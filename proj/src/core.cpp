#include "lakm/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lakm {

namespace {

void check_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw invalid_input(std::string(what) + ": non-finite entry");
  }
}

void check_dims(const PointSet& points, const CenterSet& centers) {
  if (centers.size() == 0) throw invalid_input("empty center set");
  if (points.dim() != centers.dim()) {
    throw invalid_input("dimension mismatch between points and centers");
  }
}

}  // namespace

PointSet PointSet::create(std::size_t n, std::size_t d, std::vector<double> values) {
  if (n == 0 || d == 0) throw invalid_input("PointSet: n and d must be positive");
  if (values.size() != n * d) throw invalid_input("PointSet: value count != n*d");
  check_finite(values, "PointSet");
  PointSet p;
  p.n_ = n;
  p.d_ = d;
  p.values_ = std::move(values);
  return p;
}

CenterSet CenterSet::create(std::size_t k, std::size_t d, std::vector<double> values) {
  if (k == 0 || d == 0) throw invalid_input("CenterSet: k and d must be positive");
  if (values.size() != k * d) throw invalid_input("CenterSet: value count != k*d");
  check_finite(values, "CenterSet");
  CenterSet c;
  c.k_ = k;
  c.d_ = d;
  c.values_ = std::move(values);
  return c;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    s += diff * diff;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

std::size_t nearest_center(std::span<const double> p, const CenterSet& centers) {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double d2 = squared_distance(p, centers.row(c));
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

namespace {

double min_sqdist(std::span<const double> p, const CenterSet& centers) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.size(); ++c) {
    best = std::min(best, squared_distance(p, centers.row(c)));
  }
  return best;
}

}  // namespace

double cost_kmeans(const PointSet& points, const CenterSet& centers) {
  check_dims(points, centers);
  return blocked_sum(points.size(),
                     [&](std::size_t i) { return min_sqdist(points.row(i), centers); });
}

double cost_kmedian(const PointSet& points, const CenterSet& centers) {
  check_dims(points, centers);
  return blocked_sum(points.size(), [&](std::size_t i) {
    return std::sqrt(min_sqdist(points.row(i), centers));
  });
}

LabelAssignment assign_nearest(const PointSet& points, const CenterSet& centers) {
  check_dims(points, centers);
  LabelAssignment labels(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    labels[i] = static_cast<std::int32_t>(nearest_center(points.row(i), centers));
  });
  return labels;
}

std::vector<double> centroid(const PointSet& points, std::span<const std::size_t> subset) {
  if (subset.empty()) throw invalid_input("centroid: empty subset");
  const std::size_t d = points.dim();
  std::vector<double> mean(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    Accumulator acc;
    for (std::size_t i : subset) {
      if (i >= points.size()) throw invalid_input("centroid: index out of range");
      acc.add(points.at(i, j));
    }
    mean[j] = acc.value() / static_cast<double>(subset.size());
  }
  return mean;
}

std::vector<std::vector<std::size_t>> group_by_label(const LabelAssignment& labels,
                                                     std::size_t k) {
  std::vector<std::vector<std::size_t>> groups(k);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::int32_t l = labels[i];
    if (l == kNoLabel) continue;
    if (l < 0 || static_cast<std::size_t>(l) >= k) {
      throw invalid_input("label out of range [0, k)");
    }
    groups[static_cast<std::size_t>(l)].push_back(i);
  }
  return groups;
}

CenterSet class_centroids(const PointSet& points, const LabelAssignment& labels,
                          std::size_t k, std::vector<std::string>* warnings) {
  if (labels.size() != points.size()) {
    throw invalid_input("label count != point count");
  }
  auto groups = group_by_label(labels, k);
  const std::size_t d = points.dim();
  std::vector<double> values(k * d, 0.0);
  std::vector<std::size_t> empty_classes;
  for (std::size_t c = 0; c < k; ++c) {
    if (groups[c].empty()) {
      empty_classes.push_back(c);
      continue;
    }
    auto mean = centroid(points, groups[c]);
    std::copy(mean.begin(), mean.end(), values.begin() + c * d);
  }
  if (!empty_classes.empty()) {
    // Fallback: farthest point from the centers computed so far.
    std::vector<std::span<const double>> placed;
    for (std::size_t c = 0; c < k; ++c) {
      if (!groups[c].empty()) placed.emplace_back(values.data() + c * d, d);
    }
    for (std::size_t c : empty_classes) {
      std::size_t far_idx = 0;
      double far_d2 = -1.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        double near = std::numeric_limits<double>::infinity();
        for (auto& ctr : placed) near = std::min(near, squared_distance(points.row(i), ctr));
        if (placed.empty()) near = 0.0;
        if (near > far_d2) {
          far_d2 = near;
          far_idx = i;
        }
      }
      auto src = points.row(far_idx);
      std::copy(src.begin(), src.end(), values.begin() + c * d);
      placed.emplace_back(values.data() + c * d, d);
      if (warnings) {
        warnings->push_back("empty class " + std::to_string(c) +
                            ": fallback farthest-point center");
      }
    }
  }
  return CenterSet::create(k, d, std::move(values));
}

}  // namespace lakm
