#pragma once

#include <cstdint>

#include "lakm/core.hpp"

namespace lakm {

enum class CorruptMode { none, uniform, adversarial, deletion };

struct PredictorSpec {
  CorruptMode mode = CorruptMode::none;
  double rate = 0.0;  // lambda in [0, 1]
  std::uint64_t seed = 0;
};

/// Independently corrupts each label with probability `rate`:
///   uniform     -> uniformly random label in [0, k) (possibly unchanged)
///   adversarial -> label of the reference center farthest from the point
///   deletion    -> the unlabeled sentinel
/// `points` and `reference` are required for adversarial mode only.
LabelAssignment corrupt(const LabelAssignment& labels, std::size_t k,
                        const PredictorSpec& spec, const PointSet* points = nullptr,
                        const CenterSet* reference = nullptr);

/// Each query point receives the label of its exact nearest reference point;
/// ties go to the smallest reference index.
LabelAssignment nn_predictor(const PointSet& reference_points,
                             const LabelAssignment& reference_labels,
                             const PointSet& query_points);

/// kmeans++ seeding followed by nearest-center assignment.
LabelAssignment kmeanspp_predictor(const PointSet& points, std::size_t k, RngStream rng);

}  // namespace lakm
