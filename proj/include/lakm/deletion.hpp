#pragma once

#include <string>
#include <vector>

#include "lakm/core.hpp"

namespace lakm {

struct DeletionOutput {
  /// One row per surviving label, in ascending label order.
  CenterSet centers;
  /// Original label id for each center row (identity when none vanished).
  std::vector<std::int32_t> center_labels;
  /// Input labels with every unlabeled entry filled by the nearest center's
  /// original label; pre-labeled entries are untouched.
  LabelAssignment labels;
  std::vector<std::string> warnings;
};

/// Deletion-predictor clustering: per-label exact means over the surviving
/// labeled points, then nearest-center assignment of every unlabeled point.
/// Labels that lost all points are dropped (k' < k centers, with a warning);
/// an entirely unlabeled input is an error. Deterministic, O(kdn).
DeletionOutput deletion_cluster(const PointSet& points, const LabelAssignment& partial,
                                std::size_t k);

}  // namespace lakm
