#include "lakm/deletion.hpp"

#include <algorithm>

namespace lakm {

DeletionOutput deletion_cluster(const PointSet& points, const LabelAssignment& partial,
                                std::size_t k) {
  if (k == 0 || k > points.size()) throw invalid_input("k out of range");
  if (partial.size() != points.size()) throw invalid_input("label count != point count");
  auto groups = group_by_label(partial, k);

  DeletionOutput out;
  const std::size_t d = points.dim();
  std::vector<double> values;
  for (std::size_t c = 0; c < k; ++c) {
    if (groups[c].empty()) {
      out.warnings.push_back("label " + std::to_string(c) +
                             " lost all points: dropped center");
      continue;
    }
    auto mean = centroid(points, groups[c]);
    values.insert(values.end(), mean.begin(), mean.end());
    out.center_labels.push_back(static_cast<std::int32_t>(c));
  }
  if (out.center_labels.empty()) throw invalid_input("deletion_cluster: all labels deleted");
  out.centers = CenterSet::create(out.center_labels.size(), d, std::move(values));

  out.labels = partial;
  parallel_for(points.size(), [&](std::size_t i) {
    if (partial[i] != kNoLabel) return;
    const std::size_t row = nearest_center(points.row(i), out.centers);
    out.labels[i] = out.center_labels[row];
  });
  return out;
}

}  // namespace lakm
