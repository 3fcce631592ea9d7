#include "lakm/predictors.hpp"

#include <limits>

#include "lakm/baselines.hpp"

namespace lakm {

LabelAssignment corrupt(const LabelAssignment& labels, std::size_t k,
                        const PredictorSpec& spec, const PointSet* points,
                        const CenterSet* reference) {
  if (spec.rate < 0.0 || spec.rate > 1.0) throw invalid_input("corrupt: rate out of [0,1]");
  if (spec.mode == CorruptMode::none || spec.rate == 0.0) return labels;
  if (spec.mode == CorruptMode::adversarial) {
    if (points == nullptr || reference == nullptr) {
      throw invalid_input("corrupt: adversarial mode needs points and reference centers");
    }
    if (points->size() != labels.size() || reference->size() != k) {
      throw invalid_input("corrupt: adversarial reference shape mismatch");
    }
  }
  for (std::int32_t l : labels) {
    if (l == kNoLabel) throw invalid_input("corrupt: input has unlabeled entries");
    if (static_cast<std::size_t>(l) >= k) throw invalid_input("corrupt: label >= k");
  }

  RngStream rng{spec.seed, 0};
  LabelAssignment out(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    auto eng = rng.derive(i).engine();
    if (eng.uniform() >= spec.rate) {
      out[i] = labels[i];
      return;
    }
    switch (spec.mode) {
      case CorruptMode::uniform:
        out[i] = static_cast<std::int32_t>(eng.uniform_below(k));
        break;
      case CorruptMode::adversarial: {
        std::size_t worst = 0;
        double worst_d2 = -1.0;
        for (std::size_t c = 0; c < k; ++c) {
          const double d2 = squared_distance(points->row(i), reference->row(c));
          if (d2 > worst_d2) {
            worst_d2 = d2;
            worst = c;
          }
        }
        out[i] = static_cast<std::int32_t>(worst);
        break;
      }
      case CorruptMode::deletion:
        out[i] = kNoLabel;
        break;
      case CorruptMode::none:
        out[i] = labels[i];
        break;
    }
  });
  return out;
}

LabelAssignment nn_predictor(const PointSet& reference_points,
                             const LabelAssignment& reference_labels,
                             const PointSet& query_points) {
  if (reference_points.size() == 0) throw invalid_input("nn_predictor: empty reference");
  if (reference_labels.size() != reference_points.size()) {
    throw invalid_input("nn_predictor: reference label count mismatch");
  }
  if (reference_points.dim() != query_points.dim()) {
    throw invalid_input("nn_predictor: dimension mismatch");
  }
  for (std::int32_t l : reference_labels) {
    if (l == kNoLabel) throw invalid_input("nn_predictor: incomplete reference labels");
  }
  LabelAssignment out(query_points.size());
  parallel_for(query_points.size(), [&](std::size_t q) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < reference_points.size(); ++r) {
      const double d2 = squared_distance(query_points.row(q), reference_points.row(r));
      if (d2 < best_d2) {
        best_d2 = d2;
        best = r;
      }
    }
    out[q] = reference_labels[best];
  });
  return out;
}

LabelAssignment kmeanspp_predictor(const PointSet& points, std::size_t k, RngStream rng) {
  return assign_nearest(points, kmeanspp_seed(points, k, rng));
}

}  // namespace lakm
