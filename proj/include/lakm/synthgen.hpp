#pragma once

#include "lakm/core.hpp"

namespace lakm {

struct SynthInstance {
  PointSet points;
  LabelAssignment labels;  // ground truth, grouped by basis direction
  CenterSet optimal_centers;
  double optimal_cost = 0.0;
};

/// The kmeans++ lower-bound instance: {scale*e_i} union {scale*e_i + e_j}
/// for i in [k], j in [d], sharing one basis. k*(d+1) points, optimal
/// clustering groups by i with per-group centroid centers and closed-form
/// cost k*d^2/(d+1). Deterministic.
SynthInstance lower_bound_instance(std::size_t k = 10, std::size_t d = 1000,
                                   double scale = 1000.0);

struct PlantedMixture {
  PointSet points;
  LabelAssignment labels;
  CenterSet centers;  // planted means
};

/// Gaussian mixture with k centers drawn uniformly in [0, separation]^d and
/// isotropic noise_sigma noise; returns the ground truth.
PlantedMixture planted_mixture(std::size_t k, std::size_t d, std::size_t n_per_cluster,
                               double separation, double noise_sigma, RngStream rng);

}  // namespace lakm
