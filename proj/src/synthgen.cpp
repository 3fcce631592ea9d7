#include "lakm/synthgen.hpp"

namespace lakm {

SynthInstance lower_bound_instance(std::size_t k, std::size_t d, double scale) {
  if (k == 0 || d == 0) throw invalid_input("lower_bound_instance: k, d must be positive");
  if (k > d) throw invalid_input("lower_bound_instance: requires k <= d");
  const std::size_t n = k * (d + 1);
  std::vector<double> values(n * d, 0.0);
  LabelAssignment labels(n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < k; ++i) {
    values[row * d + i] = scale;
    labels[row] = static_cast<std::int32_t>(i);
    ++row;
    for (std::size_t j = 0; j < d; ++j) {
      values[row * d + i] = scale;
      values[row * d + j] += 1.0;  // 1000*e_i + e_i = 1001*e_i when j == i
      labels[row] = static_cast<std::int32_t>(i);
      ++row;
    }
  }

  SynthInstance inst;
  inst.points = PointSet::create(n, d, std::move(values));
  inst.labels = std::move(labels);
  inst.optimal_centers = class_centroids(inst.points, inst.labels, k);
  // Per group: d+1 points at offsets {0, e_1, ..., e_d} from scale*e_i, so
  // the about-centroid cost is d - d/(d+1) = d^2/(d+1) per group.
  const double dd = static_cast<double>(d);
  inst.optimal_cost = static_cast<double>(k) * dd * dd / (dd + 1.0);
  return inst;
}

PlantedMixture planted_mixture(std::size_t k, std::size_t d, std::size_t n_per_cluster,
                               double separation, double noise_sigma, RngStream rng) {
  if (k == 0 || d == 0 || n_per_cluster == 0) {
    throw invalid_input("planted_mixture: k, d, n_per_cluster must be positive");
  }
  if (separation <= 0.0) throw invalid_input("planted_mixture: separation must be positive");
  if (noise_sigma < 0.0) throw invalid_input("planted_mixture: negative noise_sigma");

  std::vector<double> center_values(k * d);
  {
    auto eng = rng.derive(0).engine();
    for (double& v : center_values) v = separation * eng.uniform();
  }

  const std::size_t n = k * n_per_cluster;
  std::vector<double> values(n * d);
  LabelAssignment labels(n);
  // One stream per cluster; points within a cluster are sequential.
  parallel_for(k, [&](std::size_t c) {
    auto eng = rng.derive(1 + c).engine();
    const double* mu = center_values.data() + c * d;
    for (std::size_t p = 0; p < n_per_cluster; ++p) {
      const std::size_t row = c * n_per_cluster + p;
      labels[row] = static_cast<std::int32_t>(c);
      double* out = values.data() + row * d;
      for (std::size_t j = 0; j < d; ++j) {
        out[j] = mu[j] + (noise_sigma > 0.0 ? noise_sigma * eng.normal() : 0.0);
      }
    }
  });

  PlantedMixture mix;
  mix.points = PointSet::create(n, d, std::move(values));
  mix.labels = std::move(labels);
  mix.centers = CenterSet::create(k, d, std::move(center_values));
  return mix;
}

}  // namespace lakm
