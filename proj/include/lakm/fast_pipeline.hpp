#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lakm/core.hpp"

namespace lakm {

/// Seeded Gaussian random projection; identity when the target dimension
/// reaches the input dimension.
class Projection {
 public:
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  bool is_identity() const { return identity_; }

  /// y = Mx; O(in_dim * out_dim) per vector.
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  static Projection identity(std::size_t d);
  friend Projection build_projection(std::size_t d, std::size_t target_dim, RngStream rng);

 private:
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
  bool identity_ = true;
  std::vector<double> matrix_;  // out_dim x in_dim, row-major
};

/// Rows i.i.d. N(0, 1/target_dim); target_dim >= d degenerates to identity.
Projection build_projection(std::size_t d, std::size_t target_dim, RngStream rng);

/// JL target dimension for distortion 1+eps at scale n: ceil(8/eps^2 * ln n).
std::size_t jl_target_dim(std::size_t n, double eps);

/// (c,r)-approximate nearest neighbor structure over the k projected
/// centers. At this scale the search is an exact scan, which satisfies any
/// (c,r) contract.
struct AnnIndex {
  CenterSet centers;
  double c = 2.0;
};

AnnIndex ann_build(const CenterSet& projected_centers);

/// Returns a center within c*r of q when one exists within r; may return a
/// center at distance up to c*r, or nothing when no center is within r.
std::optional<std::size_t> ann_query(const AnnIndex& index, std::span<const double> q,
                                     double r);

/// Keeps each point independently with probability
/// min(1, 100 ln(max(k,2)) / (alpha * |class|)).
std::vector<std::size_t> sample_by_class(const PointSet& points,
                                         const LabelAssignment& predicted, std::size_t k,
                                         double alpha, RngStream rng);

struct FastClusterOutput {
  CenterSet centers;
  LabelAssignment labels;
  std::vector<std::string> warnings;
};

/// Subsample by predicted-class size, estimate centers on the sample, then
/// label every point through the projected ANN with the factor-2 original-
/// space acceptance rule.
FastClusterOutput fast_cluster(const PointSet& points, const LabelAssignment& predicted,
                               std::size_t k, double alpha, RngStream rng);

}  // namespace lakm
