#include "lakm/fast_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lakm/learned_kmeans.hpp"

namespace lakm {

void Projection::apply(std::span<const double> x, std::span<double> y) const {
  if (identity_) {
    std::copy(x.begin(), x.end(), y.begin());
    return;
  }
  for (std::size_t r = 0; r < out_dim_; ++r) {
    const double* row = matrix_.data() + r * in_dim_;
    double s = 0.0;
    for (std::size_t j = 0; j < in_dim_; ++j) s += row[j] * x[j];
    y[r] = s;
  }
}

std::vector<double> Projection::apply(std::span<const double> x) const {
  std::vector<double> y(out_dim_);
  apply(x, y);
  return y;
}

Projection Projection::identity(std::size_t d) {
  Projection p;
  p.in_dim_ = d;
  p.out_dim_ = d;
  p.identity_ = true;
  return p;
}

Projection build_projection(std::size_t d, std::size_t target_dim, RngStream rng) {
  if (target_dim == 0) throw invalid_input("build_projection: target_dim must be >= 1");
  if (target_dim >= d) return Projection::identity(d);
  Projection p;
  p.in_dim_ = d;
  p.out_dim_ = target_dim;
  p.identity_ = false;
  p.matrix_.resize(target_dim * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim));
  // One stream per output row so rows can be filled in parallel.
  parallel_for(target_dim, [&](std::size_t r) {
    auto eng = rng.derive(r).engine();
    double* row = p.matrix_.data() + r * d;
    for (std::size_t j = 0; j < d; ++j) row[j] = scale * eng.normal();
  });
  return p;
}

std::size_t jl_target_dim(std::size_t n, double eps) {
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<std::size_t>(std::ceil(8.0 / (eps * eps) * ln));
}

AnnIndex ann_build(const CenterSet& projected_centers) {
  return AnnIndex{projected_centers, 2.0};
}

std::optional<std::size_t> ann_query(const AnnIndex& index, std::span<const double> q,
                                     double r) {
  if (r <= 0.0) throw invalid_input("ann_query: r must be positive");
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < index.centers.size(); ++c) {
    const double d2 = squared_distance(q, index.centers.row(c));
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  if (best_d2 <= index.c * r * index.c * r) return best;
  return std::nullopt;
}

std::vector<std::size_t> sample_by_class(const PointSet& points,
                                         const LabelAssignment& predicted, std::size_t k,
                                         double alpha, RngStream rng) {
  if (predicted.size() != points.size()) throw invalid_input("label count != point count");
  if (alpha <= 0.0) throw invalid_input("sample_by_class: alpha must be positive");
  std::vector<std::size_t> class_size(k, 0);
  for (std::int32_t l : predicted) {
    if (l == kNoLabel || static_cast<std::size_t>(l) >= k) {
      throw invalid_input("sample_by_class: bad label");
    }
    ++class_size[static_cast<std::size_t>(l)];
  }
  const double numer = 100.0 * std::log(static_cast<double>(std::max<std::size_t>(k, 2)));
  std::vector<std::size_t> sample;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double sz = static_cast<double>(class_size[static_cast<std::size_t>(predicted[i])]);
    const double p = std::min(1.0, numer / (alpha * sz));
    auto eng = rng.derive(i).engine();
    if (eng.uniform() < p) sample.push_back(i);
  }
  return sample;
}

namespace {

constexpr double kDistortion = 1.25;  // 5/4 per-map contract

PointSet subset_points(const PointSet& points, const std::vector<std::size_t>& idx) {
  std::vector<double> values;
  values.reserve(idx.size() * points.dim());
  for (std::size_t i : idx) {
    auto row = points.row(i);
    values.insert(values.end(), row.begin(), row.end());
  }
  return PointSet::create(idx.size(), points.dim(), std::move(values));
}

CenterSet project_centers(const Projection& phi, const CenterSet& centers) {
  std::vector<double> values(centers.size() * phi.out_dim());
  for (std::size_t c = 0; c < centers.size(); ++c) {
    phi.apply(centers.row(c), {values.data() + c * phi.out_dim(), phi.out_dim()});
  }
  return CenterSet::create(centers.size(), phi.out_dim(), std::move(values));
}

/// Checks the composed map against the per-stage 5/4 contract on every
/// (sampled point, center) pair; pairs at distance 0 are skipped.
bool validate_distortion(const PointSet& sampled, const CenterSet& centers,
                         const Projection& phi2, const Projection& phi1, double bound) {
  std::vector<double> mid(phi2.out_dim());
  std::vector<double> out(phi1.out_dim());
  std::vector<std::vector<double>> proj_centers(centers.size());
  for (std::size_t c = 0; c < centers.size(); ++c) {
    std::vector<double> cm(phi2.out_dim());
    phi2.apply(centers.row(c), cm);
    proj_centers[c].resize(phi1.out_dim());
    phi1.apply(cm, proj_centers[c]);
  }
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    phi2.apply(sampled.row(i), mid);
    phi1.apply(mid, out);
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double orig = distance(sampled.row(i), centers.row(c));
      if (orig == 0.0) continue;
      const double proj = distance(out, proj_centers[c]);
      if (proj > bound * orig || proj < orig / bound) return false;
    }
  }
  return true;
}

}  // namespace

FastClusterOutput fast_cluster(const PointSet& points, const LabelAssignment& predicted,
                               std::size_t k, double alpha, RngStream rng) {
  const std::size_t n = points.size();
  const std::size_t d = points.dim();

  auto sample_idx = sample_by_class(points, predicted, k, alpha, rng.derive(0));
  FastClusterOutput out;
  if (sample_idx.empty()) {
    // Degenerate at tiny alpha*n; fall back to the full set.
    sample_idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) sample_idx[i] = i;
    out.warnings.push_back("empty sample: fell back to full point set");
  }
  PointSet sampled = subset_points(points, sample_idx);
  LabelAssignment sampled_labels(sample_idx.size());
  for (std::size_t i = 0; i < sample_idx.size(); ++i) {
    sampled_labels[i] = predicted[sample_idx[i]];
  }

  auto est = cluster_with_predictor(sampled, sampled_labels, k, alpha, rng.derive(1));
  out.warnings.insert(out.warnings.end(), est.warnings.begin(), est.warnings.end());
  const CenterSet& centers = est.centers;

  // phi2: data-oblivious JL at distortion 5/4; phi1: stand-in for a terminal
  // reduction toward O(log k) dims, validated on the sample and dropped to
  // identity when the 5/4 contract fails empirically.
  const double eps = 1.0 / 4.0;
  Projection phi2 = build_projection(d, jl_target_dim(n, eps), rng.derive(2));
  Projection phi1 =
      build_projection(phi2.out_dim(), jl_target_dim(std::max<std::size_t>(k, 2), eps),
                       rng.derive(3));
  if (!phi1.is_identity() &&
      !validate_distortion(sampled, centers, phi2, phi1, kDistortion * kDistortion)) {
    phi1 = Projection::identity(phi2.out_dim());
    out.warnings.push_back("terminal reduction failed 5/4 validation: identity fallback");
  }
  if (!phi2.is_identity() &&
      !validate_distortion(sampled, centers, phi2, phi1,
                           kDistortion * (phi1.is_identity() ? 1.0 : kDistortion))) {
    phi2 = Projection::identity(d);
    phi1 = Projection::identity(d);
    out.warnings.push_back("JL map failed 5/4 validation: identity fallback");
  }

  AnnIndex ann = ann_build(project_centers(phi1, project_centers(phi2, centers)));
  // Worst-case shrink of the composed map on a true distance-r pair.
  const double radius_scale =
      (phi1.is_identity() ? 1.0 : kDistortion) * (phi2.is_identity() ? 1.0 : kDistortion);

  out.labels.assign(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const auto x = points.row(i);
    const auto ell = static_cast<std::size_t>(predicted[i]);
    const double rho = distance(x, centers.row(ell));
    if (rho == 0.0) {
      out.labels[i] = predicted[i];
      return;
    }
    thread_local std::vector<double> mid, proj;
    mid.resize(phi2.out_dim());
    proj.resize(phi1.out_dim());
    phi2.apply(x, mid);
    phi1.apply(mid, proj);
    auto hit = ann_query(ann, proj, radius_scale * rho / 2.0);
    std::size_t label = ell;
    if (hit && *hit != ell) {
      // Acceptance test in the original space, exactly d(x,C_p) < 2 d(x,C_l).
      if (distance(x, centers.row(*hit)) < 2.0 * rho) label = *hit;
    }
    out.labels[i] = static_cast<std::int32_t>(label);
  });

  out.centers = centers;
  return out;
}

}  // namespace lakm
