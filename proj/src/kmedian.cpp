#include "lakm/kmedian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lakm {

double median_objective(const PointSet& points, std::span<const std::size_t> subset,
                        std::span<const double> y) {
  Accumulator acc;
  for (std::size_t i : subset) acc.add(distance(points.row(i), y));
  return acc.value();
}

std::vector<double> geometric_median(const PointSet& points,
                                     std::span<const std::size_t> subset, double eps) {
  if (subset.empty()) throw invalid_input("geometric_median: empty subset");
  if (eps <= 0.0) throw invalid_input("geometric_median: eps must be positive");
  const std::size_t d = points.dim();
  if (subset.size() == 1) {
    auto r = points.row(subset[0]);
    return {r.begin(), r.end()};
  }

  std::vector<double> y = centroid(points, subset);
  double f = median_objective(points, subset, y);
  if (f == 0.0) return y;  // all points coincide

  // Collocation threshold relative to the data spread.
  const double tiny = 1e-13 * (1.0 + f / static_cast<double>(subset.size()));

  std::vector<double> numer(d);
  std::vector<double> resid(d);
  double last_dec = 0.0;
  double rho_hat = 0.0;
  int n_ratios = 0;
  const int max_iters = 100000;
  for (int it = 0; it < max_iters; ++it) {
    std::fill(numer.begin(), numer.end(), 0.0);
    std::fill(resid.begin(), resid.end(), 0.0);
    double denom = 0.0;
    std::size_t collocated = 0;
    for (std::size_t i : subset) {
      auto x = points.row(i);
      const double dist_i = distance(x, y);
      if (dist_i <= tiny) {
        ++collocated;
        continue;
      }
      const double w = 1.0 / dist_i;
      denom += w;
      for (std::size_t j = 0; j < d; ++j) {
        numer[j] += w * x[j];
        resid[j] += w * (x[j] - y[j]);
      }
    }
    if (denom == 0.0) break;  // every point collocated with y
    std::vector<double> t(d);
    for (std::size_t j = 0; j < d; ++j) t[j] = numer[j] / denom;
    if (collocated > 0) {
      // Vardi-Zhang step: y is a data point; it is optimal when the
      // subgradient condition ||resid|| <= multiplicity holds.
      double r2 = 0.0;
      for (double v : resid) r2 += v * v;
      const double r_norm = std::sqrt(r2);
      const double eta = static_cast<double>(collocated);
      if (r_norm <= eta) break;
      const double lambda = eta / r_norm;
      for (std::size_t j = 0; j < d; ++j) t[j] = (1.0 - lambda) * t[j] + lambda * y[j];
    }
    y = std::move(t);
    const double f_new = median_objective(points, subset, y);
    if (f_new == 0.0) break;
    // The iteration converges linearly; one step's decrease understates the
    // remaining gap by a factor rho/(1-rho). Estimate rho from successive
    // decreases and stop once the projected gap is inside the tolerance.
    const double dec = f - f_new;
    if (dec <= 0.0) {
      f = f_new;
      break;
    }
    bool done = false;
    if (last_dec > 0.0) {
      // Pessimistic rate estimate: the step ratio climbs toward its
      // asymptotic value, so take the max over every ratio seen and ignore
      // the estimate until a few ratios are in.
      rho_hat = std::max(dec / last_dec, rho_hat);
      ++n_ratios;
      if (n_ratios >= 5 && rho_hat < 1.0) {
        const double remaining = dec * rho_hat / (1.0 - rho_hat);
        done = remaining <= (eps / 4.0) * f_new;
      }
    }
    if (dec < 1e-14 * f_new) done = true;
    last_dec = dec;
    f = f_new;
    if (done) break;
  }

  // Weiszfeld stalls to sublinear convergence when the optimum is a data
  // point. Check the nearest data point's exact optimality condition and
  // prefer it when it wins.
  double best_dist = std::numeric_limits<double>::infinity();
  std::size_t best_i = subset[0];
  for (std::size_t i : subset) {
    const double di = distance(points.row(i), y);
    if (di < best_dist) {
      best_dist = di;
      best_i = i;
    }
  }
  auto cand = points.row(best_i);
  std::fill(resid.begin(), resid.end(), 0.0);
  double mult = 0.0;
  for (std::size_t i : subset) {
    auto x = points.row(i);
    const double di = distance(x, cand);
    if (di == 0.0) {
      mult += 1.0;
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) resid[j] += (x[j] - cand[j]) / di;
  }
  double r2 = 0.0;
  for (double v : resid) r2 += v * v;
  const bool cand_optimal = std::sqrt(r2) <= mult;
  if (cand_optimal || median_objective(points, subset, {cand.begin(), cand.end()}) < f) {
    return {cand.begin(), cand.end()};
  }
  return y;
}

std::vector<double> geometric_median(const PointSet& points, double eps) {
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return geometric_median(points, all, eps);
}

KMedianOutput kmedian_cluster(const PointSet& points, const LabelAssignment& predicted,
                              std::size_t k, double alpha, RngStream rng) {
  if (k == 0 || k > points.size()) throw invalid_input("k out of range");
  if (alpha <= 0.0 || alpha >= 1.0) throw invalid_input("alpha out of (0,1)");
  if (predicted.size() != points.size()) throw invalid_input("label count != point count");
  for (std::int32_t l : predicted) {
    if (l == kNoLabel) throw invalid_input("kmedian_cluster: unlabeled point");
  }
  std::size_t max_label = 0;
  for (std::int32_t l : predicted) max_label = std::max<std::size_t>(max_label, l);
  auto groups = group_by_label(predicted, std::max(k, max_label + 1));

  // Labels ordered by descending frequency, ties to the smaller label.
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (!groups[c].empty()) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (groups[a].size() != groups[b].size()) return groups[a].size() > groups[b].size();
    return a < b;
  });

  KMedianOutput out;
  if (order.size() < k) {
    out.warnings.push_back("only " + std::to_string(order.size()) + " of " +
                           std::to_string(k) + " labels present");
  }
  const double lnka = std::log(static_cast<double>(k) / alpha);
  const std::size_t target =
      static_cast<std::size_t>(std::ceil(lnka * lnka / (alpha * alpha * alpha * alpha)));

  const std::size_t d = points.dim();
  std::vector<double> values;
  for (std::size_t rank = 0; rank < std::min(k, order.size()); ++rank) {
    auto idx = groups[order[rank]];
    const std::size_t take = std::min(idx.size(), std::max<std::size_t>(target, 1));
    if (take < idx.size()) {
      // Uniform sample without replacement: partial Fisher-Yates.
      auto eng = rng.derive(rank).engine();
      for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + eng.uniform_below(idx.size() - i);
        std::swap(idx[i], idx[j]);
      }
      idx.resize(take);
    }
    auto med = geometric_median(points, idx, alpha / 4.0);
    values.insert(values.end(), med.begin(), med.end());
    out.center_labels.push_back(static_cast<std::int32_t>(order[rank]));
  }
  out.centers = CenterSet::create(out.center_labels.size(), d, std::move(values));
  return out;
}

}  // namespace lakm
