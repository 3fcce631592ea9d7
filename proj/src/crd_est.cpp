#include "lakm/crd_est.hpp"

#include <algorithm>
#include <cmath>

namespace lakm {

Interval shortest_interval(std::span<const double> sorted_values, std::size_t count) {
  const std::size_t n = sorted_values.size();
  if (count == 0 || count > n) throw invalid_input("shortest_interval: count out of range");
  std::size_t best = 0;
  double best_width = sorted_values[count - 1] - sorted_values[0];
  for (std::size_t i = 1; i + count <= n; ++i) {
    const double w = sorted_values[i + count - 1] - sorted_values[i];
    if (w < best_width) {
      best_width = w;
      best = i;
    }
  }
  return Interval{sorted_values[best], sorted_values[best + count - 1]};
}

namespace detail {

double crd_est_impl(std::vector<double>& values, double alpha, RngStream rng,
                    std::vector<double>& train) {
  if (alpha <= 0.0 || alpha >= 1.0) throw invalid_input("crd_est: alpha out of (0,1)");
  const std::size_t n = values.size();
  if (n == 0) throw invalid_input("crd_est: empty input");
  if (n == 1) return values[0];

  // Uniform random partition: Fisher-Yates on the value array, then split.
  // The training half gets the extra element when n is odd.
  auto eng = rng.engine();
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = eng.uniform_below(i + 1);
    std::swap(values[i], values[j]);
  }
  const std::size_t m1 = (n + 1) / 2;

  train.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m1));
  std::sort(train.begin(), train.end());

  const double frac = 1.0 - 5.0 * alpha;
  std::size_t count = frac > 0.0
                          ? static_cast<std::size_t>(std::ceil(frac * static_cast<double>(m1)))
                          : 1;
  count = std::clamp<std::size_t>(count, 1, m1);
  const Interval interval = shortest_interval(train, count);

  Accumulator acc;
  std::size_t in = 0;
  for (std::size_t i = m1; i < n; ++i) {
    if (interval.contains(values[i])) {
      acc.add(values[i]);
      ++in;
    }
  }
  if (in > 0) return acc.value() / static_cast<double>(in);

  // Test half missed the interval entirely; fall back to the training points
  // inside it, which is never empty (the window itself has `count` points).
  Accumulator tacc;
  std::size_t tin = 0;
  for (double v : train) {
    if (interval.contains(v)) {
      tacc.add(v);
      ++tin;
    }
  }
  if (tin > 0) return tacc.value() / static_cast<double>(tin);
  return compensated_sum(values) / static_cast<double>(n);
}

}  // namespace detail

double crd_est(std::span<const double> values, double alpha, RngStream rng) {
  std::vector<double> copy(values.begin(), values.end());
  std::vector<double> scratch;
  return detail::crd_est_impl(copy, alpha, rng, scratch);
}

}  // namespace lakm
