#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lakm {

/// Error thrown for invalid arguments (dimension mismatches, bad ranges).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** engine; satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Lemire's unbiased rejection method.
  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t x = (*this)();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = (*this)();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Standard normal via the polar (Marsaglia) method.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Seeded randomness handle. Identical (seed, stream) gives an identical
/// sequence regardless of where or when the engine is instantiated, so
/// parallel callers derive one stream per independent task.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngStream derive(std::uint64_t substream) const {
    std::uint64_t s = stream ^ 0x2545f4914f6cdd1dULL;
    std::uint64_t mixed = splitmix64(s) ^ (substream * 0x9e3779b97f4a7c15ULL);
    return RngStream{seed, splitmix64(mixed)};
  }

  Xoshiro256 engine() const {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream + 0x6a09e667f3bcc909ULL;
    return Xoshiro256(a ^ splitmix64(s));
  }
};

int max_threads();
void set_max_threads(int n);

/// Runs fn(i) for i in [0, count). Work is split across up to max_threads()
/// workers; each index is processed exactly once and the mapping from index
/// to output must not depend on scheduling, so results are identical for any
/// thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Neumaier compensated accumulator.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> values);

/// Block size for deterministic parallel reductions; fixed so that the
/// reduction tree does not depend on the number of threads.
inline constexpr std::size_t kReductionBlock = 4096;

/// Sum of per-index terms, computed blockwise: block partials may be filled
/// in parallel, then combined in block order with compensated addition.
double blocked_sum(std::size_t count, const std::function<double(std::size_t)>& term);

}  // namespace lakm
