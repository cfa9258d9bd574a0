#ifndef OLOID_RANDOM_HPP
#define OLOID_RANDOM_HPP

// Deterministic, shardable Monte Carlo support.
//
// CounterRng is a counter-based generator: output k of stream s under seed x is
// a fixed hash of (x, s, k), so a shard's draws depend only on (seed, shard).
// sharded_stats splits n samples over a fixed number of shards, runs them
// concurrently and merges the partial statistics in shard order, so the result
// is bitwise reproducible regardless of scheduling.

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <vector>

namespace oloid {

class CounterRng
{
public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)))
  {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + golden * ++counter_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
  static constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z)
  {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Streaming mean and variance of an N-vector (Welford, with Chan's merge).
template <int N>
struct RunningStats
{
  using Vector = Eigen::Matrix<double, N, 1>;

  std::uint64_t count = 0;
  Vector mean = Vector::Zero();
  Vector m2 = Vector::Zero();

  void add(const Vector& x)
  {
    ++count;
    const Vector delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta.cwiseProduct(x - mean);
  }

  void merge(const RunningStats& other)
  {
    if (other.count == 0)
      return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const Vector delta = other.mean - mean;
    mean = (na * mean + nb * other.mean) / n;
    m2 += other.m2 + delta.cwiseProduct(delta) * (na * nb / n);
    count += other.count;
  }

  /// Sample variance (n - 1 denominator).
  Vector variance() const
  {
    return count > 1 ? Vector(m2 / static_cast<double>(count - 1)) : Vector(Vector::Zero());
  }

  Vector standard_error() const
  {
    return count > 0 ? Vector((variance() / static_cast<double>(count)).cwiseSqrt()) : Vector(Vector::Zero());
  }
};

inline constexpr int monte_carlo_shards = 16;

/// Runs sample(rng) n times spread over monte_carlo_shards shards.
template <int N, class Sample>
RunningStats<N> sharded_stats(std::uint64_t n, std::uint64_t seed, const Sample& sample)
{
  std::vector<std::future<RunningStats<N>>> parts;
  parts.reserve(monte_carlo_shards);
  for (int shard = 0; shard < monte_carlo_shards; ++shard) {
    const std::uint64_t quota = n / monte_carlo_shards + (static_cast<std::uint64_t>(shard) < n % monte_carlo_shards);
    parts.push_back(std::async(std::launch::async, [=, &sample] {
      CounterRng rng(seed, static_cast<std::uint64_t>(shard));
      RunningStats<N> stats;
      for (std::uint64_t i = 0; i < quota; ++i)
        stats.add(sample(rng));
      return stats;
    }));
  }
  RunningStats<N> total;
  for (auto& part : parts)
    total.merge(part.get());
  return total;
}

} // namespace oloid

#endif // OLOID_RANDOM_HPP
