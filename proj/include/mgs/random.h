#pragma once

#include <cstdint>

namespace mgs
{

/// Source of uniformly distributed 64-bit words. Algorithms take it by
/// reference, in the manner of a standard uniform random bit generator.
class RandomSource
{
public:
  using result_type = std::uint64_t;

  virtual ~RandomSource() = default;

  virtual std::uint64_t next() = 0;

  result_type operator()() { return next(); }
  static constexpr result_type min() { return 0u; }
  static constexpr result_type max() { return ~result_type{0}; }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63u) != 0u; }
};

/// SplitMix64: the output is a fixed mixing function of (seed, counter), so
/// streams are reproducible and can be split by index.
class CounterRng final : public RandomSource
{
public:
  explicit CounterRng(std::uint64_t seed = 0u) : _seed(seed) {}

  std::uint64_t next() override;

  /// An independent stream derived from this generator's seed and `stream`.
  CounterRng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return _seed; }

private:
  std::uint64_t _seed;
  std::uint64_t _counter = 0u;
};

std::uint64_t mix64(std::uint64_t x);

} // namespace mgs
