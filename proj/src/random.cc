#include "mgs/random.h"

namespace mgs
{

std::uint64_t mix64(std::uint64_t x)
{
  x ^= x >> 30u;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27u;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31u;
  return x;
}

std::uint64_t RandomSource::below(std::uint64_t bound)
{
  // reject the low (2^64 mod bound) values so every residue is equally likely
  std::uint64_t const threshold = (0u - bound) % bound;
  for (;;) {
    std::uint64_t const x = next();
    if (x >= threshold)
      return x % bound;
  }
}

std::uint64_t CounterRng::next()
{
  ++_counter;
  return mix64(_seed + _counter * 0x9e3779b97f4a7c15ull);
}

CounterRng CounterRng::split(std::uint64_t stream) const
{
  return CounterRng(mix64(_seed ^ mix64(stream + 0x632be59bd9b4e019ull)));
}

} // namespace mgs
