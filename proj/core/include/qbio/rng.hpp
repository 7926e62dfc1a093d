#pragma once

#include <cstdint>

namespace qbio {

// Counter-based 64-bit generator. Output k of stream (key) is a pure
// function of (key, k), so trials can be sharded across threads in any
// order and still reproduce bit-identical results for a given seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  // Stateless word function; splitmix64-style finalizer over key and counter.
  static std::uint64_t word(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream for a parallel task; mixing is one-way in both args.
  static CounterRng stream(std::uint64_t seed, std::uint64_t task_index) {
    return CounterRng(word(seed ^ 0x5851f42d4c957f2dULL, task_index));
  }

  std::uint64_t next() { return word(key_, counter_++); }

  double uniform01() {
    // 53 top bits -> [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qbio
