#pragma once

// Seeded randomness. std::mt19937_64 is fully specified by the standard, and
// bounded draws use our own rejection sampling because the standard
// distributions are implementation-defined. Same seed, same stream, on every
// platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lmds {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi] (inclusive); requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (range == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
    const std::uint64_t bound = range + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound) - 1;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw > limit);
    return lo + static_cast<std::int64_t>(draw % bound);
  }

  bool coin() { return (next() >> 63) != 0; }

  // True with probability num/den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lmds
