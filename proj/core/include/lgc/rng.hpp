#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lgc {

// SplitMix64 finalizer. Used as the counter-based mixer for per-vertex
// weights and for deriving independent child seeds.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for stream `stream`, index `index` under a parent seed.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index = 0) noexcept {
  return Mix64(Mix64(seed ^ Mix64(stream)) + index);
}

// Deterministic generator. std::mt19937_64 output is fixed by the standard;
// the distributions in <random> are not, so bounded draws and shuffles are
// done here to keep runs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53 bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lgc
