#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace glosshift {

// SplitMix64 (Steele/Lea/Flood 2014). Small state, full 64-bit output,
// passes BigCrush; deterministic for a given build.
class RngStream {
 public:
  explicit RngStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound); rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform on [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stream for sentence `index` of a run seeded with `seed`. Streams for
// distinct indices are independent, so per-sentence work can run in any
// order (or in parallel) without changing the output.
inline RngStream sentence_stream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
  return RngStream(detail::mix64(a ^ (index + 0xbf58476d1ce4e5b9ULL)));
}

// Sub-stream for field `sub` of instance `index` (dataset instances hold
// several sentences).
inline RngStream sentence_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t sub) {
  const std::uint64_t a = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
  const std::uint64_t b = detail::mix64(a ^ (index + 0xbf58476d1ce4e5b9ULL));
  return RngStream(detail::mix64(b ^ (sub + 0x94d049bb133111ebULL)));
}

// Fisher-Yates shuffle of 0..n-1 over the given stream; every one of the
// n! orderings has probability 1/n!.
inline std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace glosshift
