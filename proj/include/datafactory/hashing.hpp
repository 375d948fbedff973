#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace datafactory {

struct Hash128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool operator==(const Hash128&) const = default;
  auto operator<=>(const Hash128&) const = default;
  std::string hex() const;
};

// MurmurHash3 x64_128 (Austin Appleby, public domain).
Hash128 murmur3_128(std::string_view data, std::uint64_t seed = 0);

inline std::uint64_t hash64(std::string_view data, std::uint64_t seed = 0) {
  return murmur3_128(data, seed).lo;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives an independent seed for a named sub-stream (per document, per
// partition).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view key) {
  return splitmix64(seed ^ hash64(key, 0x5EED));
}

// Deterministic Fisher-Yates driven by a counter-mode SplitMix64 stream, so
// the order does not depend on the standard library's distributions.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  std::uint64_t step = 0;
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto r = splitmix64(seed + 0x9E3779B97F4A7C15ULL * step++);
    std::swap(v[i - 1], v[static_cast<std::size_t>(r % i)]);
  }
}

}  // namespace datafactory
