// Copyright 2026 The svaforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVAFORGE_RNG_HPP_
#define SVAFORGE_RNG_HPP_

#include <cstdint>
#include <string>

namespace svaforge {

// splitmix64 step (Steele, Lea, Flood 2014). Used both as the PRNG core and
// as the mixing function for derived seeds. We do not use <random>
// distributions anywhere: their output is implementation-defined, and the
// CLI promises byte-identical artifacts for a fixed seed.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent child seed from (seed, index); used for per-sample
// streams so samples are reproducible in isolation.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0x632be59bd9b4e019ULL * (index + 1));
  return splitmix64(s);
}

inline uint64_t hash_bytes(const void* data, size_t len, uint64_t seed = 0x9ae16a3b2f90404fULL) {
  // FNV-1a folded through splitmix64; quality is plenty for n-gram sets and
  // seed derivation, and the function is trivially portable.
  const uint8_t* p = static_cast<const uint8_t*>(data);
  uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

inline uint64_t hash_string(const std::string& s, uint64_t seed = 0x9ae16a3b2f90404fULL) {
  return hash_bytes(s.data(), s.size(), seed);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so nearby seeds do not share their first outputs.
    splitmix64(state_);
    splitmix64(state_);
  }

  uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, n). n must be nonzero.
  uint64_t below(uint64_t n) {
    // Multiply-shift rejection (Lemire 2019): unbiased and deterministic.
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) {
    // 53-bit fixed-point compare keeps the draw exact and portable.
    return next() >> 11 < static_cast<uint64_t>(p * 9007199254740992.0);
  }

 private:
  uint64_t state_;
};

}  // namespace svaforge

#endif  // SVAFORGE_RNG_HPP_
