// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>

namespace cvqe {

/// SplitMix64 finalizer. Bijective 64-bit mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derives a stream key from a master seed and a list of stream identifiers
/// (e.g. {size, sample_index}). Every distinct identifier tuple yields an
/// independent stream, so work items can be evaluated in any order.
inline std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    std::uint64_t k = mix64(seed + kGolden);
    for (std::uint64_t id : ids) {
        k = mix64(k ^ (id + kGolden));
    }
    return k;
}

/// Counter-based generator: output i is mix64(key + (i+1)*golden). Stateless
/// apart from the counter, so streams never overlap and are reproducible
/// independent of evaluation order or platform.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
        return mix64(key_ + (++counter_) * kGolden);
    }

    /// Uniform double in [lo, hi), using the top 53 bits.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cvqe
