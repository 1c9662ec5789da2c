/*
 * Copyright 2026 The ParityForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARITYFORGE_RNG_H
#define PARITYFORGE_RNG_H

#include <cstdint>
#include <span>
#include <utility>

namespace parityforge {

__extension__ typedef unsigned __int128 Uint128;

/// Counter-based generator: output k is splitmix64(seed + k * golden gamma).
///
/// Every draw is a pure function of (seed, counter), and bounded integers
/// use Lemire's multiply-and-reject method instead of a standard library
/// distribution, so streams are identical across platforms and compilers.
class CounterRng {
   public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        ++counter_;
        return mix(seed_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) {
        Uint128 product = static_cast<Uint128>(next()) * bound;
        uint64_t low = static_cast<uint64_t>(product);
        if (low < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<Uint128>(next()) * bound;
                low = static_cast<uint64_t>(product);
            }
        }
        return static_cast<uint64_t>(product >> 64);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Fisher-Yates.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Independent stream derived from this seed.
    CounterRng split(uint64_t stream) const {
        return CounterRng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL)));
    }

   private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace parityforge

#endif  // PARITYFORGE_RNG_H
