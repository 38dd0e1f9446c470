// Copyright 2026-present the srnav project
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

#include <cmath>
#include <cstdint>

// Self-contained seeded RNG (splitmix64 seeding, xoshiro256++ core,
// Box-Muller normals). std::normal_distribution and friends are
// implementation-defined, so results would not reproduce across standard
// libraries; bit-reproducibility from (config, seed) is a hard requirement
// here. Every consumer derives an independent stream with Rng::derive so
// results do not depend on scheduling or worker count.
namespace srnav {

namespace rngdetail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}
}  // namespace rngdetail

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = rngdetail::splitmix64(sm);
    }

    // Mixes stream identifiers into a base seed; used to give every trial,
    // frame, and module an independent deterministic stream.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t s0,
                                std::uint64_t s1 = 0, std::uint64_t s2 = 0) {
        std::uint64_t sm = base;
        std::uint64_t h = rngdetail::splitmix64(sm);
        sm = h ^ (s0 + 0x9e3779b97f4a7c15ULL);
        h = rngdetail::splitmix64(sm);
        sm = h ^ (s1 + 0xbf58476d1ce4e5b9ULL);
        h = rngdetail::splitmix64(sm);
        sm = h ^ (s2 + 0x94d049bb133111ebULL);
        return rngdetail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        using rngdetail::rotl;
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; generates pairs and caches the spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        // log(0) guard; probability 2^-53 but determinism must not hinge on UB.
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace srnav
