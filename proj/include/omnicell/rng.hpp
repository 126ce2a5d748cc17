// SPDX-License-Identifier: Apache-2.0
//
// omnicell — full-angle ray antenna array and omnicell system simulator
// Copyright (C) 2026 The omnicell contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef omnicell_rng_H
#define omnicell_rng_H

#include <cmath>
#include <cstdint>

#include "omnicell/angles.hpp"

namespace omnicell
{
    // SplitMix64 finalizer. Also used to derive per-user substream seeds.
    inline std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // SplitMix64: counter-based 64-bit generator (Steele, Lea & Flood).
    // Chosen for bit-exact portability of seeded Monte Carlo runs: the state
    // is a plain counter advanced by the golden-ratio increment and each
    // output is one finalizer evaluation, so substreams are cheap and the
    // sequence is identical on every platform.
    class SplitMix64
    {
    public:
        explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

        std::uint64_t next_u64()
        {
            state_ += 0x9E3779B97F4A7C15ULL;
            return mix64(state_);
        }

        // Uniform in [0, 1) with 53 random bits
        double next_double()
        {
            return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

        // Uniform angle in [-pi, pi)
        double angle() { return uniform(-pi, pi); }

        // Zero-mean Laplacian with scale b (standard deviation b*sqrt(2))
        double laplacian(double scale_b)
        {
            double v = next_double() - 0.5;
            double t = 1.0 - 2.0 * std::fabs(v);
            if (t < 1e-300) // u == 0 would take log(0)
                t = 1e-300;
            double mag = -scale_b * std::log(t);
            return v < 0.0 ? -mag : mag;
        }

    private:
        std::uint64_t state_;
    };

    // Independent substream for user k of a seeded run: seed XOR hash(k).
    // hash(k) = mix64(k + 1); the +1 avoids the finalizer's fixed point at 0.
    inline SplitMix64 user_stream(std::uint64_t seed, int user_index)
    {
        return SplitMix64(seed ^ mix64(static_cast<std::uint64_t>(user_index) + 1ULL));
    }
}

#endif
