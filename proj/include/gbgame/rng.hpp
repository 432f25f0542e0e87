/*
 * Copyright 2026 The gbgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

namespace gbgame {

/**
 * Portable seeded randomness. The engine is std::mt19937_64, whose output
 * sequence is fixed by the C++ standard; the distributions below are
 * written out here (the std ones differ between library vendors), so a
 * seed produces the same instance everywhere.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /** Uniform in [0, bound), bound > 0, by rejection. */
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t reject_under = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t x;
        do x = eng_();
        while (x < reject_under);
        return x % bound;
    }

    /** Uniform double in [0, 1) from the top 53 bits. */
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

} // namespace gbgame
