// SPDX-License-Identifier: Apache-2.0
//
// mmkpi: millimetre-wave 5G KPI assessment toolkit
// Copyright (C) 2026 mmkpi developers
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

#pragma once

#include <cstdint>
#include <random>

namespace mmkpi {

/// SplitMix64-style finalizer combining a seed with a salt. Used to derive
/// independent substream seeds from (master seed, drop, user, purpose)
/// tuples so parallel drop evaluation cannot perturb results.
std::uint64_t mix_seed(std::uint64_t state, std::uint64_t salt);

/// Deterministic random stream. The Gaussian algorithm is pinned (Box-Muller
/// on explicit 53-bit uniforms) instead of std::normal_distribution, whose
/// algorithm the standard leaves unspecified; output therefore depends only
/// on the seed, never on the standard-library implementation.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal draw.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

namespace stream_purpose {
inline constexpr std::uint64_t kPlacement = 1;
inline constexpr std::uint64_t kShadowing = 2;
inline constexpr std::uint64_t kInterference = 3;
} // namespace stream_purpose

/// Substream for a (drop, user, purpose) path under a master seed.
RandomStream substream(std::uint64_t master_seed, std::uint64_t drop,
                       std::uint64_t user, std::uint64_t purpose);

} // namespace mmkpi
