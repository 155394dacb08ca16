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

#include "mmkpi/antenna.hpp"

#include "mmkpi/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmkpi {

namespace {

bool is_power_of_two(std::int64_t n)
{
    return n >= 1 && (n & (n - 1)) == 0;
}

} // namespace

void validate(const AntennaConfig& config)
{
    if (config.n_h < 1)
        throw std::invalid_argument("antenna.n_h must be >= 1");
    if (config.n_v < 1)
        throw std::invalid_argument("antenna.n_v must be >= 1");
    if (!(config.aperture_area_m2 > 0.0))
        throw std::invalid_argument("antenna.aperture_area_m2 must be > 0");
    if (!(config.combined_gain_cap_dbi > 0.0))
        throw std::invalid_argument("antenna.combined_gain_cap_dbi must be > 0");
    if (!(config.hpbw_constant_k > 0.0))
        throw std::invalid_argument("antenna.hpbw_constant_k must be > 0");
}

std::int64_t required_antenna_count(double f_hz, double f_base_hz, std::int64_t n_base)
{
    if (!(f_base_hz > 0.0))
        throw std::domain_error("required_antenna_count: base frequency must be > 0");
    if (f_hz < f_base_hz)
        throw std::domain_error("required_antenna_count: frequency below the base frequency");
    if (!is_power_of_two(n_base))
        throw std::domain_error("required_antenna_count: base count must be a power of two >= 1");

    double ratio = f_hz / f_base_hz;
    double need = static_cast<double>(n_base) * ratio * ratio;
    if (need > 0x1p62)
        throw std::domain_error("required_antenna_count: count overflow");

    std::int64_t count = n_base;
    // Relative tolerance keeps exact powers of two (f = 2*f_base) from
    // being bumped a step by floating-point noise.
    while (static_cast<double>(count) < need * (1.0 - 1e-9))
        count *= 2;
    return count;
}

std::pair<std::int64_t, std::int64_t> balanced_array_split(std::int64_t total)
{
    if (!is_power_of_two(total))
        throw std::domain_error("balanced_array_split: total must be a power of two >= 1");
    int log2n = 0;
    while ((std::int64_t{1} << log2n) < total)
        ++log2n;
    std::int64_t n_h = std::int64_t{1} << ((log2n + 1) / 2);
    return {n_h, total / n_h};
}

double beamforming_gain_db(std::int64_t n_h, std::int64_t n_v)
{
    if (n_h < 1 || n_v < 1)
        throw std::domain_error("beamforming_gain_db: counts must be >= 1");
    return 10.0 * std::log10(static_cast<double>(n_h) * static_cast<double>(n_v));
}

double aperture_gain_dbi(double area_m2, double f_hz)
{
    if (!(area_m2 > 0.0))
        throw std::domain_error("aperture_gain_dbi: area must be > 0");
    if (!(f_hz > 0.0))
        throw std::domain_error("aperture_gain_dbi: frequency must be > 0");
    double ratio = f_hz / kSpeedOfLightMps;
    return 10.0 * std::log10(4.0 * kPi * area_m2 * ratio * ratio);
}

double capped_combined_gain_dbi(const AntennaConfig& config, double f_hz)
{
    double uncapped = config.gain_model == GainModel::Aperture
                          ? aperture_gain_dbi(config.aperture_area_m2, f_hz)
                          : beamforming_gain_db(config.n_h, config.n_v);
    return std::min(uncapped, config.combined_gain_cap_dbi);
}

double hpbw_rad(double k, std::int64_t n)
{
    if (!(k > 0.0))
        throw std::domain_error("hpbw_rad: k must be > 0");
    if (n < 1)
        throw std::domain_error("hpbw_rad: n must be >= 1");
    return k / static_cast<double>(n);
}

} // namespace mmkpi
