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
#include <utility>

namespace mmkpi {

/// Source of the uncapped combined TX+RX gain figure.
enum class GainModel {
    ArrayProduct, // 10*log10(n_h * n_v), planar-array beamforming gain
    Aperture,     // 10*log10(4*pi*A*f^2/c^2), fixed physical aperture
};

struct AntennaConfig {
    std::int64_t n_h = 1;
    std::int64_t n_v = 1;
    double aperture_area_m2 = 0.1;
    double combined_gain_cap_dbi = 50.0;
    double hpbw_constant_k = 1.0;
    GainModel gain_model = GainModel::ArrayProduct;
};

void validate(const AntennaConfig& config);

/// Smallest power of two >= n_base * (f/f_base)^2, the antenna count that
/// compensates the 20*log10(f) path-loss growth. Throws std::domain_error
/// when f < f_base or n_base is not a power of two >= 1.
std::int64_t required_antenna_count(double f_hz, double f_base_hz, std::int64_t n_base);

/// Splits a power-of-two element count into (n_h, n_v) with n_h >= n_v,
/// both powers of two, n_h * n_v = total.
std::pair<std::int64_t, std::int64_t> balanced_array_split(std::int64_t total);

/// Planar-array gain 10*log10(n_h * n_v).
double beamforming_gain_db(std::int64_t n_h, std::int64_t n_v);

/// Gain of a fixed physical aperture, 10*log10(4*pi*A*f^2/c^2). Rises by
/// 6.02 dB per frequency doubling.
double aperture_gain_dbi(double area_m2, double f_hz);

/// min(uncapped combined TX+RX gain per config.gain_model, cap). Constant
/// at the cap above the crossover frequency.
double capped_combined_gain_dbi(const AntennaConfig& config, double f_hz);

/// Half-power beamwidth k/n of one array plane, radians.
double hpbw_rad(double k, std::int64_t n);

} // namespace mmkpi
