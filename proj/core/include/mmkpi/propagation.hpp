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

#include "mmkpi/random.hpp"

namespace mmkpi {

enum class PathLossModel {
    FreeSpace,
    CloseIn,
    WinnerUrban,
};

/// Close-in power-law parameterization: free-space loss at a reference
/// distance plus 10*n*log10(d/d0) plus log-normal shadowing. FreeSpace
/// forces n = 2 with no shadowing; WinnerUrban reuses the close-in shape
/// with its own exponent and an additive intercept offset. Exponents and
/// sigmas are config-supplied per band.
struct PathLossParams {
    PathLossModel model = PathLossModel::CloseIn;
    double exponent_n = 2.0;
    double shadow_sigma_db = 0.0;
    double reference_distance_m = 1.0;
    double intercept_offset_db = 0.0; // WinnerUrban only
};

/// Throws std::invalid_argument naming the offending field.
void validate(const PathLossParams& params);

/// Outdoor-to-indoor excess-loss chain: diffraction + linear-in-depth
/// indoor penetration + body loss.
struct O2IParams {
    double diffraction_loss_db = 0.0;
    double indoor_loss_per_m_db = 0.0;
    double body_loss_db = 0.0;
    double depth_min_m = 0.5;
    double depth_max_m = 10.0;
};

void validate(const O2IParams& params);

/// Friis free-space loss 20*log10(4*pi*d*f/c). Strictly increasing in both
/// arguments; throws std::domain_error on non-positive input.
double fspl_db(double frequency_hz, double distance_m);

/// Path loss for the configured model at distance d >= d0 with the given
/// shadowing realization (already in dB). FreeSpace ignores the shadowing
/// argument. Throws std::domain_error when d < d0.
double path_loss_db(const PathLossParams& params, double frequency_hz,
                    double distance_m, double shadow_db);

/// diffraction + per-metre * depth + body. Throws on negative depth.
double o2i_excess_loss_db(const O2IParams& params, double indoor_depth_m);

/// Zero-mean Gaussian shadowing draw in dB; sigma = 0 returns exactly 0.
double sample_shadowing_db(double sigma_db, RandomStream& stream);

} // namespace mmkpi
