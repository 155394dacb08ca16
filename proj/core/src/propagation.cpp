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

#include "mmkpi/propagation.hpp"

#include "mmkpi/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace mmkpi {

void validate(const PathLossParams& params)
{
    if (!(params.reference_distance_m > 0.0))
        throw std::invalid_argument("pathloss.reference_distance_m must be > 0");
    if (!(params.exponent_n >= 1.0 && params.exponent_n <= 10.0))
        throw std::invalid_argument("pathloss.exponent_n must be in [1, 10]");
    if (!(params.shadow_sigma_db >= 0.0 && params.shadow_sigma_db <= 20.0))
        throw std::invalid_argument("pathloss.shadow_sigma_db must be in [0, 20]");
    if (params.model == PathLossModel::FreeSpace)
    {
        if (params.exponent_n != 2.0)
            throw std::invalid_argument("pathloss.exponent_n must be 2 for the free_space model");
        if (params.shadow_sigma_db != 0.0)
            throw std::invalid_argument("pathloss.shadow_sigma_db must be 0 for the free_space model");
    }
    if (params.model != PathLossModel::WinnerUrban && params.intercept_offset_db != 0.0)
        throw std::invalid_argument("pathloss.intercept_offset_db is only valid for the winner_urban model");
}

void validate(const O2IParams& params)
{
    if (params.diffraction_loss_db < 0.0)
        throw std::invalid_argument("o2i.diffraction_loss_db must be >= 0");
    if (params.indoor_loss_per_m_db < 0.0)
        throw std::invalid_argument("o2i.indoor_loss_per_m_db must be >= 0");
    if (params.body_loss_db < 0.0)
        throw std::invalid_argument("o2i.body_loss_db must be >= 0");
    if (!(params.depth_min_m >= 0.0))
        throw std::invalid_argument("o2i.depth_min_m must be >= 0");
    if (!(params.depth_min_m < params.depth_max_m))
        throw std::invalid_argument("o2i.depth_min_m must be < o2i.depth_max_m");
}

double fspl_db(double frequency_hz, double distance_m)
{
    if (!(frequency_hz > 0.0))
        throw std::domain_error("fspl_db: frequency must be > 0");
    if (!(distance_m > 0.0))
        throw std::domain_error("fspl_db: distance must be > 0");
    return 20.0 * std::log10(4.0 * kPi * distance_m * frequency_hz / kSpeedOfLightMps);
}

double path_loss_db(const PathLossParams& params, double frequency_hz,
                    double distance_m, double shadow_db)
{
    if (distance_m < params.reference_distance_m)
        throw std::domain_error("path_loss_db: distance below the reference distance");

    switch (params.model)
    {
    case PathLossModel::FreeSpace:
        return fspl_db(frequency_hz, distance_m);
    case PathLossModel::CloseIn:
        return fspl_db(frequency_hz, params.reference_distance_m) +
               10.0 * params.exponent_n * std::log10(distance_m / params.reference_distance_m) +
               shadow_db;
    case PathLossModel::WinnerUrban:
        return fspl_db(frequency_hz, params.reference_distance_m) +
               params.intercept_offset_db +
               10.0 * params.exponent_n * std::log10(distance_m / params.reference_distance_m) +
               shadow_db;
    }
    throw std::domain_error("path_loss_db: unknown model");
}

double o2i_excess_loss_db(const O2IParams& params, double indoor_depth_m)
{
    if (indoor_depth_m < 0.0)
        throw std::domain_error("o2i_excess_loss_db: depth must be >= 0");
    return params.diffraction_loss_db +
           params.indoor_loss_per_m_db * indoor_depth_m +
           params.body_loss_db;
}

double sample_shadowing_db(double sigma_db, RandomStream& stream)
{
    if (sigma_db < 0.0)
        throw std::domain_error("sample_shadowing_db: sigma must be >= 0");
    // One draw regardless of sigma keeps substreams aligned across configs.
    double z = stream.normal();
    return sigma_db == 0.0 ? 0.0 : sigma_db * z;
}

} // namespace mmkpi
