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

#include "mmkpi/linkbudget.hpp"

#include "mmkpi/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmkpi {

void validate(const CarrierConfig& config)
{
    if (!(config.frequency_hz >= 6e9 && config.frequency_hz <= 100e9))
        throw std::invalid_argument("carrier.frequency_hz must be in [6e9, 100e9]");
    if (!(config.bandwidth_hz > 0.0))
        throw std::invalid_argument("carrier.bandwidth_hz must be > 0");
    if (config.noise_figure_db < 0.0)
        throw std::invalid_argument("carrier.noise_figure_db must be >= 0");
    if (!(config.temperature_k > 0.0))
        throw std::invalid_argument("carrier.temperature_k must be > 0");
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double thermal_noise_dbm(double bandwidth_hz, double temperature_k,
                         double noise_figure_db)
{
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("thermal_noise_dbm: bandwidth must be > 0");
    if (!(temperature_k > 0.0))
        throw std::domain_error("thermal_noise_dbm: temperature must be > 0");
    // 1000 converts W to mW.
    return 10.0 * std::log10(kBoltzmannJPerK * temperature_k * bandwidth_hz * 1000.0) +
           noise_figure_db;
}

double received_signal_dbm(double tx_power_dbm, double combined_gain_db,
                           double path_loss_db)
{
    return tx_power_dbm + combined_gain_db - path_loss_db;
}

double sinr_db(double signal_dbm, double noise_dbm, double interference_dbm)
{
    return signal_dbm -
           linear_to_db(db_to_linear(noise_dbm) + db_to_linear(interference_dbm));
}

double shannon_rate_bps(double bandwidth_hz, double sinr_db, double utilization_rho)
{
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("shannon_rate_bps: bandwidth must be > 0");
    if (!(utilization_rho > 0.0 && utilization_rho <= 1.0))
        throw std::domain_error("shannon_rate_bps: utilization must be in (0, 1]");
    return utilization_rho * bandwidth_hz *
           std::log1p(db_to_linear(sinr_db)) / std::numbers::ln2;
}

} // namespace mmkpi
