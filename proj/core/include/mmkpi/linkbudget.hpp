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

#include <limits>
#include <optional>

namespace mmkpi {

/// Absent-interference sentinel: contributes exactly zero linear power.
inline constexpr double kNoInterferenceDbm = -std::numeric_limits<double>::infinity();

/// One frequency point of the sweep. When eirp_dbm is set it is used
/// directly as the radiated figure (receive gain 0); otherwise the signal
/// is tx_power_dbm plus the combined beamforming gain.
struct CarrierConfig {
    double frequency_hz = 6e9;
    double bandwidth_hz = 500e6;
    double tx_power_dbm = 30.0;
    std::optional<double> eirp_dbm;
    double noise_figure_db = 0.0;
    double temperature_k = 290.0;
};

void validate(const CarrierConfig& config);

/// One user's computed link. path_loss_db holds the model loss including
/// any outdoor-to-indoor excess but excluding shadowing, which is kept in
/// shadow_db; gain_db is the combined gain actually applied to the signal.
struct LinkSample {
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    double shadow_db = 0.0;
    double gain_db = 0.0;
    double signal_dbm = 0.0;
    double noise_dbm = 0.0;
    double interference_dbm = kNoInterferenceDbm;
    double sinr_db = 0.0;
    double rate_bps = 0.0;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// kTB noise floor in dBm plus noise figure (k = 1.380649e-23 J/K).
double thermal_noise_dbm(double bandwidth_hz, double temperature_k,
                         double noise_figure_db);

/// P + G - PL, all log-domain.
double received_signal_dbm(double tx_power_dbm, double combined_gain_db,
                           double path_loss_db);

/// S - 10*log10(10^(N/10) + 10^(I/10)). With the -inf sentinel the
/// interference term vanishes and this reduces exactly to S - N.
double sinr_db(double signal_dbm, double noise_dbm,
               double interference_dbm = kNoInterferenceDbm);

/// rho * B * log2(1 + 10^(sinr/10)). rho = 1 is the plain Shannon rate.
double shannon_rate_bps(double bandwidth_hz, double sinr_db,
                        double utilization_rho = 1.0);

} // namespace mmkpi
