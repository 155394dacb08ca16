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

#include "mmkpi/strand.hpp"

namespace mmkpi {

/// Weights of the three mobility effects in the closed-form mark. Only the
/// relative values matter; defaults weight beam tracking double.
struct MobilityCoefficients {
    double m_ta = 2.0;
    double m_d = 1.0;
    double m_coh = 1.0;
    double mark_ref = 10.0;
    double f_ref_hz = 6e9;
};

void validate(const MobilityCoefficients& coeffs);

/// (f_max/f_min)^2: how much harder beam tracking gets, via the product of
/// the two half-power beamwidths shrinking as 1/(N_H*N_V).
double tracking_effectiveness_ratio(double f_max_hz, double f_min_hz);

/// f_c * v / c.
double doppler_spread_hz(double f_c_hz, double speed_mps);

/// f_max/f_min: the factor by which coherence time shortens at f_max.
double coherence_time_ratio(double f_max_hz, double f_min_hz);

/// Log-slope contribution of each effect to the combined coefficient.
/// FixedBandwidth keeps all three (tracking counts double for its quadratic
/// frequency dependence); FixedAntennas freezes tracking effectiveness and
/// keeps only Doppler and coherence.
struct SlopeContributions {
    double tracking = 0.0;
    double doppler = 0.0;
    double coherence = 0.0;

    double total() const { return tracking + doppler + coherence; }
};

SlopeContributions slope_contributions(const MobilityCoefficients& coeffs, Strand strand);

/// mark_ref - m_eff * log10(f/f_ref), clamped to [0, 10].
double mobility_mark(double f_hz, const MobilityCoefficients& coeffs, Strand strand);

} // namespace mmkpi
