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

#include "mmkpi/antenna.hpp"
#include "mmkpi/linkbudget.hpp"
#include "mmkpi/propagation.hpp"
#include "mmkpi/strand.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mmkpi {

enum class UserPlacement {
    CellEdgeAnnulus, // outer annulus of the centre cell
    IndoorBorder,    // at the cell border, with an indoor penetration depth
    UniformArea,     // uniform over the centre cell disc
};

enum class InterferenceMode {
    Full, // power sum of all non-serving-site signals
    None, // noise-limited (pseudo-wired directional links)
};

struct SitePosition {
    double x_m = 0.0;
    double y_m = 0.0;
};

struct UserDrop {
    double x_m = 0.0;
    double y_m = 0.0;
    std::optional<double> indoor_depth_m; // IndoorBorder placement only
};

/// Full simulation recipe. Immutable during a run; a fixed seed fixes the
/// output bit-for-bit regardless of worker count.
struct Scenario {
    Strand strand = Strand::FixedBandwidth;
    CarrierConfig carrier;
    AntennaConfig antenna;
    PathLossParams pathloss;
    std::optional<O2IParams> o2i;
    double cell_radius_m = 200.0;
    int ring_count = 2; // 2 -> 19 hex cells
    int users_per_cell = 10;
    int drops = 200;
    std::uint64_t seed = 1;
    UserPlacement user_placement = UserPlacement::CellEdgeAnnulus;
    InterferenceMode interference_mode = InterferenceMode::Full;
    double edge_annulus_fraction = 0.95;
    double utilization_rho = 1.0;
};

void validate(const Scenario& scenario);

/// Empirical distribution of per-user rates.
struct RateCdf {
    std::vector<double> sorted_rates_bps;
    std::size_t sample_count = 0;

    static RateCdf from_samples(std::vector<double> rates);
};

/// Nearest-rank percentile: element at index ceil(p*n) - 1 of the sorted
/// list, p in (0, 1]. Throws std::domain_error on empty input or p out of
/// range.
double percentile(const RateCdf& cdf, double p);

double mean_rate_bps(const RateCdf& cdf);

/// Centre site plus ring_count complete hexagonal rings; inter-site
/// distance is sqrt(3) * cell_radius. Sites are ordered centre-out.
std::vector<SitePosition> build_hex_grid(double cell_radius_m, int ring_count);

/// Users for one drop, deterministic given (scenario.seed, drop_index).
std::vector<UserDrop> drop_users(const Scenario& scenario, int drop_index);

/// Per-user link evaluation: nearest-site association, path loss plus
/// shadowing, strand gains, kTB noise, interference per mode, SINR, rate.
std::vector<LinkSample> evaluate_drop(const Scenario& scenario,
                                      const std::vector<UserDrop>& users,
                                      int drop_index = 0);

/// All drops concatenated in drop order, then sorted. worker_count 0 picks
/// the hardware concurrency capped by MMKPI_THREADS; the result is
/// bit-identical for every worker count.
RateCdf run_scenario(const Scenario& scenario, int worker_count = 0);

} // namespace mmkpi
