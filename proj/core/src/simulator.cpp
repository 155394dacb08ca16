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

#include "mmkpi/simulator.hpp"

#include "mmkpi/constants.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace mmkpi {

void validate(const Scenario& scenario)
{
    validate(scenario.carrier);
    validate(scenario.antenna);
    validate(scenario.pathloss);
    if (scenario.o2i)
        validate(*scenario.o2i);
    if (!(scenario.cell_radius_m > 0.0))
        throw std::invalid_argument("deployment.cell_radius_m must be > 0");
    if (scenario.ring_count < 0)
        throw std::invalid_argument("deployment.ring_count must be >= 0");
    if (scenario.users_per_cell < 1)
        throw std::invalid_argument("deployment.users_per_cell must be >= 1");
    if (scenario.drops < 1)
        throw std::invalid_argument("deployment.drops must be >= 1");
    if (!(scenario.edge_annulus_fraction > 0.0 && scenario.edge_annulus_fraction <= 1.0))
        throw std::invalid_argument("deployment.edge_annulus_fraction must be in (0, 1]");
    if (!(scenario.utilization_rho > 0.0 && scenario.utilization_rho <= 1.0))
        throw std::invalid_argument("deployment.utilization_rho must be in (0, 1]");
    if (scenario.user_placement == UserPlacement::IndoorBorder && !scenario.o2i)
        throw std::invalid_argument("deployment.user_placement indoor_border requires an o2i section");
}

RateCdf RateCdf::from_samples(std::vector<double> rates)
{
    if (rates.empty())
        throw std::domain_error("RateCdf: at least one sample required");
    std::sort(rates.begin(), rates.end());
    std::size_t count = rates.size();
    return RateCdf{std::move(rates), count};
}

double percentile(const RateCdf& cdf, double p)
{
    if (cdf.sample_count == 0 || cdf.sorted_rates_bps.empty())
        throw std::domain_error("percentile: empty CDF");
    if (!(p > 0.0 && p <= 1.0))
        throw std::domain_error("percentile: p must be in (0, 1]");
    auto rank = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(cdf.sample_count)));
    rank = std::min(rank, cdf.sample_count);
    return cdf.sorted_rates_bps[rank - 1];
}

double mean_rate_bps(const RateCdf& cdf)
{
    if (cdf.sorted_rates_bps.empty())
        throw std::domain_error("mean_rate_bps: empty CDF");
    double sum = 0.0;
    for (double r : cdf.sorted_rates_bps)
        sum += r;
    return sum / static_cast<double>(cdf.sorted_rates_bps.size());
}

std::vector<SitePosition> build_hex_grid(double cell_radius_m, int ring_count)
{
    if (!(cell_radius_m > 0.0))
        throw std::domain_error("build_hex_grid: radius must be > 0");
    if (ring_count < 0)
        throw std::domain_error("build_hex_grid: ring count must be >= 0");

    double isd = std::sqrt(3.0) * cell_radius_m;
    auto position = [isd](int q, int r) {
        return SitePosition{isd * (q + 0.5 * r), isd * (std::sqrt(3.0) / 2.0) * r};
    };

    // Axial-coordinate ring walk, centre first then each ring in order.
    static constexpr int kDirections[6][2] = {
        {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};

    std::vector<SitePosition> sites;
    sites.push_back(position(0, 0));
    for (int ring = 1; ring <= ring_count; ++ring)
    {
        int q = -ring; // start at direction 4 scaled by ring
        int r = ring;
        for (const auto& dir : kDirections)
        {
            for (int step = 0; step < ring; ++step)
            {
                sites.push_back(position(q, r));
                q += dir[0];
                r += dir[1];
            }
        }
    }
    return sites;
}

std::vector<UserDrop> drop_users(const Scenario& scenario, int drop_index)
{
    validate(scenario);
    RandomStream stream = substream(scenario.seed, static_cast<std::uint64_t>(drop_index),
                                    0, stream_purpose::kPlacement);

    double radius = scenario.cell_radius_m;
    std::vector<UserDrop> users;
    users.reserve(static_cast<std::size_t>(scenario.users_per_cell));
    for (int u = 0; u < scenario.users_per_cell; ++u)
    {
        double angle = 2.0 * kPi * stream.uniform();
        double r = 0.0;
        std::optional<double> depth;
        switch (scenario.user_placement)
        {
        case UserPlacement::CellEdgeAnnulus:
            r = radius * (scenario.edge_annulus_fraction +
                          (1.0 - scenario.edge_annulus_fraction) * stream.uniform());
            break;
        case UserPlacement::IndoorBorder:
            r = radius;
            depth = stream.uniform(scenario.o2i->depth_min_m, scenario.o2i->depth_max_m);
            break;
        case UserPlacement::UniformArea:
            r = radius * std::sqrt(stream.uniform());
            break;
        }
        users.push_back(UserDrop{r * std::cos(angle), r * std::sin(angle), depth});
    }
    return users;
}

namespace {

double distance(const SitePosition& site, const UserDrop& user)
{
    double dx = user.x_m - site.x_m;
    double dy = user.y_m - site.y_m;
    return std::hypot(dx, dy);
}

} // namespace

std::vector<LinkSample> evaluate_drop(const Scenario& scenario,
                                      const std::vector<UserDrop>& users,
                                      int drop_index)
{
    validate(scenario);
    if (users.empty())
        throw std::domain_error("evaluate_drop: empty user list");

    const auto sites = build_hex_grid(scenario.cell_radius_m, scenario.ring_count);
    const double f = scenario.carrier.frequency_hz;
    const double gain = capped_combined_gain_dbi(scenario.antenna, f);
    // EIRP already contains the transmit-side gain; receive gain is 0.
    const double base_power = scenario.carrier.eirp_dbm.value_or(scenario.carrier.tx_power_dbm);
    const double applied_gain = scenario.carrier.eirp_dbm ? 0.0 : gain;
    const double noise = thermal_noise_dbm(scenario.carrier.bandwidth_hz,
                                           scenario.carrier.temperature_k,
                                           scenario.carrier.noise_figure_db);
    const double min_distance = scenario.pathloss.reference_distance_m;

    std::vector<LinkSample> samples;
    samples.reserve(users.size());
    for (std::size_t u = 0; u < users.size(); ++u)
    {
        const UserDrop& user = users[u];

        std::size_t serving = 0;
        double best = distance(sites[0], user);
        for (std::size_t s = 1; s < sites.size(); ++s)
        {
            double d = distance(sites[s], user);
            if (d < best)
            {
                best = d;
                serving = s;
            }
        }
        double d_serving = std::max(best, min_distance);

        RandomStream shadow_stream =
            substream(scenario.seed, static_cast<std::uint64_t>(drop_index), u,
                      stream_purpose::kShadowing);
        double shadow = sample_shadowing_db(scenario.pathloss.shadow_sigma_db, shadow_stream);

        double excess = 0.0;
        if (scenario.o2i && user.indoor_depth_m)
            excess = o2i_excess_loss_db(*scenario.o2i, *user.indoor_depth_m);

        double model_loss =
            path_loss_db(scenario.pathloss, f, d_serving, 0.0) + excess;
        double signal = received_signal_dbm(base_power, applied_gain,
                                            model_loss + shadow);

        double interference = kNoInterferenceDbm;
        if (scenario.interference_mode == InterferenceMode::Full && sites.size() > 1)
        {
            // Separate substream per user so a mode switch never perturbs
            // the serving-link draws.
            RandomStream interf_stream =
                substream(scenario.seed, static_cast<std::uint64_t>(drop_index), u,
                          stream_purpose::kInterference);
            double linear_sum = 0.0;
            for (std::size_t s = 0; s < sites.size(); ++s)
            {
                if (s == serving)
                    continue;
                double shadow_i =
                    sample_shadowing_db(scenario.pathloss.shadow_sigma_db, interf_stream);
                double d_i = std::max(distance(sites[s], user), min_distance);
                double loss_i = path_loss_db(scenario.pathloss, f, d_i, shadow_i) + excess;
                linear_sum += db_to_linear(base_power + applied_gain - loss_i);
            }
            if (linear_sum > 0.0)
                interference = linear_to_db(linear_sum);
        }

        double sinr = sinr_db(signal, noise, interference);
        double rate = shannon_rate_bps(scenario.carrier.bandwidth_hz, sinr,
                                       scenario.utilization_rho);
        samples.push_back(LinkSample{d_serving, model_loss, shadow, applied_gain,
                                     signal, noise, interference, sinr, rate});
    }
    return samples;
}

namespace {

int resolve_worker_count(int requested, int drops)
{
    int workers = requested;
    if (workers <= 0)
    {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? static_cast<int>(hw) : 1;
        if (const char* env = std::getenv("MMKPI_THREADS"))
        {
            int cap = std::atoi(env);
            if (cap > 0)
                workers = std::min(workers, cap);
        }
    }
    return std::max(1, std::min(workers, drops));
}

} // namespace

RateCdf run_scenario(const Scenario& scenario, int worker_count)
{
    validate(scenario);
    const int drops = scenario.drops;
    std::vector<std::vector<double>> per_drop(static_cast<std::size_t>(drops));

    auto evaluate = [&scenario, &per_drop](int drop) {
        auto users = drop_users(scenario, drop);
        auto samples = evaluate_drop(scenario, users, drop);
        std::vector<double> rates;
        rates.reserve(samples.size());
        for (const auto& sample : samples)
            rates.push_back(sample.rate_bps);
        per_drop[static_cast<std::size_t>(drop)] = std::move(rates);
    };

    int workers = resolve_worker_count(worker_count, drops);
    if (workers == 1)
    {
        for (int drop = 0; drop < drops; ++drop)
            evaluate(drop);
    }
    else
    {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
        {
            pool.emplace_back([&next, drops, &evaluate] {
                for (int drop = next.fetch_add(1); drop < drops;
                     drop = next.fetch_add(1))
                    evaluate(drop);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    // Merge in drop order so output is independent of execution order.
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(drops) *
                static_cast<std::size_t>(scenario.users_per_cell));
    for (const auto& rates : per_drop)
        all.insert(all.end(), rates.begin(), rates.end());
    return RateCdf::from_samples(std::move(all));
}

} // namespace mmkpi
