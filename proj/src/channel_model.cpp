// SPDX-License-Identifier: Apache-2.0
//
// omnicell — full-angle ray antenna array and omnicell system simulator
// Copyright (C) 2026 The omnicell contributors
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

#include "omnicell/channel_model.hpp"

#include <cmath>

#include "omnicell/errors.hpp"

namespace omnicell
{
    std::vector<double> ScenarioConfig::default_snr_grid()
    {
        std::vector<double> g;
        for (int db = -10; db <= 10; ++db)
            g.push_back(static_cast<double>(db));
        return g;
    }

    void validate(const ScenarioConfig &cfg)
    {
        if (!(cfg.carrier_hz > 0.0))
            throw invalid_parameter("carrier_hz must be positive");
        if (cfg.num_users < 1)
            throw invalid_parameter("num_users must be >= 1");
        if (cfg.num_rf_chains < 1)
            throw invalid_parameter("num_rf_chains must be >= 1");
        if (cfg.num_users > cfg.num_rf_chains)
            throw invalid_parameter("num_users must not exceed num_rf_chains");
        if (cfg.num_clusters < 1)
            throw invalid_parameter("num_clusters must be >= 1");
        if (cfg.rays_per_cluster < 1)
            throw invalid_parameter("rays_per_cluster must be >= 1");
        if (cfg.cluster_angle_spread < 0.0 || cfg.intra_cluster_spread < 0.0)
            throw invalid_parameter("angle spreads must be non-negative");
        if (cfg.snr_db_grid.empty())
            throw invalid_parameter("snr_db_grid must not be empty");
    }

    std::vector<double> intra_cluster_offsets(int rays_per_cluster)
    {
        if (rays_per_cluster < 1)
            throw invalid_parameter("rays_per_cluster must be >= 1");

        // Standard 20-ray offset list, unit rms (clustered-delay-line practice)
        static const double table20[20] = {
            0.0447, -0.0447, 0.1413, -0.1413, 0.2492, -0.2492, 0.3715, -0.3715,
            0.5129, -0.5129, 0.6797, -0.6797, 0.8844, -0.8844, 1.1481, -1.1481,
            1.5195, -1.5195, 2.1551, -2.1551};

        std::vector<double> off(static_cast<std::size_t>(rays_per_cluster));
        if (rays_per_cluster == 20)
        {
            off.assign(table20, table20 + 20);
            return off;
        }

        // Laplacian quantiles at midpoints, rescaled to unit rms
        double b = 1.0 / std::sqrt(2.0);
        double sq = 0.0;
        for (int i = 0; i < rays_per_cluster; ++i)
        {
            double q = (i + 0.5) / rays_per_cluster;
            double v = q < 0.5 ? b * std::log(2.0 * q) : -b * std::log(2.0 * (1.0 - q));
            off[static_cast<std::size_t>(i)] = v;
            sq += v * v;
        }
        double rms = std::sqrt(sq / rays_per_cluster);
        if (rms > 0.0)
            for (auto &v : off)
                v /= rms;
        return off;
    }

    PathSet draw_user_paths(const ScenarioConfig &cfg, SplitMix64 &stream, int user_index)
    {
        validate(cfg);

        const int n_c = cfg.num_clusters;
        const int n_r = cfg.rays_per_cluster;

        PathSet ps;
        ps.user_index = user_index;
        ps.gains.reserve(static_cast<std::size_t>(n_c) * n_r);
        ps.azimuths.reserve(static_cast<std::size_t>(n_c) * n_r);
        ps.los_azimuth = stream.angle();

        std::vector<double> centers(static_cast<std::size_t>(n_c));
        double laplace_scale = cfg.cluster_angle_spread / std::sqrt(2.0);
        for (int c = 0; c < n_c; ++c)
            centers[static_cast<std::size_t>(c)] =
                wrap_pi(ps.los_azimuth + stream.laplacian(laplace_scale));

        // Cluster powers, normalized to unit total
        std::vector<double> power(static_cast<std::size_t>(n_c), 1.0 / n_c);
        if (cfg.per_cluster_power_decay == PowerDecay::exponential)
        {
            double total = 0.0;
            for (int c = 0; c < n_c; ++c)
            {
                power[static_cast<std::size_t>(c)] = std::pow(10.0, -cfg.decay_db_per_cluster * c / 10.0);
                total += power[static_cast<std::size_t>(c)];
            }
            for (auto &p : power)
                p /= total;
        }

        auto offsets = intra_cluster_offsets(n_r);
        for (int c = 0; c < n_c; ++c)
        {
            double amp = std::sqrt(power[static_cast<std::size_t>(c)] / n_r);
            for (int r = 0; r < n_r; ++r)
            {
                double az = wrap_pi(centers[static_cast<std::size_t>(c)] +
                                    cfg.intra_cluster_spread * offsets[static_cast<std::size_t>(r)]);
                double phase = two_pi * stream.next_double();
                ps.gains.push_back(std::polar(amp, phase));
                ps.azimuths.push_back(az);
            }
        }
        return ps;
    }

    PathSet draw_user_paths(const ScenarioConfig &cfg, int user_index)
    {
        auto stream = user_stream(cfg.seed, user_index);
        return draw_user_paths(cfg, stream, user_index);
    }

    std::vector<PathSet> draw_all_users(const ScenarioConfig &cfg, std::uint64_t seed)
    {
        std::vector<PathSet> users;
        users.reserve(static_cast<std::size_t>(cfg.num_users));
        for (int k = 0; k < cfg.num_users; ++k)
        {
            auto stream = user_stream(seed, k);
            users.push_back(draw_user_paths(cfg, stream, k));
        }
        return users;
    }

    BeamSpaceChannel project_raa(const PathSet &paths, const RaaParams &raa, const ElementPattern &pattern)
    {
        const std::size_t n = raa.ray_orientations.size();
        const std::size_t l = paths.path_count();

        std::vector<double> a_re(l), a_im(l), acc_re(n, 0.0), acc_im(n, 0.0);
        for (std::size_t i = 0; i < l; ++i)
        {
            a_re[i] = paths.gains[i].real();
            a_im[i] = paths.gains[i].imag();
        }
        auto spec = make_ray_spec(raa, pattern);
        kernels::active().ray_accumulate(spec, paths.azimuths.data(), a_re.data(), a_im.data(), l,
                                         raa.ray_orientations.data(), n, acc_re.data(), acc_im.data());

        BeamSpaceChannel h;
        h.architecture = Architecture::raa;
        h.coeffs.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            h.coeffs[i] = {acc_re[i], acc_im[i]};
        return h;
    }

    BeamSpaceChannel project_ula(const PathSet &paths, const UlaSectorParams &ula,
                                 const ElementPattern &pattern, int sector)
    {
        if (sector < 0 || sector >= ula.num_sectors)
            throw invalid_parameter("sector index out of range");
        const std::size_t m = static_cast<std::size_t>(ula.elements_per_array);
        double boresight = ula.sector_boresights[static_cast<std::size_t>(sector)];

        std::vector<double> acc_re(m, 0.0), acc_im(m, 0.0);
        const auto &k = kernels::active();
        for (std::size_t i = 0; i < paths.path_count(); ++i)
        {
            double phi_rel = wrap_pi(paths.azimuths[i] - boresight);
            double amp = element_amplitude(pattern, phi_rel);
            std::complex<double> w = paths.gains[i] * amp;
            k.ramp_accumulate(pi * std::sin(phi_rel), w.real(), w.imag(), m, acc_re.data(), acc_im.data());
        }

        BeamSpaceChannel h;
        h.architecture = Architecture::ula_hbf;
        h.sector = sector;
        h.coeffs.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            h.coeffs[i] = {acc_re[i], acc_im[i]};
        return h;
    }

    BeamSpaceChannel project_uca(const PathSet &paths, const UcaParams &uca)
    {
        const std::size_t n = static_cast<std::size_t>(uca.num_elements);
        auto table = uca_steering_table(uca);

        std::vector<double> re(n), im(n), acc_re(n, 0.0), acc_im(n, 0.0);
        const auto &k = kernels::active();
        for (std::size_t i = 0; i < paths.path_count(); ++i)
        {
            k.circular_phase(paths.azimuths[i], table.mid_angle.data(), table.chord_coeff.data(),
                             n, re.data(), im.data());
            k.axpy(paths.gains[i].real(), paths.gains[i].imag(), re.data(), im.data(),
                   n, acc_re.data(), acc_im.data());
        }

        BeamSpaceChannel h;
        h.architecture = Architecture::uca;
        h.coeffs.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            h.coeffs[i] = {acc_re[i], acc_im[i]};
        return h;
    }

    int assign_sector(const PathSet &paths, const UlaSectorParams &ula, const ElementPattern &pattern)
    {
        int best = 0;
        double best_mass = -1.0;
        for (int p = 0; p < ula.num_sectors; ++p)
        {
            double mass = 0.0;
            double boresight = ula.sector_boresights[static_cast<std::size_t>(p)];
            for (std::size_t i = 0; i < paths.path_count(); ++i)
            {
                double g = element_gain(pattern, wrap_pi(paths.azimuths[i] - boresight));
                mass += std::norm(paths.gains[i]) * g;
            }
            if (mass > best_mass) // strict: ties keep the lowest index
            {
                best_mass = mass;
                best = p;
            }
        }
        return best;
    }

    std::vector<double> dominant_azimuths(const std::vector<PathSet> &users)
    {
        std::vector<double> out;
        out.reserve(users.size());
        for (const auto &ps : users)
        {
            std::size_t best = 0;
            double best_mag = -1.0;
            for (std::size_t i = 0; i < ps.path_count(); ++i)
            {
                double mag = std::abs(ps.gains[i]);
                if (mag > best_mag)
                {
                    best_mag = mag;
                    best = i;
                }
            }
            out.push_back(ps.azimuths[best]);
        }
        return out;
    }
}
