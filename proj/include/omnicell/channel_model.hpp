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

#ifndef omnicell_channel_model_H
#define omnicell_channel_model_H

#include <complex>
#include <cstdint>
#include <vector>

#include "omnicell/array_geometry.hpp"
#include "omnicell/element_pattern.hpp"
#include "omnicell/radiation_patterns.hpp"
#include "omnicell/rng.hpp"

namespace omnicell
{
    // Narrowband clustered multipath model. Each user has a nominal bearing
    // theta ~ Uniform(-pi, pi) around which N_c cluster centers scatter with
    // wrapped-Laplacian offsets; every cluster contributes N_r rays at fixed
    // offsets scaled by the intra-cluster spread. Cluster powers decay
    // geometrically (configurable dB step) and are normalized so the total
    // path power of a user is exactly 1; per-path gains are
    // sqrt(power/N_r) * exp(i * uniform phase). No delay dispersion: the
    // receiver model is frequency-flat.
    struct PathSet
    {
        int user_index = 0;
        std::vector<std::complex<double>> gains; // alpha_l
        std::vector<double> azimuths;            // phi_l [rad], wrapped
        double los_azimuth = 0.0;                // theta [rad]

        std::size_t path_count() const { return gains.size(); }
    };

    enum class PowerDecay
    {
        exponential,
        uniform
    };

    struct ScenarioConfig
    {
        double carrier_hz = 47.2e9;
        int num_users = 10;     // K
        int num_rf_chains = 10; // N_RF
        int num_clusters = 20;  // N_c
        int rays_per_cluster = 20;
        std::vector<double> snr_db_grid = default_snr_grid(); // transmit SNR sweep [dB]
        std::uint64_t seed = 1;
        double cluster_angle_spread = deg2rad(22.0); // std of cluster-center offsets [rad]
        double intra_cluster_spread = deg2rad(3.0);  // rms of per-ray offsets [rad]
        PowerDecay per_cluster_power_decay = PowerDecay::exponential;
        double decay_db_per_cluster = 3.0;

        double wavelength() const { return wavelength_from_carrier(carrier_hz); }
        int paths_per_user() const { return num_clusters * rays_per_cluster; }

        static std::vector<double> default_snr_grid(); // -10..10 dB, 1 dB steps
    };

    void validate(const ScenarioConfig &cfg);

    // Fixed per-ray offset table with unit rms, scaled by the intra-cluster
    // spread. For 20 rays this is the standard clustered-delay-line offset
    // list; other counts use symmetric Laplacian quantiles rescaled to unit rms.
    std::vector<double> intra_cluster_offsets(int rays_per_cluster);

    // Draw one user's paths from the given substream. Draw order (fixed for
    // reproducibility): theta, then all cluster offsets, then one phase per
    // path in cluster-major order.
    PathSet draw_user_paths(const ScenarioConfig &cfg, SplitMix64 &stream, int user_index);

    // Same, deriving the substream from cfg.seed and the user index
    PathSet draw_user_paths(const ScenarioConfig &cfg, int user_index);

    // All users of one realization
    std::vector<PathSet> draw_all_users(const ScenarioConfig &cfg, std::uint64_t seed);

    // Channel projected into one architecture's branch/element space
    struct BeamSpaceChannel
    {
        Architecture architecture;
        std::vector<std::complex<double>> coeffs; // N rays / M elements / N_uca elements
        int sector = -1;                          // baselines only
    };

    // h = sum_l alpha_l * r(phi_l), length N (ray space)
    BeamSpaceChannel project_raa(const PathSet &paths, const RaaParams &raa, const ElementPattern &pattern);

    // h = sum_l alpha_l * sqrt(G(phi'_l)) * a_ULA(phi'_l), length M, with
    // phi' relative to the sector boresight (back-lobe paths are clipped by
    // the element pattern floor).
    BeamSpaceChannel project_ula(const PathSet &paths, const UlaSectorParams &ula,
                                 const ElementPattern &pattern, int sector);

    // h = sum_l alpha_l * a_UCA(phi_l), length N_uca, isotropic elements
    BeamSpaceChannel project_uca(const PathSet &paths, const UcaParams &uca);

    // Serving sector: argmax over sectors of the path-power mass weighted by
    // the element pattern, ties broken toward the lowest sector index.
    int assign_sector(const PathSet &paths, const UlaSectorParams &ula, const ElementPattern &pattern);

    // Dominant-path azimuth of each user (highest |alpha|, first on ties)
    std::vector<double> dominant_azimuths(const std::vector<PathSet> &users);
}

#endif
