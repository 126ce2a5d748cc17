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

#ifndef omnicell_config_H
#define omnicell_config_H

#include <optional>
#include <string>
#include <vector>

#include "omnicell/array_geometry.hpp"
#include "omnicell/channel_model.hpp"
#include "omnicell/cost_model.hpp"
#include "omnicell/element_pattern.hpp"

namespace omnicell
{
    // One JSON document configures every subcommand. Top-level keys:
    // scenario, raa, ula, uca, prices, run. Unknown keys are rejected with
    // the offending field path; scenario.f_c_hz is the one required field.

    struct RaaConfig
    {
        int elements_per_ray = 64;
        RaaSizing sizing = RaaSizing::strict;
        PatternKind element_pattern = PatternKind::directional_3gpp;
        double zeta_3db = deg2rad(65.0);
        double a_max_db = 30.0;
        std::optional<int> num_rays;             // explicit override
        std::optional<double> central_distance_m; // explicit override
        bool allow_overlap = false;
    };

    struct UlaConfig
    {
        int elements = 64;
        int sectors = 3;
        PatternKind element_pattern = PatternKind::directional_3gpp;
        double codebook_halfwidth = pi / 3.0; // sector half width in the sine domain sweep
    };

    enum class UcaRadiusMode
    {
        standard, // a = N*lambda/(4*pi)
        explicit_radius
    };

    // Which elements feed each UCA codeword. `full` applies the plain
    // steering-vector codebook; `semicircle` zeroes the elements facing away
    // from the codeword target, which is how the sectoring system drives the
    // ring when it communicates. `automatic` uses full codewords for pattern
    // sweeps and semicircle selection in the multi-user link simulation.
    enum class UcaElementSelection
    {
        automatic,
        full,
        semicircle
    };

    enum class UcaNoiseModel
    {
        as_written, // per-branch factor M, same as the ray/DFT branches
        physical    // per-codeword combining gain N_uca
    };

    struct UcaConfig
    {
        int elements = 100;
        UcaRadiusMode radius_mode = UcaRadiusMode::standard;
        double radius_m = 0.0;                      // explicit_radius mode only
        std::optional<double> codeword_spacing_rad; // default arcsin(2/M_raa)
        UcaElementSelection element_selection = UcaElementSelection::automatic;
        UcaNoiseModel noise_model = UcaNoiseModel::as_written;
    };

    struct RunConfig
    {
        int num_seeds = 100;
        std::string strategy = "greedy"; // greedy | exhaustive | min_angle
        int angle_grid_points = 4096;
        std::vector<std::string> architectures = {"raa", "ula", "uca"};
        std::string out_dir = "out";
        int threads = 0; // 0 = hardware concurrency
    };

    struct SimConfig
    {
        ScenarioConfig scenario;
        RaaConfig raa;
        UlaConfig ula;
        UcaConfig uca;
        PriceTable prices;
        RunConfig run;

        // chi: configured spacing or arcsin(2/M_raa)
        double uca_codeword_spacing() const;
    };

    // Parse and validate a config document; throws config_error naming the
    // offending field. Missing sections/fields (except scenario.f_c_hz) take
    // their defaults.
    SimConfig parse_config(const std::string &json_text);
    SimConfig load_config_file(const std::string &path);

    // Fully resolved snapshot; parse_config(serialize_config(c)) reproduces c
    std::string serialize_config(const SimConfig &cfg);

    void validate(const SimConfig &cfg);
}

#endif
