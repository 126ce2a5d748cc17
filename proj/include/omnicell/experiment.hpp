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

#ifndef omnicell_experiment_H
#define omnicell_experiment_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omnicell/beam_selection.hpp"
#include "omnicell/config.hpp"

namespace omnicell
{
    // The arrays, patterns and codebooks one config describes
    struct ArchitectureSet
    {
        RaaParams raa;
        ElementPattern raa_pattern;
        UlaSectorParams ula;
        ElementPattern ula_pattern;
        Codebook dft;
        UcaParams uca;
        Codebook uca_pattern_codebook; // plain codewords for sweeps
        Codebook uca_link_codebook;    // element selection resolved for the link sim
        double uca_noise_factor = 0.0;
    };

    ArchitectureSet build_architectures(const SimConfig &cfg);

    Architecture architecture_from_name(const std::string &name);

    // One Monte Carlo draw: every user's paths for a given seed
    struct ScenarioRealization
    {
        std::uint64_t seed = 0;
        int num_rf_chains = 0;
        std::vector<PathSet> users;
    };

    ScenarioRealization draw_realization(const ScenarioConfig &cfg, std::uint64_t seed);

    // Branch responses of one architecture for the realization (link mode:
    // the UCA uses its link codebook and configured noise factor)
    BranchSpace link_branch_space(Architecture arch, const ArchitectureSet &arches,
                                  const std::vector<PathSet> &users);

    // Draw-channels -> select -> beamform -> report for one architecture,
    // strategy in {"greedy", "exhaustive", "min_angle"}.
    LinkReport evaluate_link(Architecture arch, const ArchitectureSet &arches,
                             const ScenarioRealization &realization,
                             const std::string &strategy, double pbar_t);

    // ------------------------------------------------------------ commands

    // In-memory result of one CLI command: named output files plus a short
    // human-readable summary. Writing to disk and the manifest is the CLI's job.
    struct CommandOutputs
    {
        std::vector<std::pair<std::string, std::string>> files; // name -> content
        std::string summary;
    };

    CommandOutputs run_geometry(const SimConfig &cfg);
    CommandOutputs run_pattern(const SimConfig &cfg);
    CommandOutputs run_sumrate(const SimConfig &cfg);
    CommandOutputs run_cost(const SimConfig &cfg);

    struct SumRateAggregate
    {
        std::string architecture;
        double snr_db = 0.0;
        double mean_sum_rate = 0.0;
        double std_sum_rate = 0.0; // sample standard deviation over seeds
        int num_seeds = 0;
    };

    // Monte Carlo engine behind run_sumrate; rows in (seed, arch, snr, user)
    // order regardless of worker count.
    struct SumRateResult
    {
        std::string csv;                          // LinkReport rows
        std::vector<SumRateAggregate> aggregates; // per (architecture, snr)
    };

    SumRateResult run_sumrate_experiment(const SimConfig &cfg);
}

#endif
