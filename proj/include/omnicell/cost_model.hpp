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

#ifndef omnicell_cost_model_H
#define omnicell_cost_model_H

#include <optional>

namespace omnicell
{
    // Unit prices [USD]. Defaults: mmWave beamformer phase shifter, RF switch,
    // cheap antenna element.
    struct PriceTable
    {
        double cost_shifter = 120.0;
        double cost_switch = 28.62;
        double cost_antenna = 0.01;
    };

    void validate(const PriceTable &prices);

    // Switch-selected ray array: N*M antennas plus a half-depth switch network,
    //   N*M*cost_antenna + N_RF*N*cost_switch/2
    double cost_raa(int num_rays, int elements_per_ray, int num_rf_chains, const PriceTable &prices);

    // Phase-shifter sectoring baseline:
    //   N_RF*M*cost_shifter + num_sectors*M*cost_antenna
    double cost_ula(int elements, int num_rf_chains, int num_sectors, const PriceTable &prices);

    // Antenna price at which both architectures cost the same:
    //   p = (N_RF*M*shifter - N_RF*N*switch/2) / (N*M - num_sectors*M)
    // Negative results mean the ray array is never cheaper; a non-positive
    // denominator (ray array does not use more antennas) throws no_breakeven.
    double breakeven_antenna_price(int num_rays, int elements_per_ray, int num_rf_chains,
                                   int num_sectors, const PriceTable &prices);

    struct CostReport
    {
        double cost_raa = 0.0;
        double cost_ula = 0.0;
        double ratio = 0.0; // cost_raa / cost_ula
        std::optional<double> breakeven_antenna_price; // absent when no breakeven exists
    };

    CostReport make_cost_report(int num_rays, int elements_per_ray, int num_rf_chains,
                                int num_sectors, const PriceTable &prices);
}

#endif
