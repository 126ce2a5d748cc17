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

#include "omnicell/cost_model.hpp"

#include "omnicell/errors.hpp"

namespace omnicell
{
    void validate(const PriceTable &prices)
    {
        if (prices.cost_shifter < 0.0 || prices.cost_switch < 0.0 || prices.cost_antenna < 0.0)
            throw invalid_parameter("prices must be non-negative");
    }

    namespace
    {
        void check_counts(int a, int b, int c)
        {
            if (a < 1 || b < 1 || c < 1)
                throw invalid_parameter("hardware counts must be positive");
        }
    }

    double cost_raa(int num_rays, int elements_per_ray, int num_rf_chains, const PriceTable &prices)
    {
        check_counts(num_rays, elements_per_ray, num_rf_chains);
        validate(prices);
        return num_rays * elements_per_ray * prices.cost_antenna +
               num_rf_chains * num_rays * prices.cost_switch / 2.0;
    }

    double cost_ula(int elements, int num_rf_chains, int num_sectors, const PriceTable &prices)
    {
        check_counts(elements, num_rf_chains, num_sectors);
        validate(prices);
        return num_rf_chains * elements * prices.cost_shifter +
               num_sectors * elements * prices.cost_antenna;
    }

    double breakeven_antenna_price(int num_rays, int elements_per_ray, int num_rf_chains,
                                   int num_sectors, const PriceTable &prices)
    {
        check_counts(num_rays, elements_per_ray, num_rf_chains);
        check_counts(num_sectors, 1, 1);
        validate(prices);
        double denom = static_cast<double>(num_rays) * elements_per_ray -
                       static_cast<double>(num_sectors) * elements_per_ray;
        if (denom <= 0.0)
            throw no_breakeven("ray array does not use more antennas than the sectoring baseline");
        double numer = num_rf_chains * elements_per_ray * prices.cost_shifter -
                       num_rf_chains * num_rays * prices.cost_switch / 2.0;
        return numer / denom;
    }

    CostReport make_cost_report(int num_rays, int elements_per_ray, int num_rf_chains,
                                int num_sectors, const PriceTable &prices)
    {
        CostReport r;
        r.cost_raa = cost_raa(num_rays, elements_per_ray, num_rf_chains, prices);
        r.cost_ula = cost_ula(elements_per_ray, num_rf_chains, num_sectors, prices);
        r.ratio = r.cost_raa / r.cost_ula;
        try
        {
            r.breakeven_antenna_price = breakeven_antenna_price(num_rays, elements_per_ray,
                                                                num_rf_chains, num_sectors, prices);
        }
        catch (const no_breakeven &)
        {
            r.breakeven_antenna_price = std::nullopt;
        }
        return r;
    }
}
