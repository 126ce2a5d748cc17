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

#include <doctest.h>

#include <cmath>

#include "omnicell/cost_model.hpp"
#include "omnicell/errors.hpp"

using namespace omnicell;

TEST_SUITE_BEGIN("cost");

TEST_CASE("headline configuration")
{
    PriceTable p;
    CHECK(cost_raa(201, 64, 10, p) == doctest::Approx(28891.74).epsilon(1e-12));
    CHECK(cost_ula(64, 10, 3, p) == doctest::Approx(76801.92).epsilon(1e-12));
    CHECK(cost_raa(201, 64, 10, p) / cost_ula(64, 10, 3, p) == doctest::Approx(0.3762).epsilon(1e-3));
    CHECK(breakeven_antenna_price(201, 64, 10, 3, p) == doctest::Approx(3.79).epsilon(1e-2));
}

TEST_CASE("degenerate and zero cases")
{
    PriceTable zero{0.0, 0.0, 0.0};
    CHECK(cost_raa(201, 64, 10, zero) == 0.0);
    CHECK(cost_ula(64, 10, 3, zero) == 0.0);

    PriceTable p;
    CHECK(cost_raa(1, 1, 1, p) == doctest::Approx(p.cost_antenna + p.cost_switch / 2.0));
    CHECK(cost_ula(64, 10, 3, PriceTable{0.0, p.cost_switch, p.cost_antenna}) ==
          doctest::Approx(3 * 64 * p.cost_antenna));

    CHECK_THROWS_AS(cost_raa(0, 64, 10, p), invalid_parameter);
    PriceTable negative{-1.0, 0.0, 0.0};
    CHECK_THROWS_AS(cost_ula(64, 10, 3, negative), invalid_parameter);
}

TEST_CASE("costs are affine in the prices")
{
    PriceTable p;
    PriceTable doubled{2 * p.cost_shifter, 2 * p.cost_switch, 2 * p.cost_antenna};
    CHECK(cost_raa(201, 64, 10, doubled) == doctest::Approx(2.0 * cost_raa(201, 64, 10, p)));
    CHECK(cost_ula(64, 10, 3, doubled) == doctest::Approx(2.0 * cost_ula(64, 10, 3, p)));
}

TEST_CASE("breakeven price equalizes the two architectures")
{
    PriceTable p;
    double star = breakeven_antenna_price(201, 64, 10, 3, p);
    PriceTable at_star{p.cost_shifter, p.cost_switch, star};
    CHECK(std::fabs(cost_raa(201, 64, 10, at_star) - cost_ula(64, 10, 3, at_star)) < 1e-6);
}

TEST_CASE("no-advantage and no-breakeven cases")
{
    // expensive switches: the ray array is never cheaper, breakeven goes negative
    PriceTable pricey{120.0, 200.0, 0.01};
    CHECK(breakeven_antenna_price(201, 64, 10, 3, pricey) < 0.0);

    // free phase shifters: same outcome
    PriceTable free_shifters{0.0, 28.62, 0.01};
    CHECK(breakeven_antenna_price(201, 64, 10, 3, free_shifters) < 0.0);

    // ray array without an antenna-count surplus: no equation to solve
    PriceTable p;
    CHECK_THROWS_AS(breakeven_antenna_price(3, 64, 10, 3, p), no_breakeven);

    auto report = make_cost_report(3, 64, 10, 3, p);
    CHECK(!report.breakeven_antenna_price.has_value());
    CHECK(report.ratio == doctest::Approx(report.cost_raa / report.cost_ula));
}

TEST_SUITE_END();
