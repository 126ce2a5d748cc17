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

#include "omnicell/array_geometry.hpp"
#include "omnicell/errors.hpp"

using namespace omnicell;

namespace
{
    const double lambda_47 = wavelength_from_carrier(47.2e9);

    // Direct evaluation of the strict ray-count rule, independent of build_raa
    int oracle_strict_rays(int m, double d, double lam)
    {
        int n = static_cast<int>(std::floor(2.0 * (pi - std::asin(lam / (4.0 * d))) / std::asin(2.0 / m) + 1.0));
        return n % 2 == 0 ? n - 1 : n;
    }
}

TEST_SUITE_BEGIN("geometry");

TEST_CASE("wavelength from carrier uses the exact speed of light")
{
    CHECK(lambda_47 == doctest::Approx(6.3515351271e-3).epsilon(1e-10));
}

TEST_CASE("wrap_pi maps to (-pi, pi] and is idempotent")
{
    CHECK(wrap_pi(pi) == doctest::Approx(pi));
    CHECK(wrap_pi(-pi) == doctest::Approx(pi));
    CHECK(wrap_pi(3.0 * pi) == doctest::Approx(pi));
    CHECK(wrap_pi(0.0) == 0.0);
    for (double x : {-9.5, -3.2, -0.4, 0.7, 2.9, 8.1})
    {
        double w = wrap_pi(x);
        CHECK(w > -pi);
        CHECK(w <= pi);
        CHECK(wrap_pi(w) == w); // bitwise stable inside the interval
        CHECK(std::sin(w) == doctest::Approx(std::sin(x)).epsilon(1e-12));
    }
}

TEST_CASE("frame conversion helpers")
{
    CHECK(ray_axis_aoa(0.0) == doctest::Approx(pi / 2.0));
    CHECK(aoa_to_ray_orientation(ray_axis_aoa(0.7)) == doctest::Approx(0.7));
}

TEST_CASE("approximate sizing reproduces the small illustration array")
{
    auto raa = build_raa(4, lambda_47, RaaSizing::approximate);
    CHECK(raa.central_distance == doctest::Approx(6.135111815866e-3).epsilon(1e-9)); // ~6.1 mm
    CHECK(raa.orientation_spacing() == doctest::Approx(std::asin(0.5)));
    CHECK(raa.orientation_spacing() == doctest::Approx(pi / 6.0)); // 30 deg
    CHECK(raa.num_rays == 11);
    CHECK(raa.elements_per_ray == 4);
}

TEST_CASE("strict sizing matches the direct rule")
{
    auto raa = build_raa(4, lambda_47, RaaSizing::strict);
    CHECK(raa.num_rays == oracle_strict_rays(4, raa.central_distance, lambda_47));
    CHECK(raa.num_rays == 11);
}

TEST_CASE("64-element rays: 201 rays strict and approximate")
{
    double lam = 0.01;
    RaaOptions quarter;
    quarter.central_distance = 64.0 * lam / 4.0;
    auto strict_quarter = build_raa(64, lam, RaaSizing::strict, quarter);
    CHECK(strict_quarter.num_rays == 201);
    CHECK(strict_quarter.num_rays == oracle_strict_rays(64, 16.0 * lam, lam));

    auto strict_bound = build_raa(64, lam, RaaSizing::strict);
    CHECK(strict_bound.num_rays == 201);

    auto approx = build_raa(64, lam, RaaSizing::approximate);
    CHECK(approx.num_rays == 201);
}

TEST_CASE("parameter errors")
{
    CHECK_THROWS_AS(build_raa(1, lambda_47), invalid_parameter);
    CHECK_THROWS_AS(build_raa(4, 0.0), invalid_parameter);
    // two-element rays at 90 deg spacing: 5 approximate rays put the end pair
    // on top of each other
    CHECK_THROWS_AS(build_raa(2, lambda_47, RaaSizing::approximate), degenerate_array);
    CHECK(build_raa(2, lambda_47, RaaSizing::strict).num_rays == 3);

    RaaOptions even;
    even.num_rays = 12;
    CHECK_THROWS_AS(build_raa(4, lambda_47, RaaSizing::strict, even), invalid_parameter);
}

TEST_CASE("orientation invariants")
{
    auto raa = build_raa(16, lambda_47, RaaSizing::strict);
    double spacing = std::asin(2.0 / 16.0);
    int half = (raa.num_rays - 1) / 2;
    CHECK(raa.orientation(0) == 0.0);
    for (int n = -half; n <= half; ++n)
    {
        CHECK(std::fabs(raa.orientation(n)) <= pi + 1e-12);
        CHECK(raa.orientation(n) == doctest::Approx(-raa.orientation(-n)).epsilon(1e-15));
        if (n < half)
            CHECK(std::fabs((raa.orientation(n + 1) - raa.orientation(n)) - spacing) < 1e-12);
    }
}

TEST_CASE("element positions follow the radial layout")
{
    auto raa = build_raa(4, lambda_47, RaaSizing::strict);
    auto pos = element_positions(raa);
    REQUIRE(pos.size() == static_cast<std::size_t>(raa.num_rays * 4));

    // ordering: ray ascending, then element ascending
    CHECK(pos.front().ray_index == raa.min_ray_index());
    CHECK(pos.front().element_index == 1);
    CHECK(pos.back().ray_index == raa.max_ray_index());
    CHECK(pos.back().element_index == 4);

    // central ray, first element: (0, D)
    for (const auto &p : pos)
    {
        if (p.ray_index == 0 && p.element_index == 1)
        {
            CHECK(p.x == doctest::Approx(0.0));
            CHECK(p.y == doctest::Approx(raa.central_distance));
        }
    }

    // ray with orientation pi/2 (n = 3 at 30 deg spacing): first element at (-D, ~0)
    CHECK(raa.orientation(3) == doctest::Approx(pi / 2.0));
    for (const auto &p : pos)
    {
        if (p.ray_index == 3 && p.element_index == 1)
        {
            CHECK(p.x == doctest::Approx(-raa.central_distance));
            CHECK(std::fabs(p.y) < 1e-12);
        }
    }

    // element radii step by lambda/2 along each ray
    CHECK(raa.element_radius(2) - raa.element_radius(1) == doctest::Approx(lambda_47 / 2.0));
}

TEST_CASE("mirror symmetry of opposite rays")
{
    auto raa = build_raa(8, lambda_47, RaaSizing::strict);
    auto pos = element_positions(raa);
    int m = raa.elements_per_ray;
    int half = (raa.num_rays - 1) / 2;
    auto at = [&](int n, int e) -> const ElementPosition &
    {
        return pos[static_cast<std::size_t>((n + half) * m + (e - 1))];
    };
    for (int n = 1; n <= half; ++n)
        for (int e = 1; e <= m; ++e)
        {
            CHECK(at(-n, e).x == doctest::Approx(-at(n, e).x).epsilon(1e-15));
            CHECK(at(-n, e).y == doctest::Approx(at(n, e).y).epsilon(1e-15));
        }
}

TEST_CASE("pairwise element spacing stays above half a wavelength")
{
    // strict small array: exhaustive scan over all 44 positions
    auto raa = build_raa(4, lambda_47, RaaSizing::strict);
    CHECK(min_pairwise_distance(raa) >= lambda_47 / 2.0 - 1e-12);

    // figure-scale 13-ray variant: the duplicated +-pi ray is overlap-exempt,
    // every other pair of the 52 positions keeps the spacing
    RaaOptions opts;
    opts.num_rays = 13;
    opts.allow_overlap = true;
    auto fig = build_raa(4, lambda_47, RaaSizing::strict, opts);
    CHECK(fig.num_rays == 13);
    CHECK(min_pairwise_distance(fig) >= lambda_47 / 2.0 - 1e-12);

    // without the flag the coincident end rays are rejected
    RaaOptions no_flag;
    no_flag.num_rays = 13;
    CHECK_THROWS_AS(build_raa(4, lambda_47, RaaSizing::strict, no_flag), degenerate_array);
}

TEST_CASE("central distance bound is tight")
{
    double d_min = raa_min_central_distance(4, lambda_47);
    RaaOptions shrunk;
    shrunk.central_distance = 0.99 * d_min;
    CHECK_THROWS_AS(build_raa(4, lambda_47, RaaSizing::strict, shrunk), invalid_parameter);

    // at the bound, adjacent first elements sit at exactly lambda/2
    auto raa = build_raa(4, lambda_47, RaaSizing::strict);
    double adjacent = 2.0 * raa.central_distance * std::sin(raa.orientation_spacing() / 2.0);
    CHECK(adjacent == doctest::Approx(lambda_47 / 2.0).epsilon(1e-12));
}

TEST_CASE("three-sector ULA boresights")
{
    auto ula = build_ula_sectors(4, lambda_47, 3);
    REQUIRE(ula.sector_boresights.size() == 3);
    CHECK(ula.sector_boresights[0] == 0.0);
    CHECK(ula.sector_boresights[1] == doctest::Approx(2.0 * pi / 3.0));
    CHECK(ula.sector_boresights[2] == doctest::Approx(-2.0 * pi / 3.0));
    CHECK(ula.sector_width() == doctest::Approx(deg2rad(120.0)));

    auto single = build_ula_sectors(4, lambda_47, 1);
    CHECK(single.sector_boresights.size() == 1);
    CHECK(single.sector_boresights[0] == 0.0);

    auto big = build_ula_sectors(64, lambda_47, 3);
    CHECK(big.elements_per_array == 64);
    CHECK(element_positions(big, 0).size() == 64);
    CHECK_THROWS_AS(element_positions(big, 3), invalid_parameter);
    CHECK_THROWS_AS(build_ula_sectors(1, lambda_47, 3), invalid_parameter);
}

TEST_CASE("ULA panel elements sit half a wavelength apart, centered")
{
    auto ula = build_ula_sectors(4, lambda_47, 3);
    auto pos = element_positions(ula, 0);
    // boresight +x: elements along y
    CHECK(pos[0].x == doctest::Approx(0.0));
    CHECK(pos[1].y - pos[0].y == doctest::Approx(lambda_47 / 2.0));
    double cy = 0.0;
    for (const auto &p : pos)
        cy += p.y;
    CHECK(cy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("UCA radius and orientations")
{
    auto uca = build_uca(13, lambda_47);
    CHECK(uca.radius == doctest::Approx(13.0 * lambda_47 / (4.0 * pi)).epsilon(1e-15));
    CHECK(uca.radius == doctest::Approx(6.5707e-3).epsilon(1e-4)); // ~6.571 mm

    auto big = build_uca(100, lambda_47);
    CHECK(big.num_elements == 100);
    CHECK(big.radius == doctest::Approx(100.0 * lambda_47 / (4.0 * pi)));

    auto four = build_uca(4, lambda_47);
    CHECK(four.element_orientations[0] == 0.0);
    CHECK(four.element_orientations[1] == doctest::Approx(pi / 2.0));
    CHECK(four.element_orientations[2] == doctest::Approx(pi));
    CHECK(four.element_orientations[3] == doctest::Approx(3.0 * pi / 2.0));

    auto fig = build_uca_explicit(13, lambda_47, 6.1e-3);
    CHECK(fig.radius == 6.1e-3);
    CHECK_THROWS_AS(build_uca(2, lambda_47), invalid_parameter);
    CHECK_THROWS_AS(build_uca_explicit(13, lambda_47, 0.0), invalid_parameter);

    auto pos = element_positions(uca);
    REQUIRE(pos.size() == 13);
    for (const auto &p : pos)
        CHECK(std::hypot(p.x, p.y) == doctest::Approx(uca.radius));
}

TEST_SUITE_END();
