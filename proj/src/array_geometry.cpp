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

#include "omnicell/array_geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omnicell/errors.hpp"

namespace omnicell
{
    namespace
    {
        constexpr double spacing_slack = 1e-12; // [m] tolerance on the lambda/2 checks

        // Wrapped angular distance between two ray orientations
        double orientation_distance(double a, double b)
        {
            return std::fabs(wrap_pi(a - b));
        }
    }

    double raa_min_central_distance(int elements_per_ray, double wavelength)
    {
        double spacing = std::asin(2.0 / elements_per_ray);
        return wavelength / (4.0 * std::sin(0.5 * spacing));
    }

    RaaParams build_raa(int elements_per_ray, double wavelength, RaaSizing sizing, const RaaOptions &options)
    {
        if (elements_per_ray < 2)
            throw invalid_parameter("elements_per_ray must be >= 2, got " + std::to_string(elements_per_ray));
        if (!(wavelength > 0.0))
            throw invalid_parameter("wavelength must be positive");

        const double spacing = std::asin(2.0 / elements_per_ray);
        const double d_min = raa_min_central_distance(elements_per_ray, wavelength);
        const double d = options.central_distance.value_or(d_min);
        if (!(d > 0.0))
            throw invalid_parameter("central_distance must be positive");

        int n_rays;
        if (options.num_rays)
        {
            n_rays = *options.num_rays;
            if (n_rays % 2 == 0)
                throw invalid_parameter("num_rays must be odd, got " + std::to_string(n_rays));
        }
        else if (sizing == RaaSizing::strict)
        {
            // End-ray spacing bound: largest N whose outermost first elements
            // stay lambda/2 apart across the +-pi seam, then forced odd.
            double bound = 2.0 * (pi - std::asin(wavelength / (4.0 * d))) / spacing + 1.0;
            n_rays = static_cast<int>(std::floor(bound));
            if (n_rays % 2 == 0)
                n_rays -= 1;
        }
        else
        {
            n_rays = static_cast<int>(std::floor(elements_per_ray * pi));
            if (n_rays % 2 == 0)
                n_rays -= 1;
        }

        if (n_rays < 3)
            throw degenerate_array("ray count " + std::to_string(n_rays) + " is below the minimum of 3");

        RaaParams raa;
        raa.num_rays = n_rays;
        raa.elements_per_ray = elements_per_ray;
        raa.central_distance = d;
        raa.wavelength = wavelength;
        raa.allow_overlap = options.allow_overlap;
        raa.ray_orientations.resize(static_cast<std::size_t>(n_rays));
        int half = (n_rays - 1) / 2;
        for (int n = -half; n <= half; ++n)
            raa.ray_orientations[static_cast<std::size_t>(n + half)] = n * spacing;

        validate(raa);
        return raa;
    }

    void validate(const RaaParams &raa)
    {
        if (raa.num_rays < 3)
            throw degenerate_array("ray count below 3");
        if (raa.num_rays % 2 == 0)
            throw invalid_parameter("ray count must be odd");
        if (raa.elements_per_ray < 2)
            throw invalid_parameter("elements_per_ray must be >= 2");
        if (static_cast<int>(raa.ray_orientations.size()) != raa.num_rays)
            throw invalid_parameter("ray_orientations size does not match num_rays");

        const double spacing = raa.orientation_spacing();
        const int half = (raa.num_rays - 1) / 2;
        for (int n = -half; n <= half; ++n)
        {
            double eta = raa.orientation(n);
            if (std::fabs(eta) > pi + 1e-12)
                throw invalid_parameter("ray orientation exceeds +-pi");
            if (std::fabs(eta + raa.orientation(-n)) > 1e-12)
                throw invalid_parameter("ray orientations are not symmetric");
            if (n < half && std::fabs((raa.orientation(n + 1) - eta) - spacing) > 1e-12)
                throw invalid_parameter("ray orientation spacing deviates from arcsin(2/M)");
        }

        // Angular gap between the outermost rays across the +-pi seam
        double seam_gap = two_pi - (raa.num_rays - 1) * spacing;
        bool end_rays_coincident = orientation_distance(raa.orientation(half), raa.orientation(-half)) < spacing / 2.0;
        if (end_rays_coincident && !raa.allow_overlap)
            throw degenerate_array("end rays closer than arcsin(2/M)/2 across +-pi; set allow_overlap to keep them");

        // Element spacing. Pair distances between equal radii are
        // 2*L_m*sin(k*spacing/2), smallest at L_1 = D on the tightest angle;
        // pairs with different radii are at least lambda/2 apart already
        // (the radial offset alone is a multiple of lambda/2). It is enough
        // to check the first elements across the smallest angular gaps.
        const double min_dist = raa.wavelength / 2.0 - spacing_slack;
        double adjacent = 2.0 * raa.central_distance * std::sin(spacing / 2.0);
        if (adjacent < min_dist)
            throw invalid_parameter("central distance places first elements of adjacent rays closer than lambda/2");
        if (!end_rays_coincident || !raa.allow_overlap)
        {
            double seam = 2.0 * raa.central_distance * std::sin(std::fabs(seam_gap) / 2.0);
            if (!end_rays_coincident && seam < min_dist)
                throw invalid_parameter("first elements of the outermost rays are closer than lambda/2 across +-pi");
        }
    }

    std::vector<ElementPosition> element_positions(const RaaParams &raa)
    {
        std::vector<ElementPosition> out;
        out.reserve(static_cast<std::size_t>(raa.num_rays) * raa.elements_per_ray);
        int half = (raa.num_rays - 1) / 2;
        for (int n = -half; n <= half; ++n)
        {
            double s = std::sin(raa.orientation(n));
            double c = std::cos(raa.orientation(n));
            for (int m = 1; m <= raa.elements_per_ray; ++m)
            {
                double radius = raa.element_radius(m);
                out.push_back({n, m, -radius * s, radius * c});
            }
        }
        return out;
    }

    double min_pairwise_distance(const RaaParams &raa)
    {
        auto pos = element_positions(raa);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pos.size(); ++i)
        {
            for (std::size_t j = i + 1; j < pos.size(); ++j)
            {
                if (raa.allow_overlap && pos[i].ray_index != pos[j].ray_index)
                {
                    double da = orientation_distance(raa.orientation(pos[i].ray_index),
                                                     raa.orientation(pos[j].ray_index));
                    if (da < 1e-9) // coincident duplicate ray
                        continue;
                }
                double dx = pos[i].x - pos[j].x;
                double dy = pos[i].y - pos[j].y;
                double dist = std::hypot(dx, dy);
                if (dist < best)
                    best = dist;
            }
        }
        return best;
    }

    UlaSectorParams build_ula_sectors(int elements_per_array, double wavelength, int num_sectors)
    {
        if (elements_per_array < 2)
            throw invalid_parameter("elements_per_array must be >= 2");
        if (num_sectors < 1)
            throw invalid_parameter("num_sectors must be >= 1");
        if (!(wavelength > 0.0))
            throw invalid_parameter("wavelength must be positive");

        UlaSectorParams ula;
        ula.elements_per_array = elements_per_array;
        ula.num_sectors = num_sectors;
        ula.wavelength = wavelength;
        ula.sector_boresights.resize(static_cast<std::size_t>(num_sectors));
        for (int p = 0; p < num_sectors; ++p)
            ula.sector_boresights[static_cast<std::size_t>(p)] = wrap_pi(two_pi * p / num_sectors);
        return ula;
    }

    std::vector<ElementPosition> element_positions(const UlaSectorParams &ula, int sector)
    {
        if (sector < 0 || sector >= ula.num_sectors)
            throw invalid_parameter("sector index out of range");
        double beta = ula.sector_boresights[static_cast<std::size_t>(sector)];
        // Panel axis perpendicular to the boresight
        double ux = -std::sin(beta), uy = std::cos(beta);
        std::vector<ElementPosition> out;
        out.reserve(static_cast<std::size_t>(ula.elements_per_array));
        for (int m = 1; m <= ula.elements_per_array; ++m)
        {
            double t = (m - 1 - (ula.elements_per_array - 1) / 2.0) * ula.wavelength / 2.0;
            out.push_back({sector, m, t * ux, t * uy});
        }
        return out;
    }

    UcaParams build_uca(int num_elements, double wavelength)
    {
        return build_uca_explicit(num_elements, wavelength, num_elements * wavelength / (4.0 * pi));
    }

    UcaParams build_uca_explicit(int num_elements, double wavelength, double radius)
    {
        if (num_elements < 3)
            throw invalid_parameter("num_elements must be >= 3");
        if (!(wavelength > 0.0))
            throw invalid_parameter("wavelength must be positive");
        if (!(radius > 0.0))
            throw invalid_parameter("radius must be positive");

        UcaParams uca;
        uca.num_elements = num_elements;
        uca.radius = radius;
        uca.wavelength = wavelength;
        uca.element_orientations.resize(static_cast<std::size_t>(num_elements));
        for (int n = 1; n <= num_elements; ++n)
            uca.element_orientations[static_cast<std::size_t>(n - 1)] = two_pi * (n - 1) / num_elements;
        return uca;
    }

    std::vector<ElementPosition> element_positions(const UcaParams &uca)
    {
        std::vector<ElementPosition> out;
        out.reserve(static_cast<std::size_t>(uca.num_elements));
        for (int n = 1; n <= uca.num_elements; ++n)
        {
            double phi = uca.element_orientations[static_cast<std::size_t>(n - 1)];
            out.push_back({0, n, uca.radius * std::cos(phi), uca.radius * std::sin(phi)});
        }
        return out;
    }
}
