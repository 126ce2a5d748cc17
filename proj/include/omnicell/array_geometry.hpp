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

#ifndef omnicell_array_geometry_H
#define omnicell_array_geometry_H

#include <optional>
#include <vector>

#include "omnicell/angles.hpp"

namespace omnicell
{
    // ---------------------------------------------------------------- RAA

    // Full-angle ray antenna array: N directly-fed linear sub-arrays
    // ("rays") of M half-wavelength-spaced elements each, fanned out from a
    // common center. Ray n (n = -(N-1)/2 .. (N-1)/2) has orientation
    // eta_n = n*arcsin(2/M) from the +y axis; the first element of every ray
    // sits at radius D from the origin.
    struct RaaParams
    {
        int num_rays = 0;                      // N, odd
        int elements_per_ray = 0;              // M >= 2
        double central_distance = 0.0;         // D [m]
        double wavelength = 0.0;               // lambda [m]
        std::vector<double> ray_orientations;  // eta_n, index 0 <-> n = -(N-1)/2
        bool allow_overlap = false;            // permit coincident end rays at +-pi

        int min_ray_index() const { return -(num_rays - 1) / 2; }
        int max_ray_index() const { return (num_rays - 1) / 2; }

        // Orientation of ray n using the signed index n in [min_ray_index, max_ray_index]
        double orientation(int n) const { return ray_orientations[static_cast<std::size_t>(n - min_ray_index())]; }

        // Radius of element m (1-based): L_m = D + (m-1)*lambda/2
        double element_radius(int m) const { return central_distance + (m - 1) * wavelength / 2.0; }

        double orientation_spacing() const { return std::asin(2.0 / elements_per_ray); }
    };

    enum class RaaSizing
    {
        strict,      // ray count from the end-ray spacing bound, forced odd
        approximate  // N = largest odd integer <= floor(M*pi)
    };

    // Overrides for figure replication and experiments. Explicit num_rays must
    // be odd; explicit central_distance below the spacing bound is rejected by
    // validation unless the violated pairs are overlap-exempt.
    struct RaaOptions
    {
        std::optional<int> num_rays;
        std::optional<double> central_distance;
        bool allow_overlap = false;
    };

    // Build a full-angle RAA. D defaults to the minimum central distance that
    // keeps the first elements of adjacent rays half a wavelength apart:
    //     D = lambda / (4*sin(0.5*arcsin(2/M)))
    // strict sizing:      N = floor(2*(pi - arcsin(lambda/(4D)))/arcsin(2/M) + 1),
    //                     decremented to odd if even
    // approximate sizing: N = largest odd integer <= floor(M*pi)
    // Throws invalid_parameter (M < 2, spacing violations) or degenerate_array
    // (N < 3, or end rays closer than half the ray spacing without allow_overlap).
    RaaParams build_raa(int elements_per_ray, double wavelength,
                        RaaSizing sizing = RaaSizing::strict, const RaaOptions &options = {});

    // Minimum admissible central distance for a given M
    double raa_min_central_distance(int elements_per_ray, double wavelength);

    struct ElementPosition
    {
        int ray_index;     // signed ray index n (sector index for ULA, 0 for UCA)
        int element_index; // m, 1-based
        double x;          // [m]
        double y;          // [m]
    };

    // All N*M element positions, ray index ascending then element index
    // ascending. Position of element (n, m): (-L_m*sin eta_n, L_m*cos eta_n).
    std::vector<ElementPosition> element_positions(const RaaParams &raa);

    // Exhaustive minimum pairwise element distance. Pairs on rays whose
    // orientations coincide modulo 2*pi are skipped when allow_overlap is set
    // (they are the same physical ray written twice).
    double min_pairwise_distance(const RaaParams &raa);

    // Re-check all RaaParams invariants; throws on violation.
    void validate(const RaaParams &raa);

    // ---------------------------------------------------------------- ULA

    // Cell-sectoring baseline: num_sectors independent M-element uniform
    // linear arrays, one per angular sector, boresights equally spaced with
    // sector 0 looking along the +x reference axis.
    struct UlaSectorParams
    {
        int elements_per_array = 0; // M
        int num_sectors = 3;
        std::vector<double> sector_boresights; // AoA frame, wrapped to (-pi, pi]
        double wavelength = 0.0;

        double sector_width() const { return two_pi / num_sectors; }
    };

    UlaSectorParams build_ula_sectors(int elements_per_array, double wavelength, int num_sectors = 3);

    // Canonical panel layout for geometry dumps: elements on a line through
    // the origin perpendicular to the sector boresight, centered, lambda/2 apart.
    std::vector<ElementPosition> element_positions(const UlaSectorParams &ula, int sector);

    // ---------------------------------------------------------------- UCA

    // Uniform circular array baseline. Element n (1-based) sits at angle
    // phi_n = 2*pi*(n-1)/N on a circle of radius a. In standard mode the
    // radius follows a = N*lambda/(4*pi) (half-wavelength arc spacing).
    struct UcaParams
    {
        int num_elements = 0; // N
        double radius = 0.0;  // a [m]
        std::vector<double> element_orientations; // phi_n in [0, 2*pi)
        double wavelength = 0.0;
    };

    UcaParams build_uca(int num_elements, double wavelength);
    UcaParams build_uca_explicit(int num_elements, double wavelength, double radius);

    std::vector<ElementPosition> element_positions(const UcaParams &uca);
}

#endif
