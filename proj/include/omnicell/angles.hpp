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

#ifndef omnicell_angles_H
#define omnicell_angles_H

#include <cmath>
#include <numbers>

// Angle conventions used throughout the library:
// - Ray orientations eta_n are measured from the positive y axis.
// - Plane-wave angles of arrival (AoA) phi are measured from the positive
//   x axis, so the direction vector of an AoA phi is (cos phi, sin phi).
// The relative AoA zeta = phi - eta_n mixes the two frames on purpose; it is
// the quantity that drives every per-ray response. ray_axis_aoa() converts a
// ray orientation into the AoA-frame angle of the ray's geometric axis.

namespace omnicell
{
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    inline constexpr double deg2rad(double deg) { return deg * (pi / 180.0); }
    inline constexpr double rad2deg(double rad) { return rad * (180.0 / pi); }

    // Wrap an angle to the principal interval (-pi, pi]. Idempotent: inputs
    // already inside the interval are returned bit-identically.
    inline double wrap_pi(double x)
    {
        return x - two_pi * std::ceil((x - pi) / two_pi);
    }

    // AoA-frame angle of the axis a ray with orientation eta points along.
    // The ray axis direction is (-sin eta, cos eta); its response peak sits
    // broadside, i.e. at AoA phi = eta.
    inline double ray_axis_aoa(double eta) { return wrap_pi(eta + pi / 2.0); }

    // Inverse of ray_axis_aoa: orientation (from +y) of an axis given in the
    // AoA frame (from +x).
    inline double aoa_to_ray_orientation(double phi) { return wrap_pi(phi - pi / 2.0); }

    // Exact vacuum speed of light [m/s]
    inline constexpr double speed_of_light = 299792458.0;

    inline double wavelength_from_carrier(double f_c_hz) { return speed_of_light / f_c_hz; }
}

#endif
