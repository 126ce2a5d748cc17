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

#ifndef omnicell_element_pattern_H
#define omnicell_element_pattern_H

#include <algorithm>
#include <cmath>

#include "omnicell/angles.hpp"

namespace omnicell
{
    enum class PatternKind
    {
        isotropic,
        directional_3gpp
    };

    // Per-element radiation pattern. The directional model is the standard
    // 3GPP parabolic attenuation -min[12*(zeta/zeta_3db)^2, a_max_db] with a
    // 65 deg 3 dB beamwidth and a 30 dB floor.
    struct ElementPattern
    {
        PatternKind kind = PatternKind::directional_3gpp;
        double zeta_3db = deg2rad(65.0); // [rad]
        double a_max_db = 30.0;          // attenuation floor [dB]

        static ElementPattern isotropic() { return {PatternKind::isotropic}; }
        static ElementPattern directional() { return {PatternKind::directional_3gpp}; }
    };

    // Gain in dB at relative angle zeta (wrapped to the principal interval
    // internally). 0 dB at boresight, even in zeta.
    inline double element_gain_db(const ElementPattern &p, double zeta)
    {
        if (p.kind == PatternKind::isotropic)
            return 0.0;
        double z = wrap_pi(zeta);
        double t = z / p.zeta_3db;
        return -std::min(12.0 * t * t, p.a_max_db);
    }

    // Linear power gain 10^(gain_db/10)
    inline double element_gain(const ElementPattern &p, double zeta)
    {
        if (p.kind == PatternKind::isotropic)
            return 1.0;
        return std::pow(10.0, element_gain_db(p, zeta) / 10.0);
    }

    // Field amplitude factor sqrt(element_gain)
    inline double element_amplitude(const ElementPattern &p, double zeta)
    {
        return std::sqrt(element_gain(p, zeta));
    }
}

#endif
