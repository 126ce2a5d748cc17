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

#ifndef omnicell_errors_H
#define omnicell_errors_H

#include <stdexcept>
#include <string>

namespace omnicell
{
    // Invalid geometry or scenario input (M too small, spacing violation, ...)
    struct invalid_parameter : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    // Array construction produced fewer than 3 rays or coincident end rays
    struct degenerate_array : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    // Beamforming vector with zero norm
    struct invalid_beamformer : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    // Exhaustive search refused because the instance is too large
    struct size_guard : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Cost breakeven has no solution (denominator <= 0)
    struct no_breakeven : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Configuration parse/validation failure; `field` names the offending key
    struct config_error : std::runtime_error
    {
        std::string field;
        config_error(std::string field_path, const std::string &what)
            : std::runtime_error(field_path + ": " + what), field(std::move(field_path)) {}
    };
}

#endif
