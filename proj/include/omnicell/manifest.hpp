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

#ifndef omnicell_manifest_H
#define omnicell_manifest_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omnicell
{
    std::uint64_t fnv1a64(std::string_view data);

    // Record of one CLI run: resolved config, output files with checksums,
    // wall-clock timings. Timestamps and timings live only here so the data
    // files themselves stay byte-reproducible.
    struct RunManifest
    {
        std::string command;
        std::string version;
        std::uint64_t seed = 0;
        std::string kernel_backend;
        std::string config_snapshot; // serialized SimConfig JSON

        struct OutputFile
        {
            std::string name;
            std::size_t bytes = 0;
            std::uint64_t checksum_fnv1a64 = 0;
        };
        std::vector<OutputFile> outputs;
        std::vector<std::pair<std::string, double>> timings_ms;
        std::int64_t created_unix_ms = 0;

        void add_output(const std::string &name, std::string_view content);
        std::string to_json() const;
    };
}

#endif
