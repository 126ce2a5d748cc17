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

#include "omnicell/manifest.hpp"

#include <json.hpp>

namespace omnicell
{
    std::uint64_t fnv1a64(std::string_view data)
    {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (unsigned char c : data)
        {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
        return h;
    }

    void RunManifest::add_output(const std::string &name, std::string_view content)
    {
        outputs.push_back({name, content.size(), fnv1a64(content)});
    }

    std::string RunManifest::to_json() const
    {
        nlohmann::json doc;
        doc["command"] = command;
        doc["version"] = version;
        doc["seed"] = seed;
        doc["kernel_backend"] = kernel_backend;
        doc["config"] = nlohmann::json::parse(config_snapshot);
        doc["created_unix_ms"] = created_unix_ms;
        auto &files = doc["outputs"];
        files = nlohmann::json::array();
        for (const auto &f : outputs)
        {
            nlohmann::json jf;
            jf["file"] = f.name;
            jf["bytes"] = f.bytes;
            char buf[20];
            std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(f.checksum_fnv1a64));
            jf["checksum_fnv1a64"] = buf;
            files.push_back(jf);
        }
        auto &times = doc["timings_ms"];
        times = nlohmann::json::object();
        for (const auto &[name, ms] : timings_ms)
            times[name] = ms;
        return doc.dump(2) + "\n";
    }
}
