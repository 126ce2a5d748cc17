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

#ifndef omnicell_csv_H
#define omnicell_csv_H

#include <cstdint>
#include <string>

namespace omnicell
{
    // Floating point CSV fields carry 12 significant digits so downstream
    // plotting and regression tests can share files byte-for-byte.
    std::string format_double(double v);

    class CsvBuilder
    {
    public:
        explicit CsvBuilder(const std::string &header);

        CsvBuilder &field(double v);
        CsvBuilder &field(int v);
        CsvBuilder &field(std::int64_t v);
        CsvBuilder &field(std::uint64_t v);
        CsvBuilder &field(const std::string &v);
        void end_row();

        const std::string &str() const { return out_; }

    private:
        std::string out_;
        bool row_open_ = false;
    };
}

#endif
