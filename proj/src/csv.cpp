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

#include "omnicell/csv.hpp"

#include <cstdio>

namespace omnicell
{
    std::string format_double(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return buf;
    }

    CsvBuilder::CsvBuilder(const std::string &header)
    {
        out_ = header;
        out_ += '\n';
    }

    CsvBuilder &CsvBuilder::field(double v)
    {
        return field(format_double(v));
    }

    CsvBuilder &CsvBuilder::field(int v)
    {
        return field(std::to_string(v));
    }

    CsvBuilder &CsvBuilder::field(std::int64_t v)
    {
        return field(std::to_string(v));
    }

    CsvBuilder &CsvBuilder::field(std::uint64_t v)
    {
        return field(std::to_string(v));
    }

    CsvBuilder &CsvBuilder::field(const std::string &v)
    {
        if (row_open_)
            out_ += ',';
        out_ += v;
        row_open_ = true;
        return *this;
    }

    void CsvBuilder::end_row()
    {
        out_ += '\n';
        row_open_ = false;
    }
}
