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

#include <atomic>
#include <cstdlib>
#include <string>

#include "omnicell/errors.hpp"
#include "omnicell/kernels/kernels.hpp"

namespace omnicell::kernels
{
    const Funcs &scalar_table();
#ifdef OMNICELL_HAVE_AVX2
    const Funcs &avx2_table();
#endif

    bool available(Backend backend)
    {
        switch (backend)
        {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#ifdef OMNICELL_HAVE_AVX2
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        }
        return false;
    }

    const Funcs &table(Backend backend)
    {
        if (backend == Backend::scalar)
            return scalar_table();
#ifdef OMNICELL_HAVE_AVX2
        if (backend == Backend::avx2 && available(Backend::avx2))
            return avx2_table();
#endif
        throw invalid_parameter("kernel backend not available on this machine");
    }

    namespace
    {
        std::atomic<const Funcs *> g_active{nullptr};

        const Funcs &select_initial()
        {
            if (const char *env = std::getenv("OMNICELL_KERNELS"))
            {
                std::string name(env);
                if (name == "scalar")
                    return scalar_table();
                if (name == "avx2")
                    return table(Backend::avx2);
                throw invalid_parameter("OMNICELL_KERNELS must be 'scalar' or 'avx2', got '" + name + "'");
            }
            if (available(Backend::avx2))
                return table(Backend::avx2);
            return scalar_table();
        }
    }

    const Funcs &active()
    {
        const Funcs *t = g_active.load(std::memory_order_acquire);
        if (!t)
        {
            t = &select_initial();
            g_active.store(t, std::memory_order_release);
        }
        return *t;
    }

    Backend active_backend()
    {
        return std::string(active().name) == "avx2" ? Backend::avx2 : Backend::scalar;
    }

    void force(Backend backend)
    {
        g_active.store(&table(backend), std::memory_order_release);
    }
}
