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

#ifndef omnicell_kernels_H
#define omnicell_kernels_H

#include <cstddef>

// Data-parallel inner loops of the simulator: per-ray response evaluation,
// multipath projection, codebook Dirichlet responses and circular-array
// steering phases. Each kernel has a scalar reference implementation and an
// AVX2 variant; the active backend is picked at runtime from CPU features
// (override with the OMNICELL_KERNELS environment variable or force()).
// Complex data is passed as separate re/im arrays (SoA).
//
// The AVX2 variants use their own vectorized sin/cos/exp and are equivalence-
// tested against the scalar reference; arguments of the trigonometric phases
// must stay below ~1e6 rad, which every caller in this library satisfies by
// construction (phases are bounded by a few hundred).

namespace omnicell::kernels
{
    enum class Backend
    {
        scalar,
        avx2
    };

    // Constants of one ray/pattern family, precomputed once per array.
    struct RayPatternSpec
    {
        int elements;       // M, elements per ray
        double phase_coeff; // (2*pi/lambda)*D + (pi/2)*(M-1); multiplies sin(zeta)
        int directional;    // 0 = isotropic, 1 = 3GPP parabolic
        double gain_coeff;  // 12 / zeta_3db^2  [dB per rad^2]
        double a_max_db;    // attenuation floor [dB]
    };

    struct Funcs
    {
        // r_n(phi) for rays with orientations eta[0..n): complex response of
        // each ray to a plane wave from AoA phi (Dirichlet ratio with the
        // removable singularity evaluated by limit, element gain, first-element
        // phase). out_re/out_im have n entries.
        void (*ray_response)(const RayPatternSpec &spec, double phi,
                             const double *eta, std::size_t n,
                             double *out_re, double *out_im);

        // acc_j += sum_l alpha_l * r_j(phi_l): fused multipath projection into
        // ray space. acc_re/acc_im must be pre-initialized (usually to zero).
        void (*ray_accumulate)(const RayPatternSpec &spec,
                               const double *path_phi, const double *alpha_re,
                               const double *alpha_im, std::size_t n_paths,
                               const double *eta, std::size_t n_rays,
                               double *acc_re, double *acc_im);

        // out_j = sin(m*x_j)/sin(x_j) with the limit m*cos(m*x)/cos(x) taken
        // where |sin(x)| < 1e-10 (x = 0 and x = +-pi singularities).
        void (*dirichlet)(int m, const double *x, std::size_t n, double *out);

        // out_j = exp(i * w_j * sin(phi - u_j)): circular-array steering
        // phases from per-element midpoint angles u and chord coefficients w.
        void (*circular_phase)(double phi, const double *u, const double *w,
                               std::size_t n, double *out_re, double *out_im);

        // acc_m += (w_re + i*w_im) * exp(i*m*step), m = 0..n-1: weighted
        // linear phase ramp (ULA steering accumulation).
        void (*ramp_accumulate)(double step, double w_re, double w_im,
                                std::size_t n, double *acc_re, double *acc_im);

        // acc_j += (a_re + i*a_im) * v_j
        void (*axpy)(double a_re, double a_im, const double *v_re, const double *v_im,
                     std::size_t n, double *acc_re, double *acc_im);

        const char *name;
    };

    // Threshold below which |sin(x)| switches the Dirichlet ratio to its limit
    inline constexpr double dirichlet_limit_threshold = 1e-10;

    bool available(Backend backend);
    const Funcs &table(Backend backend); // throws invalid_parameter if unavailable

    // Active table: best available backend, or the one named by the
    // OMNICELL_KERNELS env var ("scalar" / "avx2") at first use.
    const Funcs &active();
    Backend active_backend();
    void force(Backend backend); // for tests; throws if unavailable
}

#endif
