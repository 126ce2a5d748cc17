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
//
// Scalar reference kernels. These are the semantic ground truth the SIMD
// variants are equivalence-tested against; keep them straightforward.

#include <algorithm>
#include <cmath>

#include "omnicell/angles.hpp"
#include "omnicell/kernels/kernels.hpp"

namespace omnicell::kernels
{
    namespace
    {
        constexpr double ln10_over_20 = 0.11512925464970228; // ln(10)/20

        inline double dirichlet_ratio(int m, double x)
        {
            double sx = std::sin(x);
            if (std::fabs(sx) < dirichlet_limit_threshold)
                return m * std::cos(m * x) / std::cos(x);
            return std::sin(m * x) / sx;
        }

        // sqrt of the linear power gain at relative angle zeta
        inline double amplitude_gain(const RayPatternSpec &spec, double zeta)
        {
            if (!spec.directional)
                return 1.0;
            double db = std::min(spec.gain_coeff * zeta * zeta, spec.a_max_db);
            return std::exp(-db * ln10_over_20);
        }

        void ray_response_scalar(const RayPatternSpec &spec, double phi,
                                 const double *eta, std::size_t n,
                                 double *out_re, double *out_im)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                double zeta = wrap_pi(phi - eta[i]);
                double s = std::sin(zeta);
                double amp = amplitude_gain(spec, zeta) * dirichlet_ratio(spec.elements, 0.5 * pi * s);
                double ph = spec.phase_coeff * s;
                out_re[i] = amp * std::cos(ph);
                out_im[i] = amp * std::sin(ph);
            }
        }

        void ray_accumulate_scalar(const RayPatternSpec &spec,
                                   const double *path_phi, const double *alpha_re,
                                   const double *alpha_im, std::size_t n_paths,
                                   const double *eta, std::size_t n_rays,
                                   double *acc_re, double *acc_im)
        {
            for (std::size_t l = 0; l < n_paths; ++l)
            {
                double ar = alpha_re[l], ai = alpha_im[l];
                for (std::size_t i = 0; i < n_rays; ++i)
                {
                    double zeta = wrap_pi(path_phi[l] - eta[i]);
                    double s = std::sin(zeta);
                    double amp = amplitude_gain(spec, zeta) * dirichlet_ratio(spec.elements, 0.5 * pi * s);
                    double ph = spec.phase_coeff * s;
                    double re = amp * std::cos(ph);
                    double im = amp * std::sin(ph);
                    acc_re[i] += ar * re - ai * im;
                    acc_im[i] += ar * im + ai * re;
                }
            }
        }

        void dirichlet_scalar(int m, const double *x, std::size_t n, double *out)
        {
            for (std::size_t i = 0; i < n; ++i)
                out[i] = dirichlet_ratio(m, x[i]);
        }

        void circular_phase_scalar(double phi, const double *u, const double *w,
                                   std::size_t n, double *out_re, double *out_im)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                double arg = w[i] * std::sin(phi - u[i]);
                out_re[i] = std::cos(arg);
                out_im[i] = std::sin(arg);
            }
        }

        void ramp_accumulate_scalar(double step, double w_re, double w_im,
                                    std::size_t n, double *acc_re, double *acc_im)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                double ph = step * static_cast<double>(i);
                double re = std::cos(ph);
                double im = std::sin(ph);
                acc_re[i] += w_re * re - w_im * im;
                acc_im[i] += w_re * im + w_im * re;
            }
        }

        void axpy_scalar(double a_re, double a_im, const double *v_re, const double *v_im,
                         std::size_t n, double *acc_re, double *acc_im)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                acc_re[i] += a_re * v_re[i] - a_im * v_im[i];
                acc_im[i] += a_re * v_im[i] + a_im * v_re[i];
            }
        }
    }

    const Funcs &scalar_table()
    {
        static const Funcs t = {
            &ray_response_scalar,
            &ray_accumulate_scalar,
            &dirichlet_scalar,
            &circular_phase_scalar,
            &ramp_accumulate_scalar,
            &axpy_scalar,
            "scalar",
        };
        return t;
    }
}
