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
// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma on x86-64 only and
// reached through the runtime dispatch table; tails shorter than 4 lanes run
// through the same vector code on padded stack buffers so every element takes
// the identical arithmetic path.

#include <cstring>

#include "avx2_math.hpp"
#include "omnicell/kernels/kernels.hpp"

namespace omnicell::kernels
{
    namespace
    {
        using namespace omnicell::kernels::avx2;

        constexpr double half_pi_v = 1.57079632679489661923;
        constexpr double ln10_over_20 = 0.11512925464970228;

        struct RaySpecV
        {
            __m256d half_pi, phase_coeff, m_real, limit_thr, gain_coeff, a_max, neg_ln10_20;
            int m;
            bool directional;

            explicit RaySpecV(const RayPatternSpec &s)
                : half_pi(vset1(half_pi_v)),
                  phase_coeff(vset1(s.phase_coeff)),
                  m_real(vset1(static_cast<double>(s.elements))),
                  limit_thr(vset1(dirichlet_limit_threshold)),
                  gain_coeff(vset1(s.gain_coeff)),
                  a_max(vset1(s.a_max_db)),
                  neg_ln10_20(vset1(-ln10_over_20)),
                  m(s.elements),
                  directional(s.directional != 0) {}
        };

        // sin(m*x)/sin(x) with the limit m*cos(m*x)/cos(x) where sin(x) ~ 0
        inline __m256d vdirichlet(__m256d x, __m256d m_real, __m256d limit_thr)
        {
            __m256d mx = _mm256_mul_pd(m_real, x);
            __m256d sx, cx, smx, cmx;
            vsincos(x, &sx, &cx);
            vsincos(mx, &smx, &cmx);
            __m256d ratio = _mm256_div_pd(smx, sx);
            __m256d lim = _mm256_div_pd(_mm256_mul_pd(m_real, cmx), cx);
            const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
            __m256d near = _mm256_cmp_pd(_mm256_and_pd(sx, abs_mask), limit_thr, _CMP_LT_OQ);
            return _mm256_blendv_pd(ratio, lim, near);
        }

        // Complex ray response of 4 rays at AoA phi
        inline void ray_block(const RaySpecV &v, __m256d phi, __m256d eta,
                              __m256d *out_re, __m256d *out_im)
        {
            __m256d zeta = vwrap_pi(_mm256_sub_pd(phi, eta));
            __m256d s, c_unused, amp;
            vsincos(zeta, &s, &c_unused);
            amp = vdirichlet(_mm256_mul_pd(v.half_pi, s), v.m_real, v.limit_thr);
            if (v.directional)
            {
                __m256d db = _mm256_min_pd(_mm256_mul_pd(v.gain_coeff, _mm256_mul_pd(zeta, zeta)), v.a_max);
                amp = _mm256_mul_pd(amp, vexp(_mm256_mul_pd(db, v.neg_ln10_20)));
            }
            __m256d ph = _mm256_mul_pd(v.phase_coeff, s);
            __m256d sp, cp;
            vsincos(ph, &sp, &cp);
            *out_re = _mm256_mul_pd(amp, cp);
            *out_im = _mm256_mul_pd(amp, sp);
        }

        void ray_response_avx2(const RayPatternSpec &spec, double phi,
                               const double *eta, std::size_t n,
                               double *out_re, double *out_im)
        {
            RaySpecV v(spec);
            __m256d vphi = vset1(phi);
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                __m256d re, im;
                ray_block(v, vphi, _mm256_loadu_pd(eta + i), &re, &im);
                _mm256_storeu_pd(out_re + i, re);
                _mm256_storeu_pd(out_im + i, im);
            }
            if (i < n)
            {
                double pad[4] = {eta[n - 1], eta[n - 1], eta[n - 1], eta[n - 1]};
                std::memcpy(pad, eta + i, (n - i) * sizeof(double));
                __m256d re, im;
                double re_s[4], im_s[4];
                ray_block(v, vphi, _mm256_loadu_pd(pad), &re, &im);
                _mm256_storeu_pd(re_s, re);
                _mm256_storeu_pd(im_s, im);
                std::memcpy(out_re + i, re_s, (n - i) * sizeof(double));
                std::memcpy(out_im + i, im_s, (n - i) * sizeof(double));
            }
        }

        void ray_accumulate_avx2(const RayPatternSpec &spec,
                                 const double *path_phi, const double *alpha_re,
                                 const double *alpha_im, std::size_t n_paths,
                                 const double *eta, std::size_t n_rays,
                                 double *acc_re, double *acc_im)
        {
            RaySpecV v(spec);
            for (std::size_t l = 0; l < n_paths; ++l)
            {
                __m256d vphi = vset1(path_phi[l]);
                __m256d ar = vset1(alpha_re[l]);
                __m256d ai = vset1(alpha_im[l]);
                std::size_t i = 0;
                for (; i + 4 <= n_rays; i += 4)
                {
                    __m256d re, im;
                    ray_block(v, vphi, _mm256_loadu_pd(eta + i), &re, &im);
                    __m256d acc_r = _mm256_loadu_pd(acc_re + i);
                    __m256d acc_i = _mm256_loadu_pd(acc_im + i);
                    acc_r = _mm256_fmadd_pd(ar, re, _mm256_fnmadd_pd(ai, im, acc_r));
                    acc_i = _mm256_fmadd_pd(ar, im, _mm256_fmadd_pd(ai, re, acc_i));
                    _mm256_storeu_pd(acc_re + i, acc_r);
                    _mm256_storeu_pd(acc_im + i, acc_i);
                }
                for (; i < n_rays; ++i)
                {
                    double pad[4] = {eta[i], eta[i], eta[i], eta[i]};
                    __m256d re, im;
                    ray_block(v, vphi, _mm256_loadu_pd(pad), &re, &im);
                    double re_s[4], im_s[4];
                    _mm256_storeu_pd(re_s, re);
                    _mm256_storeu_pd(im_s, im);
                    acc_re[i] += alpha_re[l] * re_s[0] - alpha_im[l] * im_s[0];
                    acc_im[i] += alpha_re[l] * im_s[0] + alpha_im[l] * re_s[0];
                }
            }
        }

        void dirichlet_avx2(int m, const double *x, std::size_t n, double *out)
        {
            __m256d m_real = vset1(static_cast<double>(m));
            __m256d thr = vset1(dirichlet_limit_threshold);
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
                _mm256_storeu_pd(out + i, vdirichlet(_mm256_loadu_pd(x + i), m_real, thr));
            if (i < n)
            {
                double pad[4] = {x[n - 1], x[n - 1], x[n - 1], x[n - 1]};
                std::memcpy(pad, x + i, (n - i) * sizeof(double));
                double res[4];
                _mm256_storeu_pd(res, vdirichlet(_mm256_loadu_pd(pad), m_real, thr));
                std::memcpy(out + i, res, (n - i) * sizeof(double));
            }
        }

        void circular_phase_avx2(double phi, const double *u, const double *w,
                                 std::size_t n, double *out_re, double *out_im)
        {
            __m256d vphi = vset1(phi);
            std::size_t i = 0;
            auto block = [&](__m256d uu, __m256d ww, __m256d *re, __m256d *im)
            {
                __m256d arg = _mm256_mul_pd(ww, vsin(_mm256_sub_pd(vphi, uu)));
                vsincos(arg, im, re);
            };
            for (; i + 4 <= n; i += 4)
            {
                __m256d re, im;
                block(_mm256_loadu_pd(u + i), _mm256_loadu_pd(w + i), &re, &im);
                _mm256_storeu_pd(out_re + i, re);
                _mm256_storeu_pd(out_im + i, im);
            }
            if (i < n)
            {
                double pu[4] = {u[n - 1], u[n - 1], u[n - 1], u[n - 1]};
                double pw[4] = {w[n - 1], w[n - 1], w[n - 1], w[n - 1]};
                std::memcpy(pu, u + i, (n - i) * sizeof(double));
                std::memcpy(pw, w + i, (n - i) * sizeof(double));
                __m256d re, im;
                double re_s[4], im_s[4];
                block(_mm256_loadu_pd(pu), _mm256_loadu_pd(pw), &re, &im);
                _mm256_storeu_pd(re_s, re);
                _mm256_storeu_pd(im_s, im);
                std::memcpy(out_re + i, re_s, (n - i) * sizeof(double));
                std::memcpy(out_im + i, im_s, (n - i) * sizeof(double));
            }
        }

        void ramp_accumulate_avx2(double step, double w_re, double w_im,
                                  std::size_t n, double *acc_re, double *acc_im)
        {
            __m256d vstep = vset1(step);
            __m256d wr = vset1(w_re), wi = vset1(w_im);
            const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                __m256d idx = _mm256_add_pd(vset1(static_cast<double>(i)), lane);
                __m256d sp, cp;
                vsincos(_mm256_mul_pd(vstep, idx), &sp, &cp);
                __m256d acc_r = _mm256_loadu_pd(acc_re + i);
                __m256d acc_i = _mm256_loadu_pd(acc_im + i);
                acc_r = _mm256_fmadd_pd(wr, cp, _mm256_fnmadd_pd(wi, sp, acc_r));
                acc_i = _mm256_fmadd_pd(wr, sp, _mm256_fmadd_pd(wi, cp, acc_i));
                _mm256_storeu_pd(acc_re + i, acc_r);
                _mm256_storeu_pd(acc_im + i, acc_i);
            }
            for (; i < n; ++i)
            {
                __m256d sp, cp;
                vsincos(vset1(step * static_cast<double>(i)), &sp, &cp);
                double s[4], c[4];
                _mm256_storeu_pd(s, sp);
                _mm256_storeu_pd(c, cp);
                acc_re[i] += w_re * c[0] - w_im * s[0];
                acc_im[i] += w_re * s[0] + w_im * c[0];
            }
        }

        void axpy_avx2(double a_re, double a_im, const double *v_re, const double *v_im,
                       std::size_t n, double *acc_re, double *acc_im)
        {
            __m256d ar = vset1(a_re), ai = vset1(a_im);
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                __m256d re = _mm256_loadu_pd(v_re + i);
                __m256d im = _mm256_loadu_pd(v_im + i);
                __m256d acc_r = _mm256_loadu_pd(acc_re + i);
                __m256d acc_i = _mm256_loadu_pd(acc_im + i);
                acc_r = _mm256_fmadd_pd(ar, re, _mm256_fnmadd_pd(ai, im, acc_r));
                acc_i = _mm256_fmadd_pd(ar, im, _mm256_fmadd_pd(ai, re, acc_i));
                _mm256_storeu_pd(acc_re + i, acc_r);
                _mm256_storeu_pd(acc_im + i, acc_i);
            }
            for (; i < n; ++i)
            {
                acc_re[i] += a_re * v_re[i] - a_im * v_im[i];
                acc_im[i] += a_re * v_im[i] + a_im * v_re[i];
            }
        }
    }

    const Funcs &avx2_table()
    {
        static const Funcs t = {
            &ray_response_avx2,
            &ray_accumulate_avx2,
            &dirichlet_avx2,
            &circular_phase_avx2,
            &ramp_accumulate_avx2,
            &axpy_avx2,
            "avx2",
        };
        return t;
    }
}
