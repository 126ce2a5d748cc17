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
// 4-lane double-precision sin/cos/exp for the AVX2 kernels. Classic
// Cody-Waite reduction with the fdlibm pi/2 split and minimax polynomial
// kernels; good to a couple of ulps for |x| up to ~2^20, far beyond the
// bounded phases this library produces. Internal header, AVX2+FMA only.

#ifndef omnicell_kernels_avx2_math_H
#define omnicell_kernels_avx2_math_H

#include <immintrin.h>

namespace omnicell::kernels::avx2
{
    inline __m256d vset1(double v) { return _mm256_set1_pd(v); }

    // Wrap to (-pi, pi]: x - 2*pi*ceil((x - pi)/(2*pi)). Matches the scalar
    // wrap_pi operation-for-operation (mul then sub, no fused step) so lanes
    // agree bitwise with the scalar path whenever the quotient agrees.
    inline __m256d vwrap_pi(__m256d x)
    {
        const __m256d pi = vset1(3.14159265358979311600e+00);
        const __m256d two_pi = vset1(6.28318530717958623200e+00);
        __m256d q = _mm256_ceil_pd(_mm256_div_pd(_mm256_sub_pd(x, pi), two_pi));
        return _mm256_sub_pd(x, _mm256_mul_pd(two_pi, q));
    }

    // sin and cos of four doubles
    inline void vsincos(__m256d x, __m256d *out_sin, __m256d *out_cos)
    {
        const __m256d two_over_pi = vset1(6.36619772367581382433e-01);
        const __m256d pio2_1 = vset1(1.57079632673412561417e+00);  // first 33 bits of pi/2
        const __m256d pio2_1t = vset1(6.07710050650619224932e-11); // pi/2 - pio2_1

        __m256d fn = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        // r = x - fn*pi/2, extended precision in two steps
        __m256d r = _mm256_fnmadd_pd(pio2_1, fn, x);
        r = _mm256_fnmadd_pd(pio2_1t, fn, r);

        __m256d z = _mm256_mul_pd(r, r);

        // sin(r) on |r| <= pi/4
        __m256d ps = vset1(1.58969099521155010221e-10);
        ps = _mm256_fmadd_pd(ps, z, vset1(-2.50507602534068634195e-08));
        ps = _mm256_fmadd_pd(ps, z, vset1(2.75573137070700676789e-06));
        ps = _mm256_fmadd_pd(ps, z, vset1(-1.98412698298579493134e-04));
        ps = _mm256_fmadd_pd(ps, z, vset1(8.33333333332248946124e-03));
        ps = _mm256_fmadd_pd(ps, z, vset1(-1.66666666666666324348e-01));
        __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(z, r), ps, r);

        // cos(r) on |r| <= pi/4
        __m256d pc = vset1(-1.13596475577881948265e-11);
        pc = _mm256_fmadd_pd(pc, z, vset1(2.08757232129817482790e-09));
        pc = _mm256_fmadd_pd(pc, z, vset1(-2.75573143513906633035e-07));
        pc = _mm256_fmadd_pd(pc, z, vset1(2.48015872894767294178e-05));
        pc = _mm256_fmadd_pd(pc, z, vset1(-1.38888888888741095749e-03));
        pc = _mm256_fmadd_pd(pc, z, vset1(4.16666666666666019037e-02));
        __m256d c = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc,
                                    _mm256_fnmadd_pd(z, vset1(0.5), vset1(1.0)));

        // Quadrant fix-up from n mod 4:
        //   bit0 swaps sin/cos, bit1 flips the sin sign,
        //   bit0 XOR bit1 flips the cos sign.
        __m128i qi = _mm256_cvtpd_epi32(fn);
        __m128i one32 = _mm_set1_epi32(1);
        __m128i b0 = _mm_cmpeq_epi32(_mm_and_si128(qi, one32), one32);
        __m128i b1 = _mm_cmpeq_epi32(_mm_and_si128(_mm_srli_epi32(qi, 1), one32), one32);
        __m256d swap = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(b0));
        __m256d flip_s = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(b1));
        __m256d flip_c = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_xor_si128(b0, b1)));

        const __m256d sign = vset1(-0.0);
        __m256d sin_v = _mm256_blendv_pd(s, c, swap);
        __m256d cos_v = _mm256_blendv_pd(c, s, swap);
        sin_v = _mm256_xor_pd(sin_v, _mm256_and_pd(flip_s, sign));
        cos_v = _mm256_xor_pd(cos_v, _mm256_and_pd(flip_c, sign));

        *out_sin = sin_v;
        *out_cos = cos_v;
    }

    inline __m256d vsin(__m256d x)
    {
        __m256d s, c;
        vsincos(x, &s, &c);
        return s;
    }

    // exp of four doubles; intended for the bounded gain range [-8, 1]
    inline __m256d vexp(__m256d x)
    {
        const __m256d log2e = vset1(1.44269504088896338700e+00);
        const __m256d ln2_hi = vset1(6.93147180369123816490e-01);
        const __m256d ln2_lo = vset1(1.90821492927058770002e-10);

        __m256d fn = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        __m256d r = _mm256_fnmadd_pd(ln2_hi, fn, x);
        r = _mm256_fnmadd_pd(ln2_lo, fn, r);

        // Taylor-Horner of exp(r) on |r| <= ln(2)/2; remainder < 1e-17 relative
        __m256d p = vset1(1.60590438368216145994e-10); // 1/13!
        p = _mm256_fmadd_pd(p, r, vset1(2.08767569878680989792e-09));
        p = _mm256_fmadd_pd(p, r, vset1(2.50521083854417187751e-08));
        p = _mm256_fmadd_pd(p, r, vset1(2.75573192239858906526e-07));
        p = _mm256_fmadd_pd(p, r, vset1(2.75573192239858906526e-06));
        p = _mm256_fmadd_pd(p, r, vset1(2.48015873015873015873e-05));
        p = _mm256_fmadd_pd(p, r, vset1(1.98412698412698412698e-04));
        p = _mm256_fmadd_pd(p, r, vset1(1.38888888888888888889e-03));
        p = _mm256_fmadd_pd(p, r, vset1(8.33333333333333333333e-03));
        p = _mm256_fmadd_pd(p, r, vset1(4.16666666666666666667e-02));
        p = _mm256_fmadd_pd(p, r, vset1(1.66666666666666666667e-01));
        p = _mm256_fmadd_pd(p, r, vset1(0.5));
        p = _mm256_fmadd_pd(p, r, vset1(1.0));
        p = _mm256_fmadd_pd(p, r, vset1(1.0));

        // scale by 2^n via the exponent field
        __m256i n64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(fn));
        __m256i bits = _mm256_add_epi64(_mm256_castpd_si256(p), _mm256_slli_epi64(n64, 52));
        return _mm256_castsi256_pd(bits);
    }
}

#endif
