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

#ifndef omnicell_radiation_patterns_H
#define omnicell_radiation_patterns_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "omnicell/array_geometry.hpp"
#include "omnicell/element_pattern.hpp"
#include "omnicell/kernels/kernels.hpp"

namespace omnicell
{
    enum class Architecture
    {
        raa,
        ula_hbf,
        uca
    };

    const char *architecture_name(Architecture a);

    // Complex per-branch output (N rays, or N' codewords) for one AoA
    struct ResponseEvaluation
    {
        Architecture architecture;
        double aoa = 0.0; // phi [rad]
        std::vector<std::complex<double>> values;

        int branch_count() const { return static_cast<int>(values.size()); }
    };

    enum class ResponseMethod
    {
        closed_form, // Dirichlet-ratio expression, limit-evaluated at sin(zeta) = 0
        brute_force  // element-wise summation of steering vector times first-element factor
    };

    // ------------------------------------------------------------- RAA

    kernels::RayPatternSpec make_ray_spec(const RaaParams &raa, const ElementPattern &pattern);

    // Steering vector of one directly-fed sub-array: entry m (1-based) is
    // exp(i*pi*(m-1)*sin(zeta)).
    std::vector<std::complex<double>> sula_response_vector(int m_elements, double zeta);

    // First-element factor of ray n: sqrt(G(zeta_n)) * exp(i*(2*pi/lambda)*D*sin(zeta_n))
    // with zeta_n = wrap(phi - eta_n).
    std::complex<double> raa_first_element_factor(const RaaParams &raa, const ElementPattern &pattern,
                                                  double phi, int ray_index);

    // Output of all N rays for a plane wave from AoA phi. closed_form and
    // brute_force agree to better than 1e-9 absolute per entry; brute_force
    // never touches the SIMD kernels and serves as the independent oracle.
    ResponseEvaluation raa_response(const RaaParams &raa, const ElementPattern &pattern,
                                    double phi, ResponseMethod method = ResponseMethod::closed_form);

    // ------------------------------------------------------------- codebooks

    enum class CodebookKind
    {
        dft_ula,
        parametric_uca
    };

    struct Codebook
    {
        CodebookKind kind;
        Eigen::MatrixXcd codewords;        // elements x num_codewords
        std::vector<double> target_sines;  // dft_ula only, sin of target directions
        std::vector<double> target_angles; // target directions (sector-relative for dft_ula)
        bool semicircle = false;           // parametric_uca: back-half elements zeroed per codeword

        int num_codewords() const { return static_cast<int>(codewords.cols()); }
    };

    // DFT codebook: target sines spaced exactly 2/M, centered at 0, inside
    // [-sin(halfwidth), sin(halfwidth)]; N' = 2*floor(M*sin(halfwidth)/2) + 1.
    Codebook build_dft_codebook(int m_elements, double sector_halfwidth);

    // Codewords that fit a full circle at spacing chi, with a one-ulp slack on
    // the floor so exact divisors (e.g. 2*pi / arcsin(1/2) = 12) keep their
    // last codeword.
    int full_circle_codeword_count(double chi);

    // Steering-vector codebook at target angles first_target + k*chi,
    // k = 0..num_codewords-1. In semicircle mode the entries of elements
    // facing away from the target (|wrap(target - phi_n)| > pi/2) are zeroed.
    Codebook build_parametric_codebook(const UcaParams &uca, double chi, int num_codewords,
                                       double first_target, bool semicircle = false);

    // Same with the default start -pi + chi/2 and a full-circle count
    Codebook build_parametric_codebook_full_circle(const UcaParams &uca, double chi,
                                                   bool semicircle = false);

    // ------------------------------------------------------------- baselines

    // Hybrid-beamforming response of sector p's ULA: per codeword n',
    // sqrt(G(phi')) * sin((pi/2)*M*(sin phi' - s_n')) / sin((pi/2)*(sin phi' - s_n'))
    // with phi' = wrap(phi - boresight_p) and the removable singularities
    // (including the sine-domain alias at |sin phi' - s_n'| = 2) taken by limit.
    ResponseEvaluation ula_hbf_response(const UlaSectorParams &ula, const Codebook &codebook,
                                        const ElementPattern &pattern, double phi, int sector);

    // Precomputed constants of the circular-array steering phase:
    // entry n of the steering vector is exp(i * chord_coeff_n * sin(phi - mid_angle_n)).
    struct UcaSteeringTable
    {
        std::vector<double> mid_angle;   // (phi_1 + phi_n)/2
        std::vector<double> chord_coeff; // (4*pi/lambda)*a*sin((phi_n - phi_1)/2)
    };
    UcaSteeringTable uca_steering_table(const UcaParams &uca);

    // Steering vector relative to element 1 (entry 1 is exactly 1)
    std::vector<std::complex<double>> uca_response_vector(const UcaParams &uca, double phi);

    // Codebook response sqrt(G(phi)) * A^H * a(phi); the matched codeword of a
    // full-circle codebook reaches |entry| = N.
    ResponseEvaluation uca_response(const UcaParams &uca, const Codebook &codebook,
                                    const ElementPattern &pattern, double phi);
}

#endif
