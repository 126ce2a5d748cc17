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

#include "omnicell/radiation_patterns.hpp"

#include <cmath>
#include <string>

#include "omnicell/errors.hpp"

namespace omnicell
{
    const char *architecture_name(Architecture a)
    {
        switch (a)
        {
        case Architecture::raa:
            return "raa";
        case Architecture::ula_hbf:
            return "ula";
        case Architecture::uca:
            return "uca";
        }
        return "?";
    }

    kernels::RayPatternSpec make_ray_spec(const RaaParams &raa, const ElementPattern &pattern)
    {
        kernels::RayPatternSpec spec;
        spec.elements = raa.elements_per_ray;
        spec.phase_coeff = two_pi / raa.wavelength * raa.central_distance + 0.5 * pi * (raa.elements_per_ray - 1);
        spec.directional = pattern.kind == PatternKind::directional_3gpp ? 1 : 0;
        spec.gain_coeff = 12.0 / (pattern.zeta_3db * pattern.zeta_3db);
        spec.a_max_db = pattern.a_max_db;
        return spec;
    }

    std::vector<std::complex<double>> sula_response_vector(int m_elements, double zeta)
    {
        if (m_elements < 1)
            throw invalid_parameter("m_elements must be >= 1");
        std::vector<std::complex<double>> v(static_cast<std::size_t>(m_elements));
        double s = std::sin(zeta);
        for (int m = 1; m <= m_elements; ++m)
            v[static_cast<std::size_t>(m - 1)] = std::polar(1.0, pi * (m - 1) * s);
        return v;
    }

    std::complex<double> raa_first_element_factor(const RaaParams &raa, const ElementPattern &pattern,
                                                  double phi, int ray_index)
    {
        double zeta = wrap_pi(phi - raa.orientation(ray_index));
        double amp = element_amplitude(pattern, zeta);
        return std::polar(amp, two_pi / raa.wavelength * raa.central_distance * std::sin(zeta));
    }

    ResponseEvaluation raa_response(const RaaParams &raa, const ElementPattern &pattern,
                                    double phi, ResponseMethod method)
    {
        ResponseEvaluation r;
        r.architecture = Architecture::raa;
        r.aoa = phi;
        const std::size_t n = raa.ray_orientations.size();
        r.values.resize(n);

        if (method == ResponseMethod::closed_form)
        {
            auto spec = make_ray_spec(raa, pattern);
            std::vector<double> re(n), im(n);
            kernels::active().ray_response(spec, phi, raa.ray_orientations.data(), n, re.data(), im.data());
            for (std::size_t i = 0; i < n; ++i)
                r.values[i] = {re[i], im[i]};
        }
        else
        {
            // Element-wise oracle: sum the sULA steering entries times the
            // first-element factor. Plain libm arithmetic, no kernel dispatch.
            int half = (raa.num_rays - 1) / 2;
            for (int ray = -half; ray <= half; ++ray)
            {
                double zeta = wrap_pi(phi - raa.orientation(ray));
                std::complex<double> b = raa_first_element_factor(raa, pattern, phi, ray);
                std::complex<double> sum = 0.0;
                double s = std::sin(zeta);
                for (int m = 1; m <= raa.elements_per_ray; ++m)
                    sum += std::polar(1.0, pi * (m - 1) * s);
                r.values[static_cast<std::size_t>(ray + half)] = b * sum;
            }
        }
        return r;
    }

    Codebook build_dft_codebook(int m_elements, double sector_halfwidth)
    {
        if (m_elements < 2)
            throw invalid_parameter("m_elements must be >= 2");
        if (!(sector_halfwidth > 0.0) || sector_halfwidth > pi / 2.0 + 1e-12)
            throw invalid_parameter("sector_halfwidth must be in (0, pi/2]");

        int half = static_cast<int>(std::floor(m_elements * std::sin(sector_halfwidth) / 2.0));
        int n_cw = 2 * half + 1;

        Codebook cb;
        cb.kind = CodebookKind::dft_ula;
        cb.codewords.resize(m_elements, n_cw);
        cb.target_sines.resize(static_cast<std::size_t>(n_cw));
        cb.target_angles.resize(static_cast<std::size_t>(n_cw));
        for (int i = -half; i <= half; ++i)
        {
            double s = 2.0 * i / m_elements;
            std::size_t col = static_cast<std::size_t>(i + half);
            cb.target_sines[col] = s;
            cb.target_angles[col] = std::asin(s);
            for (int m = 0; m < m_elements; ++m)
                cb.codewords(m, static_cast<Eigen::Index>(col)) = std::polar(1.0, pi * m * s);
        }
        return cb;
    }

    int full_circle_codeword_count(double chi)
    {
        if (!(chi > 0.0))
            throw invalid_parameter("chi must be positive");
        return static_cast<int>(std::floor(two_pi / chi + 1e-9));
    }

    Codebook build_parametric_codebook(const UcaParams &uca, double chi, int num_codewords,
                                       double first_target, bool semicircle)
    {
        if (!(chi > 0.0))
            throw invalid_parameter("chi must be positive");
        if (num_codewords < 1)
            throw invalid_parameter("num_codewords must be >= 1");
        if (num_codewords * chi > two_pi + chi + 1e-12)
            throw invalid_parameter("num_codewords * chi exceeds the full circle");

        auto table = uca_steering_table(uca);
        const std::size_t n = static_cast<std::size_t>(uca.num_elements);

        Codebook cb;
        cb.kind = CodebookKind::parametric_uca;
        cb.semicircle = semicircle;
        cb.codewords.resize(uca.num_elements, num_codewords);
        cb.target_angles.resize(static_cast<std::size_t>(num_codewords));

        std::vector<double> re(n), im(n);
        for (int j = 0; j < num_codewords; ++j)
        {
            double target = first_target + j * chi;
            cb.target_angles[static_cast<std::size_t>(j)] = wrap_pi(target);
            kernels::active().circular_phase(target, table.mid_angle.data(), table.chord_coeff.data(),
                                             n, re.data(), im.data());
            for (std::size_t m = 0; m < n; ++m)
            {
                bool masked = semicircle &&
                              std::fabs(wrap_pi(target - uca.element_orientations[m])) > pi / 2.0;
                cb.codewords(static_cast<Eigen::Index>(m), j) =
                    masked ? std::complex<double>(0.0, 0.0) : std::complex<double>(re[m], im[m]);
            }
        }
        return cb;
    }

    Codebook build_parametric_codebook_full_circle(const UcaParams &uca, double chi, bool semicircle)
    {
        int n_cw = full_circle_codeword_count(chi);
        return build_parametric_codebook(uca, chi, n_cw, -pi + chi / 2.0, semicircle);
    }

    ResponseEvaluation ula_hbf_response(const UlaSectorParams &ula, const Codebook &codebook,
                                        const ElementPattern &pattern, double phi, int sector)
    {
        if (codebook.kind != CodebookKind::dft_ula)
            throw invalid_parameter("ula_hbf_response requires a dft_ula codebook");
        if (sector < 0 || sector >= ula.num_sectors)
            throw invalid_parameter("sector index out of range");

        double phi_rel = wrap_pi(phi - ula.sector_boresights[static_cast<std::size_t>(sector)]);
        double amp = element_amplitude(pattern, phi_rel);
        double s = std::sin(phi_rel);

        const std::size_t n = codebook.target_sines.size();
        std::vector<double> x(n), d(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = 0.5 * pi * (s - codebook.target_sines[i]);
        kernels::active().dirichlet(ula.elements_per_array, x.data(), n, d.data());

        ResponseEvaluation r;
        r.architecture = Architecture::ula_hbf;
        r.aoa = phi;
        r.values.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            r.values[i] = amp * d[i];
        return r;
    }

    UcaSteeringTable uca_steering_table(const UcaParams &uca)
    {
        UcaSteeringTable t;
        const std::size_t n = static_cast<std::size_t>(uca.num_elements);
        t.mid_angle.resize(n);
        t.chord_coeff.resize(n);
        double phi1 = uca.element_orientations[0];
        double k = 4.0 * pi / uca.wavelength * uca.radius;
        for (std::size_t i = 0; i < n; ++i)
        {
            double phin = uca.element_orientations[i];
            t.mid_angle[i] = 0.5 * (phi1 + phin);
            t.chord_coeff[i] = k * std::sin(0.5 * (phin - phi1));
        }
        return t;
    }

    std::vector<std::complex<double>> uca_response_vector(const UcaParams &uca, double phi)
    {
        auto table = uca_steering_table(uca);
        const std::size_t n = static_cast<std::size_t>(uca.num_elements);
        std::vector<double> re(n), im(n);
        kernels::active().circular_phase(phi, table.mid_angle.data(), table.chord_coeff.data(),
                                         n, re.data(), im.data());
        std::vector<std::complex<double>> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = {re[i], im[i]};
        return v;
    }

    ResponseEvaluation uca_response(const UcaParams &uca, const Codebook &codebook,
                                    const ElementPattern &pattern, double phi)
    {
        if (codebook.kind != CodebookKind::parametric_uca)
            throw invalid_parameter("uca_response requires a parametric_uca codebook");

        auto steer = uca_response_vector(uca, phi);
        Eigen::Map<const Eigen::VectorXcd> a(steer.data(), static_cast<Eigen::Index>(steer.size()));
        Eigen::VectorXcd prod = codebook.codewords.adjoint() * a;
        double amp = element_amplitude(pattern, wrap_pi(phi));

        ResponseEvaluation r;
        r.architecture = Architecture::uca;
        r.aoa = phi;
        r.values.assign(prod.data(), prod.data() + prod.size());
        for (auto &v : r.values)
            v *= amp;
        return r;
    }
}
