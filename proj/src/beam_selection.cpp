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

#include "omnicell/beam_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "omnicell/errors.hpp"

namespace omnicell
{
    namespace
    {
        constexpr double condition_guard = 1e12;

        // Rows of `responses` picked by the selection, in chain order
        Eigen::MatrixXcd gather_selected(const Eigen::MatrixXcd &responses, const SelectionMatrix &s)
        {
            Eigen::MatrixXcd g(s.num_chains(), responses.cols());
            for (int i = 0; i < s.num_chains(); ++i)
                g.row(i) = responses.row(s.assigned_branch[static_cast<std::size_t>(i)]);
            return g;
        }

        struct MmseEvaluation
        {
            Eigen::MatrixXcd f; // n x K
            std::vector<double> sinr;
            double sum_rate = 0.0;
            bool regularized = false;
        };

        // MMSE beamformers and the resulting SINRs for the selected branch
        // responses gsel (n_chains x K).
        MmseEvaluation mmse_evaluate(const Eigen::MatrixXcd &gsel, double pbar_t, double nu)
        {
            const Eigen::Index n = gsel.rows();
            const Eigen::Index k_users = gsel.cols();

            MmseEvaluation ev;
            ev.f.resize(n, k_users);
            ev.sinr.resize(static_cast<std::size_t>(k_users));

            Eigen::MatrixXcd gram = gsel * gsel.adjoint(); // sum_i g_i g_i^H
            double loading = nu / pbar_t;

            for (Eigen::Index k = 0; k < k_users; ++k)
            {
                Eigen::VectorXcd g = gsel.col(k);
                Eigen::MatrixXcd c = gram - g * g.adjoint();
                c.diagonal().array() += loading;

                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(c, Eigen::EigenvaluesOnly);
                double lo = eig.eigenvalues().minCoeff();
                double hi = eig.eigenvalues().maxCoeff();
                if (!(lo > 0.0) || hi / lo > condition_guard)
                {
                    c.diagonal().array() += 1e-9 * c.real().trace() / static_cast<double>(n);
                    ev.regularized = true;
                }
                ev.f.col(k) = c.llt().solve(g);
            }

            for (Eigen::Index k = 0; k < k_users; ++k)
            {
                Eigen::VectorXcd f = ev.f.col(k);
                double fn2 = f.squaredNorm();
                if (fn2 == 0.0) // zero channel through the selected branches
                {
                    ev.sinr[static_cast<std::size_t>(k)] = 0.0;
                    continue;
                }
                Eigen::RowVectorXcd s = f.adjoint() * gsel;
                double sig = std::norm(s(k));
                double interference = s.squaredNorm() - sig;
                double value = pbar_t * sig / (pbar_t * interference + nu * fn2);
                ev.sinr[static_cast<std::size_t>(k)] = value;
            }

            ev.sum_rate = 0.0;
            for (double v : ev.sinr)
                ev.sum_rate += std::log2(1.0 + v);
            return ev;
        }

        double sum_rate_of(const Eigen::MatrixXcd &responses, const std::vector<int> &branches,
                           double pbar_t, double nu)
        {
            Eigen::MatrixXcd gsel(static_cast<Eigen::Index>(branches.size()), responses.cols());
            for (std::size_t i = 0; i < branches.size(); ++i)
                gsel.row(static_cast<Eigen::Index>(i)) = responses.row(branches[i]);
            return mmse_evaluate(gsel, pbar_t, nu).sum_rate;
        }

        // Candidates, widened to every branch when too few for the chains
        std::vector<int> effective_candidates(const BranchSpace &space, int n_rf)
        {
            if (static_cast<int>(space.candidates.size()) >= n_rf)
                return space.candidates;
            std::vector<int> all(static_cast<std::size_t>(space.num_branches()));
            std::iota(all.begin(), all.end(), 0);
            return all;
        }

        LinkReport make_report(const BranchSpace &space, const SelectionMatrix &s,
                               const MmseEvaluation &ev, double pbar_t, const std::string &strategy)
        {
            LinkReport r;
            r.architecture = space.architecture;
            r.snr_db = 10.0 * std::log10(pbar_t);
            r.sinr_linear = ev.sinr;
            r.sinr_db.resize(ev.sinr.size());
            for (std::size_t k = 0; k < ev.sinr.size(); ++k)
                r.sinr_db[k] = 10.0 * std::log10(std::max(ev.sinr[k], 1e-300));
            r.sum_rate = ev.sum_rate;
            r.selection = s;
            r.strategy = strategy;
            return r;
        }
    }

    Eigen::MatrixXd SelectionMatrix::dense() const
    {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(num_chains(), num_branches);
        for (int i = 0; i < num_chains(); ++i)
            m(i, assigned_branch[static_cast<std::size_t>(i)]) = 1.0;
        return m;
    }

    void validate(const SelectionMatrix &s)
    {
        std::set<int> seen;
        for (int b : s.assigned_branch)
        {
            if (b < 0 || b >= s.num_branches)
                throw invalid_parameter("selection assigns an out-of-range branch");
            if (!seen.insert(b).second)
                throw invalid_parameter("selection assigns a branch to more than one RF chain");
        }
    }

    double sinr(const Eigen::MatrixXcd &branch_responses, const SelectionMatrix &s,
                const BeamformingMatrix &f, double pbar_t, double noise_factor, int user)
    {
        validate(s);
        if (f.f.rows() != s.num_chains())
            throw invalid_parameter("beamformer chain count does not match the selection");
        if (user < 0 || user >= branch_responses.cols())
            throw invalid_parameter("user index out of range");

        Eigen::VectorXcd fk = f.f.col(user);
        double fn2 = fk.squaredNorm();
        if (fn2 == 0.0)
            throw invalid_beamformer("beamforming vector has zero norm");

        Eigen::MatrixXcd gsel = gather_selected(branch_responses, s);
        Eigen::RowVectorXcd proj = fk.adjoint() * gsel;
        double sig = std::norm(proj(user));
        double interference = proj.squaredNorm() - sig;
        // ||f^H S||^2 == ||f||^2: rows of S are distinct one-hot rows
        return pbar_t * sig / (pbar_t * interference + noise_factor * fn2);
    }

    MmseResult mmse_beamformer(const Eigen::MatrixXcd &branch_responses, const SelectionMatrix &s,
                               double pbar_t, double noise_factor)
    {
        validate(s);
        auto ev = mmse_evaluate(gather_selected(branch_responses, s), pbar_t, noise_factor);
        return {BeamformingMatrix{std::move(ev.f)}, ev.regularized};
    }

    Eigen::MatrixXcd stack_channels(const std::vector<BeamSpaceChannel> &channels)
    {
        if (channels.empty())
            throw invalid_parameter("no channels given");
        const Eigen::Index n = static_cast<Eigen::Index>(channels.front().coeffs.size());
        Eigen::MatrixXcd m(n, static_cast<Eigen::Index>(channels.size()));
        for (std::size_t k = 0; k < channels.size(); ++k)
        {
            if (static_cast<Eigen::Index>(channels[k].coeffs.size()) != n)
                throw invalid_parameter("channel vectors have inconsistent lengths");
            m.col(static_cast<Eigen::Index>(k)) =
                Eigen::Map<const Eigen::VectorXcd>(channels[k].coeffs.data(), n);
        }
        return m;
    }

    double sinr_raa(const std::vector<BeamSpaceChannel> &channels, const SelectionMatrix &s,
                    const BeamformingMatrix &f, double pbar_t, int m_elements, int user)
    {
        return sinr(stack_channels(channels), s, f, pbar_t, static_cast<double>(m_elements), user);
    }

    double sinr_baseline(const std::vector<BeamSpaceChannel> &element_channels, const Codebook &codebook,
                         const SelectionMatrix &s, const BeamformingMatrix &f,
                         double pbar_t, double noise_factor, int user)
    {
        Eigen::MatrixXcd responses = codebook.codewords.adjoint() * stack_channels(element_channels);
        return sinr(responses, s, f, pbar_t, noise_factor, user);
    }

    BranchSpace raa_branch_space(const std::vector<PathSet> &users, const RaaParams &raa,
                                 const ElementPattern &pattern)
    {
        BranchSpace space;
        space.architecture = Architecture::raa;
        space.noise_factor = static_cast<double>(raa.elements_per_ray);

        std::vector<BeamSpaceChannel> h;
        h.reserve(users.size());
        for (const auto &u : users)
            h.push_back(project_raa(u, raa, pattern));
        space.responses = stack_channels(h);

        space.target_angles = raa.ray_orientations; // response peaks at AoA = eta_n
        space.branch_sector.assign(static_cast<std::size_t>(raa.num_rays), -1);
        space.user_sector.assign(users.size(), -1);
        space.candidates.resize(static_cast<std::size_t>(raa.num_rays));
        std::iota(space.candidates.begin(), space.candidates.end(), 0);
        return space;
    }

    BranchSpace ula_branch_space(const std::vector<PathSet> &users, const UlaSectorParams &ula,
                                 const ElementPattern &pattern, const Codebook &codebook)
    {
        if (codebook.kind != CodebookKind::dft_ula)
            throw invalid_parameter("ula_branch_space requires a dft_ula codebook");

        const int n_cw = codebook.num_codewords();
        BranchSpace space;
        space.architecture = Architecture::ula_hbf;
        space.noise_factor = static_cast<double>(ula.elements_per_array);
        space.responses.resize(static_cast<Eigen::Index>(ula.num_sectors) * n_cw,
                               static_cast<Eigen::Index>(users.size()));
        space.target_angles.resize(static_cast<std::size_t>(ula.num_sectors) * n_cw);
        space.branch_sector.resize(static_cast<std::size_t>(ula.num_sectors) * n_cw);

        for (int p = 0; p < ula.num_sectors; ++p)
        {
            std::vector<BeamSpaceChannel> h;
            h.reserve(users.size());
            for (const auto &u : users)
                h.push_back(project_ula(u, ula, pattern, p));
            space.responses.middleRows(static_cast<Eigen::Index>(p) * n_cw, n_cw) =
                codebook.codewords.adjoint() * stack_channels(h);

            double boresight = ula.sector_boresights[static_cast<std::size_t>(p)];
            for (int i = 0; i < n_cw; ++i)
            {
                std::size_t b = static_cast<std::size_t>(p * n_cw + i);
                space.target_angles[b] = wrap_pi(boresight + codebook.target_angles[static_cast<std::size_t>(i)]);
                space.branch_sector[b] = p;
            }
        }

        space.user_sector.reserve(users.size());
        std::set<int> serving;
        for (const auto &u : users)
        {
            int p = assign_sector(u, ula, pattern);
            space.user_sector.push_back(p);
            serving.insert(p);
        }
        for (int p : serving)
            for (int i = 0; i < n_cw; ++i)
                space.candidates.push_back(p * n_cw + i);
        std::sort(space.candidates.begin(), space.candidates.end());
        return space;
    }

    namespace
    {
        // Angular sector of an AoA for a ring of equally spaced boresights
        int sector_of_angle(double angle, int num_sectors)
        {
            int best = 0;
            double best_dist = std::numeric_limits<double>::infinity();
            for (int p = 0; p < num_sectors; ++p)
            {
                double boresight = wrap_pi(two_pi * p / num_sectors);
                double d = std::fabs(wrap_pi(angle - boresight));
                if (d < best_dist)
                {
                    best_dist = d;
                    best = p;
                }
            }
            return best;
        }
    }

    BranchSpace uca_branch_space(const std::vector<PathSet> &users, const UcaParams &uca,
                                 const Codebook &codebook, double noise_factor, int num_sectors)
    {
        if (codebook.kind != CodebookKind::parametric_uca)
            throw invalid_parameter("uca_branch_space requires a parametric_uca codebook");

        BranchSpace space;
        space.architecture = Architecture::uca;
        space.noise_factor = noise_factor;

        std::vector<BeamSpaceChannel> h;
        h.reserve(users.size());
        for (const auto &u : users)
            h.push_back(project_uca(u, uca));
        space.responses = codebook.codewords.adjoint() * stack_channels(h);

        space.target_angles = codebook.target_angles;
        space.branch_sector.resize(space.target_angles.size());
        for (std::size_t b = 0; b < space.target_angles.size(); ++b)
            space.branch_sector[b] = sector_of_angle(space.target_angles[b], num_sectors);

        // Serving sector = angular third holding the most path power
        std::set<int> serving;
        for (const auto &u : users)
        {
            std::vector<double> mass(static_cast<std::size_t>(num_sectors), 0.0);
            for (std::size_t l = 0; l < u.path_count(); ++l)
                mass[static_cast<std::size_t>(sector_of_angle(u.azimuths[l], num_sectors))] +=
                    std::norm(u.gains[l]);
            int p = static_cast<int>(std::max_element(mass.begin(), mass.end()) - mass.begin());
            space.user_sector.push_back(p);
            serving.insert(p);
        }
        for (std::size_t b = 0; b < space.branch_sector.size(); ++b)
            if (serving.count(space.branch_sector[b]))
                space.candidates.push_back(static_cast<int>(b));
        return space;
    }

    LinkReport evaluate_selection(const BranchSpace &space, const SelectionMatrix &s,
                                  double pbar_t, const std::string &strategy)
    {
        validate(s);
        auto ev = mmse_evaluate(gather_selected(space.responses, s), pbar_t, space.noise_factor);
        return make_report(space, s, ev, pbar_t, strategy);
    }

    SelectionResult select_exhaustive(const BranchSpace &space, double pbar_t, int n_rf)
    {
        if (space.num_branches() > 16 || n_rf > 4)
            throw size_guard("exhaustive selection limited to 16 branches and 4 RF chains; use select_greedy");
        if (n_rf < 1 || n_rf > space.num_branches())
            throw invalid_parameter("n_rf must be in [1, num_branches]");

        auto cand = effective_candidates(space, n_rf);
        const int n = static_cast<int>(cand.size());
        if (n_rf > n)
            throw invalid_parameter("n_rf exceeds the candidate branch count");

        std::vector<int> idx(static_cast<std::size_t>(n_rf));
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<int> best;
        double best_rate = -std::numeric_limits<double>::infinity();

        // Lexicographic combination walk; strict improvement keeps the first
        // (lexicographically smallest) optimal subset.
        while (true)
        {
            std::vector<int> branches(static_cast<std::size_t>(n_rf));
            for (int i = 0; i < n_rf; ++i)
                branches[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            double rate = sum_rate_of(space.responses, branches, pbar_t, space.noise_factor);
            if (rate > best_rate)
            {
                best_rate = rate;
                best = branches;
            }

            int pos = n_rf - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - n_rf + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < n_rf; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }

        SelectionMatrix s{space.num_branches(), best};
        auto ev = mmse_evaluate(gather_selected(space.responses, s), pbar_t, space.noise_factor);
        return {s, BeamformingMatrix{ev.f}, make_report(space, s, ev, pbar_t, "exhaustive")};
    }

    SelectionResult select_greedy(const BranchSpace &space, double pbar_t, int n_rf)
    {
        if (n_rf < 1 || n_rf > space.num_branches())
            throw invalid_parameter("n_rf must be in [1, num_branches]");
        auto cand = effective_candidates(space, n_rf);
        if (n_rf > static_cast<int>(cand.size()))
            throw invalid_parameter("n_rf exceeds the candidate branch count");

        std::vector<int> chosen;
        std::vector<bool> used(cand.size(), false);
        for (int chain = 0; chain < n_rf; ++chain)
        {
            int best_pos = -1;
            double best_rate = -std::numeric_limits<double>::infinity();
            for (std::size_t pos = 0; pos < cand.size(); ++pos)
            {
                if (used[pos])
                    continue;
                std::vector<int> trial = chosen;
                trial.push_back(cand[pos]);
                double rate = sum_rate_of(space.responses, trial, pbar_t, space.noise_factor);
                if (rate > best_rate)
                {
                    best_rate = rate;
                    best_pos = static_cast<int>(pos);
                }
            }
            used[static_cast<std::size_t>(best_pos)] = true;
            chosen.push_back(cand[static_cast<std::size_t>(best_pos)]);
        }

        SelectionMatrix s{space.num_branches(), chosen};
        auto ev = mmse_evaluate(gather_selected(space.responses, s), pbar_t, space.noise_factor);
        return {s, BeamformingMatrix{ev.f}, make_report(space, s, ev, pbar_t, "greedy")};
    }

    SelectionResult select_min_angle(const BranchSpace &space, const std::vector<double> &dominant_azimuth,
                                     double pbar_t, int n_rf)
    {
        const int k_users = space.num_users();
        if (n_rf < k_users)
            throw invalid_parameter("min-angle selection needs n_rf >= num_users");
        if (static_cast<int>(dominant_azimuth.size()) != k_users)
            throw invalid_parameter("dominant azimuth count does not match user count");
        auto cand = effective_candidates(space, n_rf);
        if (n_rf > static_cast<int>(cand.size()))
            throw invalid_parameter("n_rf exceeds the candidate branch count");

        // Chains 0..K-1 belong to users 0..K-1. Repeatedly settle the
        // globally closest (user, free branch) pair so a contested branch
        // goes to the closer user and the loser falls back to its
        // next-nearest free branch.
        std::vector<int> chain_branch(static_cast<std::size_t>(n_rf), -1);
        std::vector<bool> user_done(static_cast<std::size_t>(k_users), false);
        std::vector<bool> branch_used(cand.size(), false);
        for (int round = 0; round < k_users; ++round)
        {
            int best_user = -1;
            std::size_t best_pos = 0;
            double best_dist = std::numeric_limits<double>::infinity();
            for (int k = 0; k < k_users; ++k)
            {
                if (user_done[static_cast<std::size_t>(k)])
                    continue;
                for (std::size_t pos = 0; pos < cand.size(); ++pos)
                {
                    if (branch_used[pos])
                        continue;
                    double d = std::fabs(wrap_pi(dominant_azimuth[static_cast<std::size_t>(k)] -
                                                 space.target_angles[static_cast<std::size_t>(cand[pos])]));
                    if (d < best_dist)
                    {
                        best_dist = d;
                        best_user = k;
                        best_pos = pos;
                    }
                }
            }
            chain_branch[static_cast<std::size_t>(best_user)] = cand[best_pos];
            user_done[static_cast<std::size_t>(best_user)] = true;
            branch_used[best_pos] = true;
        }

        // Leftover chains: free branches with the highest residual energy
        if (n_rf > k_users)
        {
            std::vector<std::pair<double, int>> energy;
            for (std::size_t pos = 0; pos < cand.size(); ++pos)
            {
                if (branch_used[pos])
                    continue;
                double e = space.responses.row(cand[pos]).squaredNorm();
                energy.emplace_back(-e, cand[pos]); // sort by energy desc, index asc
            }
            std::sort(energy.begin(), energy.end());
            for (int chain = k_users; chain < n_rf; ++chain)
                chain_branch[static_cast<std::size_t>(chain)] = energy[static_cast<std::size_t>(chain - k_users)].second;
        }

        SelectionMatrix s{space.num_branches(), chain_branch};
        auto ev = mmse_evaluate(gather_selected(space.responses, s), pbar_t, space.noise_factor);
        return {s, BeamformingMatrix{ev.f}, make_report(space, s, ev, pbar_t, "min_angle")};
    }

    SelectionMatrix select_min_angle(const std::vector<PathSet> &users, const RaaParams &raa, int n_rf,
                                     const ElementPattern &pattern)
    {
        auto space = raa_branch_space(users, raa, pattern);
        auto result = select_min_angle(space, dominant_azimuths(users), 1.0, n_rf);
        return result.selection;
    }
}
