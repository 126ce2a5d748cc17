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

#ifndef omnicell_beam_selection_H
#define omnicell_beam_selection_H

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "omnicell/channel_model.hpp"
#include "omnicell/radiation_patterns.hpp"

namespace omnicell
{
    // Binary RF-chain-to-branch assignment. Row i of the dense matrix has a
    // single 1 in column assigned_branch[i]; branches are used by at most one
    // chain. Stored sparse; constraints hold by construction and are
    // re-checkable with validate().
    struct SelectionMatrix
    {
        int num_branches = 0;
        std::vector<int> assigned_branch; // one branch per RF chain, pairwise distinct

        int num_chains() const { return static_cast<int>(assigned_branch.size()); }
        Eigen::MatrixXd dense() const;
    };

    void validate(const SelectionMatrix &s);

    // Baseband beamformers, one column per user
    struct BeamformingMatrix
    {
        Eigen::MatrixXcd f; // num_chains x K
    };

    struct LinkReport
    {
        Architecture architecture;
        double snr_db = 0.0;
        std::vector<double> sinr_linear;
        std::vector<double> sinr_db;
        double sum_rate = 0.0; // sum_k log2(1 + SINR_k) [bit/s/Hz]
        SelectionMatrix selection;
        std::string strategy;
    };

    // --------------------------------------------------------- SINR / MMSE

    // SINR of one user for branch responses G (num_branches x K, column k =
    // user k's response through every branch):
    //   pbar*|f^H S g_k|^2 / (pbar*sum_{i!=k} |f^H S g_i|^2 + nu*||f^H S||^2)
    // nu is the per-branch noise power factor (M for ray and DFT branches).
    // ||f^H S||^2 equals ||f||^2 because the rows of S are one-hot and
    // pairwise distinct. Scale-invariant in f. Throws invalid_beamformer on a
    // zero beamforming vector.
    double sinr(const Eigen::MatrixXcd &branch_responses, const SelectionMatrix &s,
                const BeamformingMatrix &f, double pbar_t, double noise_factor, int user);

    struct MmseResult
    {
        BeamformingMatrix f;
        bool regularized = false; // diagonal loading applied to an ill-conditioned solve
    };

    // MMSE (max-SINR) beamformers f_k = C_k^{-1} S g_k with
    // C_k = S (sum_{i!=k} g_i g_i^H + (nu/pbar) I) S^T. Solves whose condition
    // number exceeds 1e12 get diagonal loading of 1e-9*trace/n and set the
    // regularized flag.
    MmseResult mmse_beamformer(const Eigen::MatrixXcd &branch_responses, const SelectionMatrix &s,
                               double pbar_t, double noise_factor);

    // Ray-space SINR of the central full-angle array (noise factor M)
    double sinr_raa(const std::vector<BeamSpaceChannel> &channels, const SelectionMatrix &s,
                    const BeamformingMatrix &f, double pbar_t, int m_elements, int user);

    // Codeword-space SINR of a sectoring baseline: branch responses are
    // A^H h_i through the serving array, noise factor as configured.
    double sinr_baseline(const std::vector<BeamSpaceChannel> &element_channels, const Codebook &codebook,
                         const SelectionMatrix &s, const BeamformingMatrix &f,
                         double pbar_t, double noise_factor, int user);

    // Stack per-user channels into a (branches x K) response matrix
    Eigen::MatrixXcd stack_channels(const std::vector<BeamSpaceChannel> &channels);

    // ------------------------------------------------------- branch spaces

    // One architecture's selectable branches for a multi-user realization.
    // For sectoring baselines every sector's codewords are present and every
    // user's channel is evaluated through every sector's array, so
    // inter-sector leakage shows up as interference; `candidates` restricts
    // the selection search to the codewords of the users' serving sectors.
    struct BranchSpace
    {
        Architecture architecture;
        Eigen::MatrixXcd responses;      // num_branches x K
        double noise_factor = 1.0;       // nu in the SINR denominator
        std::vector<double> target_angles; // AoA-frame peak direction per branch
        std::vector<int> branch_sector;  // owning sector, -1 for ray branches
        std::vector<int> user_sector;    // serving sector per user, -1 for RAA
        std::vector<int> candidates;     // selectable branches, ascending

        int num_branches() const { return static_cast<int>(responses.rows()); }
        int num_users() const { return static_cast<int>(responses.cols()); }
    };

    BranchSpace raa_branch_space(const std::vector<PathSet> &users, const RaaParams &raa,
                                 const ElementPattern &pattern);
    BranchSpace ula_branch_space(const std::vector<PathSet> &users, const UlaSectorParams &ula,
                                 const ElementPattern &pattern, const Codebook &codebook);
    BranchSpace uca_branch_space(const std::vector<PathSet> &users, const UcaParams &uca,
                                 const Codebook &codebook, double noise_factor, int num_sectors);

    // ----------------------------------------------------------- selection

    struct SelectionResult
    {
        SelectionMatrix selection;
        BeamformingMatrix f;
        LinkReport report;
    };

    // MMSE beamformers and full link report for a fixed selection
    LinkReport evaluate_selection(const BranchSpace &space, const SelectionMatrix &s,
                                  double pbar_t, const std::string &strategy);

    // Globally optimal assignment by enumerating branch subsets (the sum rate
    // is invariant to the row order of S since the MMSE beamformers are
    // recomputed, so subsets stand in for all row permutations; the returned
    // assignment lists its branches ascending, the lexicographically smallest
    // optimal tuple). Guarded: throws size_guard for num_branches > 16 or
    // n_rf > 4, pointing the caller at select_greedy.
    SelectionResult select_exhaustive(const BranchSpace &space, double pbar_t, int n_rf);

    // Chain-by-chain greedy: each RF chain takes the unused candidate branch
    // with the best sum rate under MMSE recomputation over the chains
    // assigned so far. Deterministic; ties take the lowest branch index.
    SelectionResult select_greedy(const BranchSpace &space, double pbar_t, int n_rf);

    // Nearest-branch assignment from dominant-path azimuths: user k's chain
    // takes the candidate branch whose target angle is closest; contested
    // branches go to the closer user, the loser moves to its next-nearest
    // free branch. Chains beyond K sit on the free branches with the highest
    // residual channel energy. Requires n_rf >= K.
    SelectionResult select_min_angle(const BranchSpace &space, const std::vector<double> &dominant_azimuth,
                                     double pbar_t, int n_rf);

    // Ray-space min-angle assignment directly from path sets
    SelectionMatrix select_min_angle(const std::vector<PathSet> &users, const RaaParams &raa, int n_rf,
                                     const ElementPattern &pattern = ElementPattern::directional());
}

#endif
