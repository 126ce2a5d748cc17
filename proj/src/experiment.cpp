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

#include "omnicell/experiment.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "omnicell/csv.hpp"
#include "omnicell/errors.hpp"

namespace omnicell
{
    ArchitectureSet build_architectures(const SimConfig &cfg)
    {
        ArchitectureSet a;

        double lam = cfg.scenario.wavelength();
        RaaOptions opts;
        opts.num_rays = cfg.raa.num_rays;
        opts.central_distance = cfg.raa.central_distance_m;
        opts.allow_overlap = cfg.raa.allow_overlap;
        a.raa = build_raa(cfg.raa.elements_per_ray, lam, cfg.raa.sizing, opts);
        a.raa_pattern = {cfg.raa.element_pattern, cfg.raa.zeta_3db, cfg.raa.a_max_db};

        a.ula = build_ula_sectors(cfg.ula.elements, lam, cfg.ula.sectors);
        a.ula_pattern = {cfg.ula.element_pattern, cfg.raa.zeta_3db, cfg.raa.a_max_db};
        a.dft = build_dft_codebook(cfg.ula.elements, cfg.ula.codebook_halfwidth);

        a.uca = cfg.uca.radius_mode == UcaRadiusMode::standard
                    ? build_uca(cfg.uca.elements, lam)
                    : build_uca_explicit(cfg.uca.elements, lam, cfg.uca.radius_m);
        double chi = cfg.uca_codeword_spacing();
        bool pattern_semi = cfg.uca.element_selection == UcaElementSelection::semicircle;
        bool link_semi = cfg.uca.element_selection != UcaElementSelection::full;
        a.uca_pattern_codebook = build_parametric_codebook_full_circle(a.uca, chi, pattern_semi);
        a.uca_link_codebook = pattern_semi == link_semi
                                  ? a.uca_pattern_codebook
                                  : build_parametric_codebook_full_circle(a.uca, chi, link_semi);
        a.uca_noise_factor = cfg.uca.noise_model == UcaNoiseModel::as_written
                                 ? static_cast<double>(cfg.raa.elements_per_ray)
                                 : static_cast<double>(cfg.uca.elements);
        return a;
    }

    Architecture architecture_from_name(const std::string &name)
    {
        if (name == "raa")
            return Architecture::raa;
        if (name == "ula")
            return Architecture::ula_hbf;
        if (name == "uca")
            return Architecture::uca;
        throw invalid_parameter("unknown architecture '" + name + "'");
    }

    ScenarioRealization draw_realization(const ScenarioConfig &cfg, std::uint64_t seed)
    {
        ScenarioRealization r;
        r.seed = seed;
        r.num_rf_chains = cfg.num_rf_chains;
        r.users = draw_all_users(cfg, seed);
        return r;
    }

    BranchSpace link_branch_space(Architecture arch, const ArchitectureSet &arches,
                                  const std::vector<PathSet> &users)
    {
        switch (arch)
        {
        case Architecture::raa:
            return raa_branch_space(users, arches.raa, arches.raa_pattern);
        case Architecture::ula_hbf:
            return ula_branch_space(users, arches.ula, arches.ula_pattern, arches.dft);
        case Architecture::uca:
            return uca_branch_space(users, arches.uca, arches.uca_link_codebook,
                                    arches.uca_noise_factor, arches.ula.num_sectors);
        }
        throw invalid_parameter("unknown architecture");
    }

    LinkReport evaluate_link(Architecture arch, const ArchitectureSet &arches,
                             const ScenarioRealization &realization,
                             const std::string &strategy, double pbar_t)
    {
        auto space = link_branch_space(arch, arches, realization.users);
        int n_rf = realization.num_rf_chains > 0 ? realization.num_rf_chains
                                                 : static_cast<int>(realization.users.size());
        if (strategy == "greedy")
            return select_greedy(space, pbar_t, n_rf).report;
        if (strategy == "exhaustive")
            return select_exhaustive(space, pbar_t, n_rf).report;
        if (strategy == "min_angle")
            return select_min_angle(space, dominant_azimuths(realization.users), pbar_t, n_rf).report;
        throw invalid_parameter("unknown strategy '" + strategy + "'");
    }

    // ---------------------------------------------------------------- sumrate

    SumRateResult run_sumrate_experiment(const SimConfig &cfg)
    {
        auto arches = build_architectures(cfg);
        const int n_rf = cfg.scenario.num_rf_chains;
        const auto &snrs = cfg.scenario.snr_db_grid;
        const int n_seeds = cfg.run.num_seeds;

        struct SeedResult
        {
            // per (arch, snr): link report
            std::vector<LinkReport> reports;
        };
        std::vector<SeedResult> results(static_cast<std::size_t>(n_seeds));

        auto work_one_seed = [&](int s)
        {
            std::uint64_t seed = cfg.scenario.seed + static_cast<std::uint64_t>(s);
            auto realization = draw_realization(cfg.scenario, seed);
            SeedResult out;
            for (const auto &arch_name : cfg.run.architectures)
            {
                Architecture arch = architecture_from_name(arch_name);
                auto space = link_branch_space(arch, arches, realization.users);
                for (double snr_db : snrs)
                {
                    double pbar = std::pow(10.0, snr_db / 10.0);
                    LinkReport rep;
                    if (cfg.run.strategy == "greedy")
                        rep = select_greedy(space, pbar, n_rf).report;
                    else if (cfg.run.strategy == "exhaustive")
                        rep = select_exhaustive(space, pbar, n_rf).report;
                    else
                        rep = select_min_angle(space, dominant_azimuths(realization.users), pbar, n_rf).report;
                    out.reports.push_back(std::move(rep));
                }
            }
            results[static_cast<std::size_t>(s)] = std::move(out);
        };

        int n_threads = cfg.run.threads > 0 ? cfg.run.threads
                                            : static_cast<int>(std::thread::hardware_concurrency());
        n_threads = std::max(1, std::min(n_threads, n_seeds));
        if (n_threads == 1)
        {
            for (int s = 0; s < n_seeds; ++s)
                work_one_seed(s);
        }
        else
        {
            // Workers pull seed indices; results land in per-seed slots and are
            // merged in seed order below, so the output does not depend on the
            // worker count.
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(n_threads));
            for (int t = 0; t < n_threads; ++t)
                pool.emplace_back([&]
                                  {
                    for (;;)
                    {
                        int s = next.fetch_add(1);
                        if (s >= n_seeds)
                            return;
                        work_one_seed(s);
                    } });
            for (auto &th : pool)
                th.join();
        }

        SumRateResult out;
        CsvBuilder csv("architecture,seed,snr_db,user,sinr_db,sum_rate_bpshz,strategy");
        std::map<std::pair<std::string, double>, std::vector<double>> bucket;
        for (int s = 0; s < n_seeds; ++s)
        {
            std::uint64_t seed = cfg.scenario.seed + static_cast<std::uint64_t>(s);
            for (const auto &rep : results[static_cast<std::size_t>(s)].reports)
            {
                std::string arch = architecture_name(rep.architecture);
                for (std::size_t k = 0; k < rep.sinr_db.size(); ++k)
                {
                    csv.field(arch)
                        .field(seed)
                        .field(rep.snr_db)
                        .field(static_cast<int>(k))
                        .field(rep.sinr_db[k])
                        .field(rep.sum_rate)
                        .field(rep.strategy);
                    csv.end_row();
                }
                bucket[{arch, rep.snr_db}].push_back(rep.sum_rate);
            }
        }
        out.csv = csv.str();

        for (const auto &[key, values] : bucket)
        {
            SumRateAggregate agg;
            agg.architecture = key.first;
            agg.snr_db = key.second;
            agg.num_seeds = static_cast<int>(values.size());
            double mean = 0.0;
            for (double v : values)
                mean += v;
            mean /= static_cast<double>(values.size());
            double var = 0.0;
            for (double v : values)
                var += (v - mean) * (v - mean);
            agg.mean_sum_rate = mean;
            agg.std_sum_rate = values.size() > 1 ? std::sqrt(var / (static_cast<double>(values.size()) - 1.0)) : 0.0;
            out.aggregates.push_back(agg);
        }
        return out;
    }

    // ---------------------------------------------------------------- commands

    namespace
    {
        std::string geometry_csv_raa(const RaaParams &raa)
        {
            CsvBuilder csv("ray_index,element_index,x_m,y_m");
            for (const auto &p : element_positions(raa))
            {
                csv.field(p.ray_index).field(p.element_index).field(p.x).field(p.y);
                csv.end_row();
            }
            return csv.str();
        }

        std::string geometry_csv_elements(const std::vector<ElementPosition> &pos)
        {
            CsvBuilder csv("element_index,x_m,y_m");
            for (const auto &p : pos)
            {
                csv.field(p.element_index).field(p.x).field(p.y);
                csv.end_row();
            }
            return csv.str();
        }

        bool wants(const SimConfig &cfg, const char *arch)
        {
            for (const auto &a : cfg.run.architectures)
                if (a == arch)
                    return true;
            return false;
        }

        std::string pattern_csv(const std::vector<double> &grid,
                                const std::vector<std::vector<std::complex<double>>> &values)
        {
            // One row per (angle, branch) plus an envelope pseudo-branch with
            // index -1 carrying max_n |r_n| for the angle.
            CsvBuilder csv("phi_rad,branch_index,mag,mag_db,phase_rad");
            for (std::size_t g = 0; g < grid.size(); ++g)
            {
                double envelope = 0.0;
                for (std::size_t b = 0; b < values[g].size(); ++b)
                {
                    double mag = std::abs(values[g][b]);
                    envelope = std::max(envelope, mag);
                    csv.field(grid[g])
                        .field(static_cast<int>(b))
                        .field(mag)
                        .field(20.0 * std::log10(std::max(mag, 1e-300)))
                        .field(std::arg(values[g][b]));
                    csv.end_row();
                }
                csv.field(grid[g])
                    .field(-1)
                    .field(envelope)
                    .field(20.0 * std::log10(std::max(envelope, 1e-300)))
                    .field(0.0);
                csv.end_row();
            }
            return csv.str();
        }

        std::vector<double> angle_grid(int points)
        {
            // uniform over (-pi, pi], endpoint included
            std::vector<double> grid(static_cast<std::size_t>(points));
            for (int i = 0; i < points; ++i)
                grid[static_cast<std::size_t>(i)] = -pi + two_pi * (i + 1) / points;
            return grid;
        }
    }

    CommandOutputs run_geometry(const SimConfig &cfg)
    {
        auto arches = build_architectures(cfg);
        CommandOutputs out;
        std::ostringstream sum;

        if (wants(cfg, "raa"))
        {
            out.files.emplace_back("geometry_raa.csv", geometry_csv_raa(arches.raa));
            const auto &raa = arches.raa;
            sum << "raa: N=" << raa.num_rays << " rays, M=" << raa.elements_per_ray
                << " elements/ray, D=" << format_double(raa.central_distance * 1e3)
                << " mm, ray spacing=" << format_double(rad2deg(raa.orientation_spacing()))
                << " deg, lambda=" << format_double(raa.wavelength * 1e3) << " mm\n";
        }
        if (wants(cfg, "ula"))
        {
            for (int p = 0; p < arches.ula.num_sectors; ++p)
                out.files.emplace_back("geometry_ula_sector" + std::to_string(p) + ".csv",
                                       geometry_csv_elements(element_positions(arches.ula, p)));
            sum << "ula: " << arches.ula.num_sectors << " sectors x "
                << arches.ula.elements_per_array << " elements, boresight spacing="
                << format_double(rad2deg(arches.ula.sector_width())) << " deg\n";
        }
        if (wants(cfg, "uca"))
        {
            out.files.emplace_back("geometry_uca.csv",
                                   geometry_csv_elements(element_positions(arches.uca)));
            sum << "uca: " << arches.uca.num_elements << " elements, radius="
                << format_double(arches.uca.radius * 1e3) << " mm\n";
        }
        out.summary = sum.str();
        return out;
    }

    CommandOutputs run_pattern(const SimConfig &cfg)
    {
        auto arches = build_architectures(cfg);
        auto grid = angle_grid(cfg.run.angle_grid_points);
        CommandOutputs out;
        std::ostringstream sum;

        if (wants(cfg, "raa"))
        {
            std::vector<std::vector<std::complex<double>>> vals(grid.size());
            for (std::size_t g = 0; g < grid.size(); ++g)
                vals[g] = raa_response(arches.raa, arches.raa_pattern, grid[g]).values;
            out.files.emplace_back("pattern_raa.csv", pattern_csv(grid, vals));
            sum << "raa: " << arches.raa.num_rays << " branches over " << grid.size() << " angles\n";
        }
        if (wants(cfg, "ula"))
        {
            std::vector<std::vector<std::complex<double>>> vals(grid.size());
            for (std::size_t g = 0; g < grid.size(); ++g)
            {
                auto &row = vals[g];
                for (int p = 0; p < arches.ula.num_sectors; ++p)
                {
                    auto r = ula_hbf_response(arches.ula, arches.dft, arches.ula_pattern, grid[g], p);
                    row.insert(row.end(), r.values.begin(), r.values.end());
                }
            }
            out.files.emplace_back("pattern_ula.csv", pattern_csv(grid, vals));
            sum << "ula: " << arches.ula.num_sectors * arches.dft.num_codewords()
                << " branches over " << grid.size() << " angles\n";
        }
        if (wants(cfg, "uca"))
        {
            auto iso = ElementPattern::isotropic();
            std::vector<std::vector<std::complex<double>>> vals(grid.size());
            for (std::size_t g = 0; g < grid.size(); ++g)
                vals[g] = uca_response(arches.uca, arches.uca_pattern_codebook, iso, grid[g]).values;
            out.files.emplace_back("pattern_uca.csv", pattern_csv(grid, vals));
            sum << "uca: " << arches.uca_pattern_codebook.num_codewords()
                << " branches over " << grid.size() << " angles\n";
        }
        out.summary = sum.str();
        return out;
    }

    CommandOutputs run_sumrate(const SimConfig &cfg)
    {
        auto result = run_sumrate_experiment(cfg);

        CommandOutputs out;
        out.files.emplace_back("sumrate.csv", result.csv);

        nlohmann::json agg = nlohmann::json::array();
        std::ostringstream sum;
        sum << "mean sum rate [bit/s/Hz] over " << cfg.run.num_seeds << " seeds ("
            << cfg.run.strategy << "):\n";
        for (const auto &a : result.aggregates)
        {
            nlohmann::json j;
            j["architecture"] = a.architecture;
            j["snr_db"] = a.snr_db;
            j["mean_sum_rate"] = a.mean_sum_rate;
            j["std_sum_rate"] = a.std_sum_rate;
            j["num_seeds"] = a.num_seeds;
            agg.push_back(j);
            sum << "  " << a.architecture << " @ " << a.snr_db << " dB: "
                << format_double(a.mean_sum_rate) << " +- " << format_double(a.std_sum_rate) << "\n";
        }
        nlohmann::json doc;
        doc["aggregates"] = agg;
        out.files.emplace_back("sumrate_aggregate.json", doc.dump(2) + "\n");
        out.summary = sum.str();
        return out;
    }

    CommandOutputs run_cost(const SimConfig &cfg)
    {
        auto arches = build_architectures(cfg);
        const auto &p = cfg.prices;
        int n = arches.raa.num_rays;
        int m = arches.raa.elements_per_ray;
        int n_rf = cfg.scenario.num_rf_chains;
        int sectors = cfg.ula.sectors;

        CostReport report = make_cost_report(n, m, n_rf, sectors, p);

        CsvBuilder csv("item,quantity,unit_price_usd,subtotal_usd");
        csv.field("raa_antenna").field(n * m).field(p.cost_antenna).field(n * m * p.cost_antenna);
        csv.end_row();
        csv.field("raa_switch").field(n_rf * n / 2.0).field(p.cost_switch).field(n_rf * n * p.cost_switch / 2.0);
        csv.end_row();
        csv.field("ula_shifter").field(n_rf * m).field(p.cost_shifter).field(n_rf * m * p.cost_shifter);
        csv.end_row();
        csv.field("ula_antenna").field(sectors * m).field(p.cost_antenna).field(sectors * m * p.cost_antenna);
        csv.end_row();
        csv.field("total_raa").field("").field("").field(report.cost_raa);
        csv.end_row();
        csv.field("total_ula").field("").field("").field(report.cost_ula);
        csv.end_row();
        csv.field("cost_ratio").field("").field("").field(report.ratio);
        csv.end_row();
        if (report.breakeven_antenna_price)
        {
            csv.field("breakeven_antenna_price").field("").field("").field(*report.breakeven_antenna_price);
            csv.end_row();
        }

        char line[160];
        std::ostringstream sum;
        std::snprintf(line, sizeof(line), "%-28s %14s\n", "item", "USD");
        sum << line;
        std::snprintf(line, sizeof(line), "%-28s %14.2f\n", "ray array total", report.cost_raa);
        sum << line;
        std::snprintf(line, sizeof(line), "%-28s %14.2f\n", "ULA sectoring total", report.cost_ula);
        sum << line;
        std::snprintf(line, sizeof(line), "%-28s %13.2f%%\n", "cost ratio", report.ratio * 100.0);
        sum << line;
        if (report.breakeven_antenna_price)
        {
            double be = *report.breakeven_antenna_price;
            if (be >= 0.0)
                std::snprintf(line, sizeof(line), "%-28s %14.2f\n", "breakeven antenna price", be);
            else
                std::snprintf(line, sizeof(line), "%-28s %14s\n", "breakeven antenna price",
                              "none (never cheaper)");
            sum << line;
        }
        else
        {
            std::snprintf(line, sizeof(line), "%-28s %14s\n", "breakeven antenna price", "n/a");
            sum << line;
        }

        CommandOutputs out;
        out.files.emplace_back("cost.csv", csv.str());
        out.summary = sum.str();
        return out;
    }
}
