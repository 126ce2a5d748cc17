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
// Command line front end: geometry / pattern / sumrate / cost. Each command
// reads one JSON config (or the built-in defaults), applies flag overrides,
// writes its CSV/JSON artifacts plus a manifest.json into the output
// directory and prints a short summary.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "omnicell/config.hpp"
#include "omnicell/errors.hpp"
#include "omnicell/experiment.hpp"
#include "omnicell/kernels/kernels.hpp"
#include "omnicell/manifest.hpp"
#include "omnicell/version.hpp"

namespace
{
    struct CliOptions
    {
        std::string config_path;
        std::string out_dir;
        std::string arch_list;
        std::string strategy;
        std::string snr_spec;
        std::uint64_t seed = 0;
        bool seed_set = false;
    };

    void add_common_options(CLI::App *cmd, CliOptions &opt)
    {
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--out", opt.out_dir, "output directory (overrides run.out_dir)");
        cmd->add_option("--arch", opt.arch_list, "comma separated architectures (raa,ula,uca)");
        cmd->add_option("--strategy", opt.strategy, "selection strategy (greedy|exhaustive|min_angle)");
        cmd->add_option("--snr", opt.snr_spec, "SNR sweep lo:hi:step in dB");
        cmd->add_option("--seed", opt.seed, "base seed (overrides scenario.seed)")
            ->each([&opt](const std::string &) { opt.seed_set = true; });
    }

    std::vector<double> parse_snr_spec(const std::string &spec)
    {
        double lo, hi, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) || hi < lo)
            throw omnicell::config_error("--snr", "expected lo:hi:step with step > 0");
        std::vector<double> grid;
        for (double v = lo; v <= hi + 1e-9; v += step)
            grid.push_back(v);
        return grid;
    }

    omnicell::SimConfig resolve_config(const CliOptions &opt)
    {
        omnicell::SimConfig cfg;
        if (!opt.config_path.empty())
            cfg = omnicell::load_config_file(opt.config_path);

        if (opt.seed_set)
            cfg.scenario.seed = opt.seed;
        if (!opt.out_dir.empty())
            cfg.run.out_dir = opt.out_dir;
        if (!opt.strategy.empty())
        {
            if (opt.strategy != "greedy" && opt.strategy != "exhaustive" && opt.strategy != "min_angle")
                throw omnicell::config_error("--strategy", "must be greedy, exhaustive or min_angle");
            cfg.run.strategy = opt.strategy;
        }
        if (!opt.snr_spec.empty())
            cfg.scenario.snr_db_grid = parse_snr_spec(opt.snr_spec);
        if (!opt.arch_list.empty())
        {
            cfg.run.architectures.clear();
            std::istringstream ss(opt.arch_list);
            std::string name;
            while (std::getline(ss, name, ','))
            {
                if (name != "raa" && name != "ula" && name != "uca")
                    throw omnicell::config_error("--arch", "unknown architecture '" + name + "'");
                cfg.run.architectures.push_back(name);
            }
            if (cfg.run.architectures.empty())
                throw omnicell::config_error("--arch", "must name at least one architecture");
        }
        omnicell::validate(cfg);
        return cfg;
    }

    int run_command(const std::string &name, const CliOptions &opt,
                    omnicell::CommandOutputs (*fn)(const omnicell::SimConfig &))
    {
        auto t0 = std::chrono::steady_clock::now();
        auto cfg = resolve_config(opt);
        auto outputs = fn(cfg);
        auto t1 = std::chrono::steady_clock::now();

        std::filesystem::path dir(cfg.run.out_dir);
        std::filesystem::create_directories(dir);

        omnicell::RunManifest manifest;
        manifest.command = name;
        manifest.version = OMNICELL_VERSION;
        manifest.seed = cfg.scenario.seed;
        manifest.kernel_backend = omnicell::kernels::active().name;
        manifest.config_snapshot = omnicell::serialize_config(cfg);
        manifest.created_unix_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::system_clock::now().time_since_epoch())
                                       .count();
        manifest.timings_ms.emplace_back(
            name, std::chrono::duration<double, std::milli>(t1 - t0).count());

        for (const auto &[file_name, content] : outputs.files)
        {
            std::ofstream out(dir / file_name, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write " + (dir / file_name).string());
            out << content;
            manifest.add_output(file_name, content);
        }
        {
            std::ofstream out(dir / "manifest.json", std::ios::binary);
            out << manifest.to_json();
        }

        std::cout << outputs.summary;
        std::cout << "wrote " << outputs.files.size() << " file(s) + manifest.json to "
                  << dir.string() << "\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"full-angle ray antenna array / cell sectoring link-level simulator"};
    app.set_version_flag("--version", OMNICELL_VERSION);
    app.require_subcommand(1);

    CliOptions opt;
    auto *geometry = app.add_subcommand("geometry", "dump element positions and derived parameters");
    auto *pattern = app.add_subcommand("pattern", "sweep response patterns over the AoA grid");
    auto *sumrate = app.add_subcommand("sumrate", "Monte Carlo multi-user sum-rate comparison");
    auto *cost = app.add_subcommand("cost", "hardware cost comparison and breakeven analysis");
    for (auto *cmd : {geometry, pattern, sumrate, cost})
        add_common_options(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (geometry->parsed())
            return run_command("geometry", opt, &omnicell::run_geometry);
        if (pattern->parsed())
            return run_command("pattern", opt, &omnicell::run_pattern);
        if (sumrate->parsed())
            return run_command("sumrate", opt, &omnicell::run_sumrate);
        if (cost->parsed())
            return run_command("cost", opt, &omnicell::run_cost);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
