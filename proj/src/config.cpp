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

#include "omnicell/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "omnicell/errors.hpp"

namespace omnicell
{
    namespace
    {
        using nlohmann::json;

        void expect_keys(const json &obj, const std::string &path, std::set<std::string> allowed)
        {
            for (auto it = obj.begin(); it != obj.end(); ++it)
                if (!allowed.count(it.key()))
                    throw config_error(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
        }

        template <typename T>
        T get_or(const json &obj, const std::string &path, const char *key, T fallback)
        {
            if (!obj.contains(key))
                return fallback;
            try
            {
                return obj.at(key).get<T>();
            }
            catch (const json::exception &)
            {
                throw config_error(path + "." + key, "wrong type");
            }
        }

        double get_number(const json &obj, const std::string &path, const char *key, double fallback)
        {
            if (!obj.contains(key))
                return fallback;
            if (!obj.at(key).is_number())
                throw config_error(path + "." + key, "must be a number");
            return obj.at(key).get<double>();
        }

        PatternKind parse_pattern(const json &obj, const std::string &path, const char *key, PatternKind fallback)
        {
            std::string v = get_or<std::string>(obj, path, key,
                                                fallback == PatternKind::isotropic ? "isotropic" : "directional_3gpp");
            if (v == "isotropic")
                return PatternKind::isotropic;
            if (v == "directional_3gpp")
                return PatternKind::directional_3gpp;
            throw config_error(path + "." + key, "must be 'isotropic' or 'directional_3gpp'");
        }

        std::vector<double> snr_grid(double lo, double hi, double step, const std::string &path)
        {
            if (!(step > 0.0))
                throw config_error(path + ".step", "must be positive");
            if (hi < lo)
                throw config_error(path + ".hi", "must be >= lo");
            std::vector<double> g;
            for (double v = lo; v <= hi + 1e-9; v += step)
                g.push_back(v);
            return g;
        }

        void parse_scenario(const json &obj, ScenarioConfig &s)
        {
            expect_keys(obj, "scenario",
                        {"f_c_hz", "users", "rf_chains", "clusters", "rays_per_cluster", "seed",
                         "snr_db", "cluster_angle_spread_deg", "intra_cluster_spread_deg",
                         "cluster_power_decay", "decay_db_per_cluster"});
            if (!obj.contains("f_c_hz"))
                throw config_error("scenario.f_c_hz", "missing required field");
            if (!obj.at("f_c_hz").is_number())
                throw config_error("scenario.f_c_hz", "must be a number");
            s.carrier_hz = obj.at("f_c_hz").get<double>();
            s.num_users = get_or<int>(obj, "scenario", "users", s.num_users);
            s.num_rf_chains = get_or<int>(obj, "scenario", "rf_chains", s.num_rf_chains);
            s.num_clusters = get_or<int>(obj, "scenario", "clusters", s.num_clusters);
            s.rays_per_cluster = get_or<int>(obj, "scenario", "rays_per_cluster", s.rays_per_cluster);
            s.seed = get_or<std::uint64_t>(obj, "scenario", "seed", s.seed);
            s.cluster_angle_spread = deg2rad(get_number(obj, "scenario", "cluster_angle_spread_deg",
                                                        rad2deg(s.cluster_angle_spread)));
            s.intra_cluster_spread = deg2rad(get_number(obj, "scenario", "intra_cluster_spread_deg",
                                                        rad2deg(s.intra_cluster_spread)));
            std::string decay = get_or<std::string>(obj, "scenario", "cluster_power_decay", "exponential");
            if (decay == "exponential")
                s.per_cluster_power_decay = PowerDecay::exponential;
            else if (decay == "uniform")
                s.per_cluster_power_decay = PowerDecay::uniform;
            else
                throw config_error("scenario.cluster_power_decay", "must be 'exponential' or 'uniform'");
            s.decay_db_per_cluster = get_number(obj, "scenario", "decay_db_per_cluster", s.decay_db_per_cluster);

            if (obj.contains("snr_db"))
            {
                const json &g = obj.at("snr_db");
                if (!g.is_object())
                    throw config_error("scenario.snr_db", "must be an object {lo, hi, step}");
                expect_keys(g, "scenario.snr_db", {"lo", "hi", "step"});
                double lo = get_number(g, "scenario.snr_db", "lo", -10.0);
                double hi = get_number(g, "scenario.snr_db", "hi", 10.0);
                double step = get_number(g, "scenario.snr_db", "step", 1.0);
                s.snr_db_grid = snr_grid(lo, hi, step, "scenario.snr_db");
            }
        }

        void parse_raa(const json &obj, RaaConfig &r)
        {
            expect_keys(obj, "raa",
                        {"elements_per_ray", "sizing", "element_pattern", "zeta_3db_deg", "a_max_db",
                         "num_rays", "central_distance_m", "allow_overlap"});
            r.elements_per_ray = get_or<int>(obj, "raa", "elements_per_ray", r.elements_per_ray);
            std::string sizing = get_or<std::string>(obj, "raa", "sizing", "strict");
            if (sizing == "strict")
                r.sizing = RaaSizing::strict;
            else if (sizing == "approximate")
                r.sizing = RaaSizing::approximate;
            else
                throw config_error("raa.sizing", "must be 'strict' or 'approximate'");
            r.element_pattern = parse_pattern(obj, "raa", "element_pattern", r.element_pattern);
            r.zeta_3db = deg2rad(get_number(obj, "raa", "zeta_3db_deg", rad2deg(r.zeta_3db)));
            r.a_max_db = get_number(obj, "raa", "a_max_db", r.a_max_db);
            if (obj.contains("num_rays"))
                r.num_rays = get_or<int>(obj, "raa", "num_rays", 0);
            if (obj.contains("central_distance_m"))
                r.central_distance_m = get_number(obj, "raa", "central_distance_m", 0.0);
            r.allow_overlap = get_or<bool>(obj, "raa", "allow_overlap", r.allow_overlap);
        }

        void parse_ula(const json &obj, UlaConfig &u)
        {
            expect_keys(obj, "ula", {"elements", "sectors", "element_pattern", "codebook_halfwidth_deg"});
            u.elements = get_or<int>(obj, "ula", "elements", u.elements);
            u.sectors = get_or<int>(obj, "ula", "sectors", u.sectors);
            u.element_pattern = parse_pattern(obj, "ula", "element_pattern", u.element_pattern);
            u.codebook_halfwidth = deg2rad(get_number(obj, "ula", "codebook_halfwidth_deg",
                                                      rad2deg(u.codebook_halfwidth)));
        }

        void parse_uca(const json &obj, UcaConfig &u)
        {
            expect_keys(obj, "uca",
                        {"elements", "radius_mode", "radius_m", "codeword_spacing_rad",
                         "element_selection", "noise_model"});
            u.elements = get_or<int>(obj, "uca", "elements", u.elements);
            std::string mode = get_or<std::string>(obj, "uca", "radius_mode", "standard");
            if (mode == "standard")
                u.radius_mode = UcaRadiusMode::standard;
            else if (mode == "explicit")
                u.radius_mode = UcaRadiusMode::explicit_radius;
            else
                throw config_error("uca.radius_mode", "must be 'standard' or 'explicit'");
            u.radius_m = get_number(obj, "uca", "radius_m", u.radius_m);
            if (u.radius_mode == UcaRadiusMode::explicit_radius && !(u.radius_m > 0.0))
                throw config_error("uca.radius_m", "must be positive in explicit radius mode");
            if (obj.contains("codeword_spacing_rad"))
                u.codeword_spacing_rad = get_number(obj, "uca", "codeword_spacing_rad", 0.0);
            std::string sel = get_or<std::string>(obj, "uca", "element_selection", "auto");
            if (sel == "auto")
                u.element_selection = UcaElementSelection::automatic;
            else if (sel == "full")
                u.element_selection = UcaElementSelection::full;
            else if (sel == "semicircle")
                u.element_selection = UcaElementSelection::semicircle;
            else
                throw config_error("uca.element_selection", "must be 'auto', 'full' or 'semicircle'");
            std::string noise = get_or<std::string>(obj, "uca", "noise_model", "as_written");
            if (noise == "as_written")
                u.noise_model = UcaNoiseModel::as_written;
            else if (noise == "physical")
                u.noise_model = UcaNoiseModel::physical;
            else
                throw config_error("uca.noise_model", "must be 'as_written' or 'physical'");
        }

        void parse_prices(const json &obj, PriceTable &p)
        {
            expect_keys(obj, "prices", {"shifter_usd", "switch_usd", "antenna_usd"});
            p.cost_shifter = get_number(obj, "prices", "shifter_usd", p.cost_shifter);
            p.cost_switch = get_number(obj, "prices", "switch_usd", p.cost_switch);
            p.cost_antenna = get_number(obj, "prices", "antenna_usd", p.cost_antenna);
        }

        void parse_run(const json &obj, RunConfig &r)
        {
            expect_keys(obj, "run",
                        {"num_seeds", "strategy", "angle_grid_points", "arch", "out_dir", "threads"});
            r.num_seeds = get_or<int>(obj, "run", "num_seeds", r.num_seeds);
            r.strategy = get_or<std::string>(obj, "run", "strategy", r.strategy);
            if (r.strategy != "greedy" && r.strategy != "exhaustive" && r.strategy != "min_angle")
                throw config_error("run.strategy", "must be 'greedy', 'exhaustive' or 'min_angle'");
            r.angle_grid_points = get_or<int>(obj, "run", "angle_grid_points", r.angle_grid_points);
            if (obj.contains("arch"))
            {
                if (!obj.at("arch").is_array())
                    throw config_error("run.arch", "must be an array of architecture names");
                r.architectures.clear();
                for (const auto &a : obj.at("arch"))
                {
                    std::string name = a.get<std::string>();
                    if (name != "raa" && name != "ula" && name != "uca")
                        throw config_error("run.arch", "unknown architecture '" + name + "'");
                    r.architectures.push_back(name);
                }
                if (r.architectures.empty())
                    throw config_error("run.arch", "must not be empty");
            }
            r.out_dir = get_or<std::string>(obj, "run", "out_dir", r.out_dir);
            r.threads = get_or<int>(obj, "run", "threads", r.threads);
        }
    }

    double SimConfig::uca_codeword_spacing() const
    {
        if (uca.codeword_spacing_rad)
            return *uca.codeword_spacing_rad;
        return std::asin(2.0 / raa.elements_per_ray);
    }

    SimConfig parse_config(const std::string &json_text)
    {
        json doc;
        try
        {
            doc = json::parse(json_text);
        }
        catch (const json::exception &e)
        {
            throw config_error("<document>", std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw config_error("<document>", "top level must be an object");
        expect_keys(doc, "", {"scenario", "raa", "ula", "uca", "prices", "run"});

        SimConfig cfg;
        if (!doc.contains("scenario"))
            throw config_error("scenario", "missing required section");
        parse_scenario(doc.at("scenario"), cfg.scenario);
        if (doc.contains("raa"))
            parse_raa(doc.at("raa"), cfg.raa);
        if (doc.contains("ula"))
            parse_ula(doc.at("ula"), cfg.ula);
        if (doc.contains("uca"))
            parse_uca(doc.at("uca"), cfg.uca);
        if (doc.contains("prices"))
            parse_prices(doc.at("prices"), cfg.prices);
        if (doc.contains("run"))
            parse_run(doc.at("run"), cfg.run);

        validate(cfg);
        return cfg;
    }

    SimConfig load_config_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("<config>", "cannot open '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string serialize_config(const SimConfig &cfg)
    {
        json doc;
        json &s = doc["scenario"];
        s["f_c_hz"] = cfg.scenario.carrier_hz;
        s["users"] = cfg.scenario.num_users;
        s["rf_chains"] = cfg.scenario.num_rf_chains;
        s["clusters"] = cfg.scenario.num_clusters;
        s["rays_per_cluster"] = cfg.scenario.rays_per_cluster;
        s["seed"] = cfg.scenario.seed;
        double lo = cfg.scenario.snr_db_grid.front();
        double hi = cfg.scenario.snr_db_grid.back();
        double step = cfg.scenario.snr_db_grid.size() > 1
                          ? cfg.scenario.snr_db_grid[1] - cfg.scenario.snr_db_grid[0]
                          : 1.0;
        s["snr_db"] = {{"lo", lo}, {"hi", hi}, {"step", step}};
        s["cluster_angle_spread_deg"] = rad2deg(cfg.scenario.cluster_angle_spread);
        s["intra_cluster_spread_deg"] = rad2deg(cfg.scenario.intra_cluster_spread);
        s["cluster_power_decay"] =
            cfg.scenario.per_cluster_power_decay == PowerDecay::exponential ? "exponential" : "uniform";
        s["decay_db_per_cluster"] = cfg.scenario.decay_db_per_cluster;

        json &r = doc["raa"];
        r["elements_per_ray"] = cfg.raa.elements_per_ray;
        r["sizing"] = cfg.raa.sizing == RaaSizing::strict ? "strict" : "approximate";
        r["element_pattern"] =
            cfg.raa.element_pattern == PatternKind::isotropic ? "isotropic" : "directional_3gpp";
        r["zeta_3db_deg"] = rad2deg(cfg.raa.zeta_3db);
        r["a_max_db"] = cfg.raa.a_max_db;
        if (cfg.raa.num_rays)
            r["num_rays"] = *cfg.raa.num_rays;
        if (cfg.raa.central_distance_m)
            r["central_distance_m"] = *cfg.raa.central_distance_m;
        r["allow_overlap"] = cfg.raa.allow_overlap;

        json &u = doc["ula"];
        u["elements"] = cfg.ula.elements;
        u["sectors"] = cfg.ula.sectors;
        u["element_pattern"] =
            cfg.ula.element_pattern == PatternKind::isotropic ? "isotropic" : "directional_3gpp";
        u["codebook_halfwidth_deg"] = rad2deg(cfg.ula.codebook_halfwidth);

        json &c = doc["uca"];
        c["elements"] = cfg.uca.elements;
        c["radius_mode"] = cfg.uca.radius_mode == UcaRadiusMode::standard ? "standard" : "explicit";
        if (cfg.uca.radius_mode == UcaRadiusMode::explicit_radius)
            c["radius_m"] = cfg.uca.radius_m;
        if (cfg.uca.codeword_spacing_rad)
            c["codeword_spacing_rad"] = *cfg.uca.codeword_spacing_rad;
        switch (cfg.uca.element_selection)
        {
        case UcaElementSelection::automatic:
            c["element_selection"] = "auto";
            break;
        case UcaElementSelection::full:
            c["element_selection"] = "full";
            break;
        case UcaElementSelection::semicircle:
            c["element_selection"] = "semicircle";
            break;
        }
        c["noise_model"] = cfg.uca.noise_model == UcaNoiseModel::as_written ? "as_written" : "physical";

        json &p = doc["prices"];
        p["shifter_usd"] = cfg.prices.cost_shifter;
        p["switch_usd"] = cfg.prices.cost_switch;
        p["antenna_usd"] = cfg.prices.cost_antenna;

        json &n = doc["run"];
        n["num_seeds"] = cfg.run.num_seeds;
        n["strategy"] = cfg.run.strategy;
        n["angle_grid_points"] = cfg.run.angle_grid_points;
        n["arch"] = cfg.run.architectures;
        n["out_dir"] = cfg.run.out_dir;
        n["threads"] = cfg.run.threads;

        return doc.dump(2);
    }

    void validate(const SimConfig &cfg)
    {
        validate(cfg.scenario);
        if (cfg.raa.elements_per_ray < 2)
            throw config_error("raa.elements_per_ray", "must be >= 2");
        if (cfg.raa.num_rays && (*cfg.raa.num_rays < 3 || *cfg.raa.num_rays % 2 == 0))
            throw config_error("raa.num_rays", "must be an odd integer >= 3");
        if (cfg.ula.elements < 2)
            throw config_error("ula.elements", "must be >= 2");
        if (cfg.ula.sectors < 1)
            throw config_error("ula.sectors", "must be >= 1");
        if (!(cfg.ula.codebook_halfwidth > 0.0) || cfg.ula.codebook_halfwidth > pi / 2.0 + 1e-12)
            throw config_error("ula.codebook_halfwidth_deg", "must be in (0, 90]");
        if (cfg.uca.elements < 3)
            throw config_error("uca.elements", "must be >= 3");
        if (cfg.uca.codeword_spacing_rad && !(*cfg.uca.codeword_spacing_rad > 0.0))
            throw config_error("uca.codeword_spacing_rad", "must be positive");
        if (cfg.prices.cost_shifter < 0.0)
            throw config_error("prices.shifter_usd", "must be non-negative");
        if (cfg.prices.cost_switch < 0.0)
            throw config_error("prices.switch_usd", "must be non-negative");
        if (cfg.prices.cost_antenna < 0.0)
            throw config_error("prices.antenna_usd", "must be non-negative");
        if (cfg.run.num_seeds < 1)
            throw config_error("run.num_seeds", "must be >= 1");
        if (cfg.run.angle_grid_points < 8)
            throw config_error("run.angle_grid_points", "must be >= 8");
        if (cfg.run.threads < 0)
            throw config_error("run.threads", "must be >= 0");
    }
}
