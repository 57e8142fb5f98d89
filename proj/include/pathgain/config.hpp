// SPDX-License-Identifier: Apache-2.0
//
// pathgain: closed-form average path gain laws for common radio environments
// Copyright (C) 2026 The pathgain authors
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

#ifndef PATHGAIN_CONFIG_HPP
#define PATHGAIN_CONFIG_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/common.hpp"
#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/surface_em.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Environment description files: INI sections with unit-suffixed keys.
//
//   [wall]         n_eff, A_m, p1, p2, mean_width_m, mean_gap_m
//   [canyon]       width_m, tx_height_m, rx_height_m, ground_index,
//                  ground_gamma, ground_polarization, tx_offset_m, rx_offset_m
//   [foliage]      depth_m, kappa_np_per_m (number or "auto"),
//                  n_tree_per_m, tree_width_m, tree_height_m
//   [penetration]  variant = unbounded | street | aperture | facade, T2,
//                  width1_m, width2_m, window_fraction, window_T2, wall_T2
//   [macro]        z_bs_m, z_c_m, z_m_m, street_width_m
//   [link]         frequency_hz
//   [indoor]       kappa_np_per_m, depth_m
//   [street]       standoff_m, rho_v, kappa_extra_np_per_m, vegetation_free_m,
//                  direct_veg_path_m, back_wall_gamma2
//   [meta]         name, description, target_*_rms_db (annotations only)
//
// Unknown sections and keys are errors. '#' and ';' start comment lines.

namespace pathgain
{

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct CanyonBlock
{
    double width_m = 0.0;
    double tx_height_m = 0.0;
    double rx_height_m = 0.0;
    GroundModel ground;
    double tx_offset_m = 0.0;
    double rx_offset_m = 0.0;
};

struct FoliageBlock
{
    double depth_m = 0.0;
    std::optional<double> kappa_np_per_m; // empty: 28 GHz default
    bool kappa_auto = false;              // interpolate at the link frequency
    std::optional<TreeDensity> trees;
};

struct MacroBlock
{
    double z_bs_m = 0.0;
    double z_c_m = 0.0;
    double z_m_m = 0.0;
    double street_width_m = 0.0;
};

struct StreetBlock
{
    std::optional<double> standoff_m;
    std::optional<double> rho_v;
    double kappa_extra_np_per_m = 0.0;
    double vegetation_free_m = 0.0;
    std::optional<double> direct_veg_path_m;
    double back_wall_gamma2 = 1.0;
};

struct EnvironmentConfig
{
    std::optional<WallSurface> wall;
    std::optional<CanyonBlock> canyon;
    std::optional<FoliageBlock> foliage;
    std::optional<PenetrationSpec> penetration;
    std::optional<MacroBlock> macro;
    std::optional<double> frequency_hz;
    std::optional<IndoorClutter> indoor;
    std::optional<StreetBlock> street;
    std::map<std::string, std::string> meta;
};

namespace detail
{
using boost::property_tree::ptree;

class Section
{
public:
    Section(const std::string &name, const ptree &tree, std::set<std::string> allowed)
        : name_(name), tree_(tree), allowed_(std::move(allowed))
    {
        for (const auto &kv : tree_)
        {
            if (!kv.second.empty())
                throw ConfigError("[" + name_ + "] nested keys are not supported");
            if (!allowed_.count(kv.first))
                throw ConfigError("[" + name_ + "] unknown key '" + kv.first + "'");
        }
    }

    bool has(const std::string &key) const { return tree_.find(key) != tree_.not_found(); }

    std::string text(const std::string &key) const { return tree_.get<std::string>(key); }

    std::optional<double> number(const std::string &key) const
    {
        if (!has(key))
            return std::nullopt;
        const std::string t = trim(text(key));
        std::size_t used = 0;
        double v = 0.0;
        try
        {
            v = std::stod(t, &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (t.empty() || used != t.size() || !std::isfinite(v))
            throw ConfigError("[" + name_ + "] " + key + " must be a finite number, got '" + t + "'");
        return v;
    }

    double required(const std::string &key) const
    {
        auto v = number(key);
        if (!v)
            throw ConfigError("[" + name_ + "] missing required key '" + key + "'");
        return *v;
    }

private:
    static std::string trim(std::string s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    }

    std::string name_;
    const ptree &tree_;
    std::set<std::string> allowed_;
};

template <class F>
inline void guarded(const std::string &section, F f)
{
    try
    {
        f();
    }
    catch (const ConfigError &)
    {
        throw;
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("[" + section + "] " + e.what());
    }
}
} // namespace detail

inline EnvironmentConfig parse_config(std::istream &in)
{
    using boost::property_tree::ptree;
    ptree root;
    try
    {
        boost::property_tree::ini_parser::read_ini(in, root);
    }
    catch (const boost::property_tree::ini_parser_error &e)
    {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }

    EnvironmentConfig cfg;
    for (const auto &kv : root)
    {
        const std::string &sec = kv.first;
        const ptree &t = kv.second;
        if (t.empty() && !t.data().empty())
            throw ConfigError("key '" + sec + "' outside any section");

        if (sec == "wall")
        {
            detail::Section s(sec, t, {"n_eff", "A_m", "p1", "p2", "mean_width_m", "mean_gap_m"});
            detail::guarded(sec, [&] {
                WallSurface w{Dielectric{s.required("n_eff")}, std::nullopt};
                if (s.has("A_m"))
                {
                    const double p1 = s.required("p1");
                    const double p2 = s.number("p2").value_or(1.0 - p1);
                    w.roughness = TelegraphRoughness::from_mean_lengths(s.required("A_m"), p1, p2, s.required("mean_width_m"),
                                                                        s.required("mean_gap_m"));
                }
                w.validate();
                cfg.wall = w;
            });
        }
        else if (sec == "canyon")
        {
            detail::Section s(sec, t, {"width_m", "tx_height_m", "rx_height_m", "ground_index", "ground_gamma",
                                       "ground_polarization", "tx_offset_m", "rx_offset_m"});
            detail::guarded(sec, [&] {
                CanyonBlock c;
                c.width_m = s.required("width_m");
                c.tx_height_m = s.required("tx_height_m");
                c.rx_height_m = s.required("rx_height_m");
                c.tx_offset_m = s.number("tx_offset_m").value_or(0.0);
                c.rx_offset_m = s.number("rx_offset_m").value_or(0.0);
                if (auto n = s.number("ground_index"))
                    c.ground.dielectric = Dielectric{*n};
                c.ground.dielectric.validate();
                c.ground.fixed_gamma = s.number("ground_gamma");
                if (s.has("ground_polarization"))
                {
                    const auto p = s.text("ground_polarization");
                    if (p == "parallel")
                        c.ground.polarization = Polarization::parallel;
                    else if (p == "perpendicular")
                        c.ground.polarization = Polarization::perpendicular;
                    else
                        throw ConfigError("[canyon] ground_polarization must be parallel or perpendicular");
                }
                cfg.canyon = c;
            });
        }
        else if (sec == "foliage")
        {
            detail::Section s(sec, t, {"depth_m", "kappa_np_per_m", "n_tree_per_m", "tree_width_m", "tree_height_m"});
            detail::guarded(sec, [&] {
                FoliageBlock f;
                f.depth_m = s.required("depth_m");
                detail::require(f.depth_m >= 0.0, "depth_m must be nonnegative");
                if (s.has("kappa_np_per_m") && s.text("kappa_np_per_m") == "auto")
                    f.kappa_auto = true;
                else
                    f.kappa_np_per_m = s.number("kappa_np_per_m");
                if (f.kappa_np_per_m)
                    detail::require(*f.kappa_np_per_m >= 0.0, "kappa_np_per_m must be nonnegative");
                if (s.has("n_tree_per_m"))
                {
                    TreeDensity td{s.required("n_tree_per_m"), s.required("tree_width_m"), s.required("tree_height_m")};
                    td.validate();
                    f.trees = td;
                }
                cfg.foliage = f;
            });
        }
        else if (sec == "penetration")
        {
            detail::Section s(sec, t, {"variant", "T2", "width1_m", "width2_m", "window_fraction", "window_T2", "wall_T2"});
            detail::guarded(sec, [&] {
                const std::string v = s.has("variant") ? s.text("variant") : std::string("unbounded");
                const double T2 = s.number("T2").value_or(1.0);
                PenetrationSpec p;
                if (v == "unbounded")
                    p = PenetrationSpec::unbounded(T2);
                else if (v == "street")
                    p = PenetrationSpec::street(s.required("width1_m"), T2);
                else if (v == "aperture")
                    p = PenetrationSpec::aperture(s.required("width1_m"), s.required("width2_m"), T2);
                else if (v == "facade")
                    p = PenetrationSpec::facade(s.required("window_fraction"), s.number("window_T2").value_or(1.0),
                                                s.number("wall_T2").value_or(0.0));
                else
                    throw ConfigError("[penetration] unknown variant '" + v + "'");
                p.validate();
                cfg.penetration = p;
            });
        }
        else if (sec == "macro")
        {
            detail::Section s(sec, t, {"z_bs_m", "z_c_m", "z_m_m", "street_width_m"});
            cfg.macro = MacroBlock{s.required("z_bs_m"), s.required("z_c_m"), s.required("z_m_m"), s.required("street_width_m")};
        }
        else if (sec == "link")
        {
            detail::Section s(sec, t, {"frequency_hz"});
            cfg.frequency_hz = s.required("frequency_hz");
            if (!(*cfg.frequency_hz > 0.0))
                throw ConfigError("[link] frequency_hz must be positive");
        }
        else if (sec == "indoor")
        {
            detail::Section s(sec, t, {"kappa_np_per_m", "depth_m"});
            detail::guarded(sec, [&] {
                IndoorClutter ic{s.number("kappa_np_per_m").value_or(0.0), s.required("depth_m")};
                ic.validate();
                cfg.indoor = ic;
            });
        }
        else if (sec == "street")
        {
            detail::Section s(sec, t, {"standoff_m", "rho_v", "kappa_extra_np_per_m", "vegetation_free_m", "direct_veg_path_m",
                                       "back_wall_gamma2"});
            StreetBlock b;
            b.standoff_m = s.number("standoff_m");
            b.rho_v = s.number("rho_v");
            b.kappa_extra_np_per_m = s.number("kappa_extra_np_per_m").value_or(0.0);
            b.vegetation_free_m = s.number("vegetation_free_m").value_or(0.0);
            b.direct_veg_path_m = s.number("direct_veg_path_m");
            b.back_wall_gamma2 = s.number("back_wall_gamma2").value_or(1.0);
            cfg.street = b;
        }
        else if (sec == "meta")
        {
            for (const auto &m : t)
            {
                const auto &key = m.first;
                const bool target = key.rfind("target_", 0) == 0 && key.size() > 14 && key.substr(key.size() - 7) == "_rms_db";
                if (key != "name" && key != "description" && !target)
                    throw ConfigError("[meta] unknown key '" + key + "'");
                cfg.meta[key] = m.second.data();
            }
        }
        else
        {
            throw ConfigError("unknown section [" + sec + "]");
        }
    }
    return cfg;
}

inline EnvironmentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path + "'");
    return parse_config(in);
}

} // namespace pathgain

#endif
