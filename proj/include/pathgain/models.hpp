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

#ifndef PATHGAIN_MODELS_HPP
#define PATHGAIN_MODELS_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/config.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/reference_models.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

// Name -> evaluator registry. A model is built from an environment config and
// maps the horizontal range (m) to total gain and per-component gains.

namespace pathgain
{

struct Prediction
{
    double gain_db = 0.0;
    std::vector<double> components_db; // same order as Model::component_names
    RegimeFlags flags{};
};

struct Model
{
    std::string name;
    std::vector<std::string> component_names;
    std::function<Prediction(double)> eval;
};

struct ModelInfo
{
    const char *name;
    const char *summary;
};

inline const std::vector<ModelInfo> &model_catalog()
{
    static const std::vector<ModelInfo> list = {
        {"friis", "free space"},
        {"los_canyon", "LOS street canyon, incoherent ground bounce"},
        {"los_corridor", "alias of los_canyon"},
        {"los_canyon_coherent", "LOS street canyon, coherent ground bounce"},
        {"suburban_street", "base in street, terminal behind foliage"},
        {"suburban_indoor", "suburban street into a house"},
        {"overtop", "rooftop base over clutter into a street of width w"},
        {"overtop_wide", "rooftop base over clutter, wide street"},
        {"rural", "direct path through vegetation plus over-top"},
        {"outdoor_indoor_canyon", "base in canyon, terminal indoors"},
        {"sidewalk_guided", "canyon-guided path to a sidewalk with trees"},
        {"sidewalk_unguided", "side illumination of sidewalk clutter"},
        {"canyon_with_trees", "max of guided and unguided"},
        {"canyon_total", "canyon with trees + over-top + direct"},
        {"uma_nlos_36814", "3GPP TR 36.814 UMa NLOS"},
        {"uma_los", "3GPP TR 38.901 UMa LOS"},
        {"uma_nlos", "3GPP TR 38.901 UMa NLOS"},
        {"umi_los", "3GPP TR 38.901 UMi street canyon LOS"},
        {"umi_nlos", "3GPP TR 38.901 UMi street canyon NLOS"},
        {"inh_los", "3GPP TR 38.901 InH office LOS"},
        {"inh_nlos", "3GPP TR 38.901 InH office NLOS"},
        {"o2i_los", "3GPP TR 38.901 UMi LOS + O2I low-loss"},
        {"o2i_nlos", "3GPP TR 38.901 UMi NLOS + O2I low-loss"},
    };
    return list;
}

namespace detail
{
class Needs
{
public:
    explicit Needs(std::string model) : model_(std::move(model)) {}
    template <class T>
    void require(const std::optional<T> &v, const char *what)
    {
        if (!v)
            missing_.push_back(what);
    }
    void check() const
    {
        if (missing_.empty())
            return;
        std::string msg = "model '" + model_ + "' needs missing config fields:";
        for (const auto &m : missing_)
            msg += " " + m;
        throw ConfigError(msg);
    }

private:
    std::string model_;
    std::vector<std::string> missing_;
};

inline CanyonGeometry canyon_geometry(const EnvironmentConfig &c)
{
    const auto &b = *c.canyon;
    return {b.width_m, b.tx_height_m, b.rx_height_m, b.ground, c.wall.value_or(WallSurface{}), b.tx_offset_m, b.rx_offset_m};
}

inline FoliageLayer foliage_layer(const EnvironmentConfig &c)
{
    const auto &f = *c.foliage;
    double kappa = kFoliageKappa28GHz;
    if (f.kappa_auto)
        kappa = kappa_v_at_frequency(*c.frequency_hz).value;
    else if (f.kappa_np_per_m)
        kappa = *f.kappa_np_per_m;
    return {f.depth_m, kappa, f.trees};
}

inline StreetScene street_scene(const EnvironmentConfig &c)
{
    StreetScene s;
    s.canyon = canyon_geometry(c);
    s.foliage = foliage_layer(c);
    if (c.street)
    {
        const auto &b = *c.street;
        s.standoff_m = b.standoff_m;
        s.rho_v = b.rho_v;
        s.kappa_extra_np_per_m = b.kappa_extra_np_per_m;
        s.vegetation_free_m = b.vegetation_free_m;
        s.direct_veg_path_m = b.direct_veg_path_m;
        s.back_wall_gamma2 = b.back_wall_gamma2;
    }
    return s;
}

inline MacroGeometry macro_geometry(const EnvironmentConfig &c)
{
    const auto &m = *c.macro;
    MacroGeometry g{m.z_bs_m, m.z_c_m, m.z_m_m, m.street_width_m, {}};
    if (c.canyon)
        g.ground = c.canyon->ground;
    return g;
}

inline Prediction single(const PathGain &p) { return {p.db(), {}, p.flags}; }
} // namespace detail

// Builds a model or throws ConfigError naming the model and every missing field.
inline Model make_model(const std::string &name, const EnvironmentConfig &cfg)
{
    detail::Needs needs(name);
    needs.require(cfg.frequency_hz, "[link].frequency_hz");
    const double f = cfg.frequency_hz.value_or(0.0);
    Model m;
    m.name = name;

    if (name == "friis")
    {
        needs.check();
        m.eval = [f](double x) { return Prediction{to_db(friis_gain(wavelength(f), x)), {}, {}}; };
        return m;
    }
    if (name == "los_canyon" || name == "los_corridor" || name == "los_canyon_coherent")
    {
        needs.require(cfg.canyon, "[canyon]");
        needs.require(cfg.wall, "[wall]");
        needs.check();
        const auto g = detail::canyon_geometry(cfg);
        g.validate();
        const bool coherent = name == "los_canyon_coherent";
        m.component_names = {coherent ? "incoherent" : "coherent", "waveguide", "free_space"};
        m.eval = [g, f, coherent](double x) {
            const LosLink l{g, x, f};
            const auto main = coherent ? los_gain_coherent(l) : los_gain_incoherent(l);
            const auto other = coherent ? los_gain_incoherent(l) : los_gain_coherent(l);
            return Prediction{main.db(),
                              {other.db(), to_db(los_canyon_closed_form(l)), to_db(friis_gain(l.wavelength_m(), l.range()))},
                              main.flags};
        };
        return m;
    }
    if (name == "suburban_street" || name == "suburban_indoor" || name == "sidewalk_guided" || name == "sidewalk_unguided" ||
        name == "canyon_with_trees")
    {
        needs.require(cfg.canyon, "[canyon]");
        needs.require(cfg.foliage, "[foliage]");
        if (name == "sidewalk_guided" || name == "canyon_with_trees")
            needs.require(cfg.wall, "[wall]");
        if (name == "suburban_indoor")
        {
            needs.require(cfg.indoor, "[indoor]");
            needs.require(cfg.penetration, "[penetration]");
        }
        needs.check();
        const auto s = detail::street_scene(cfg);
        s.validate();
        if (name == "suburban_street")
            m.eval = [s, f](double x) { return detail::single(suburban_street_gain(s, Link{x, f})); };
        else if (name == "suburban_indoor")
        {
            const auto in = *cfg.indoor;
            const auto pen = *cfg.penetration;
            m.eval = [s, in, pen, f](double x) { return detail::single(suburban_indoor_gain(s, in, pen, Link{x, f})); };
        }
        else if (name == "sidewalk_guided")
            m.eval = [s, f](double x) { return detail::single(sidewalk_guided_gain(s, Link{x, f})); };
        else if (name == "sidewalk_unguided")
            m.eval = [s, f](double x) { return detail::single(sidewalk_unguided_gain(s, Link{x, f})); };
        else
        {
            m.component_names = {"guided", "unguided"};
            m.eval = [s, f](double x) {
                const Link l{x, f};
                const auto g = sidewalk_guided_gain(s, l);
                const auto u = sidewalk_unguided_gain(s, l);
                const auto t = canyon_with_trees_gain(s, l);
                return Prediction{t.db(), {g.db(), u.db()}, t.flags};
            };
        }
        return m;
    }
    if (name == "overtop" || name == "overtop_wide" || name == "rural")
    {
        needs.require(cfg.macro, "[macro]");
        needs.require(cfg.foliage, "[foliage]");
        needs.check();
        const auto g = detail::macro_geometry(cfg);
        g.validate();
        const auto fol = detail::foliage_layer(cfg);
        if (name == "overtop")
            m.eval = [g, fol, f](double x) { return detail::single(overtop_gain(g, fol.kappa_np_per_m, Link{x, f})); };
        else if (name == "overtop_wide")
            m.eval = [g, fol, f](double x) { return detail::single(overtop_gain_wide(g, fol.kappa_np_per_m, Link{x, f})); };
        else
        {
            m.component_names = {"direct", "over_top"};
            m.eval = [g, fol, f](double x) {
                const auto r = rural_gain(g, fol, Link{x, f});
                return Prediction{r.total.db(), {to_db(r.direct), to_db(r.over_top)}, r.total.flags};
            };
        }
        return m;
    }
    if (name == "outdoor_indoor_canyon")
    {
        needs.require(cfg.canyon, "[canyon]");
        needs.require(cfg.wall, "[wall]");
        needs.require(cfg.penetration, "[penetration]");
        needs.check();
        const auto g = detail::canyon_geometry(cfg);
        g.validate();
        const auto pen = *cfg.penetration;
        const auto in = cfg.indoor.value_or(IndoorClutter{});
        const double bw = cfg.street ? cfg.street->back_wall_gamma2 : 1.0;
        m.eval = [g, pen, in, f, bw](double x) { return detail::single(outdoor_indoor_canyon_gain(g, pen, in, Link{x, f}, bw)); };
        return m;
    }
    if (name == "canyon_total")
    {
        needs.require(cfg.canyon, "[canyon]");
        needs.require(cfg.wall, "[wall]");
        needs.require(cfg.foliage, "[foliage]");
        needs.require(cfg.macro, "[macro]");
        needs.check();
        const auto s = detail::street_scene(cfg);
        const auto g = detail::macro_geometry(cfg);
        s.validate();
        g.validate();
        m.component_names = {"guided", "unguided", "over_top", "direct"};
        m.eval = [s, g, f](double x) {
            const auto t = canyon_total_gain(s, g, Link{x, f});
            return Prediction{t.total.db(), {to_db(t.guided), to_db(t.unguided), to_db(t.over_top), to_db(t.direct)}, t.total.flags};
        };
        return m;
    }
    if (name == "uma_nlos_36814")
    {
        needs.require(cfg.macro, "[macro]");
        needs.check();
        const auto &b = *cfg.macro;
        ThreeGppScenario s;
        s.fc_ghz = f * 1e-9;
        s.bs_height_m = b.z_bs_m;
        s.ut_height_m = b.z_m_m;
        s.street_width_m = b.street_width_m;
        s.building_height_m = b.z_c_m;
        s.validate();
        m.eval = [s](double x) { return Prediction{-uma_nlos_36814(s, std::hypot(x, s.bs_height_m - s.ut_height_m)), {}, {}}; };
        return m;
    }
    if (auto sc = parse_scenario(name))
    {
        if (!cfg.macro && !cfg.canyon)
            needs.require(std::optional<int>{}, "[macro] or [canyon] (antenna heights)");
        if (sc->first == ThreeGppFamily::O2I)
            needs.require(cfg.indoor, "[indoor].depth_m");
        needs.check();
        ThreeGppScenario s;
        s.family = sc->first;
        s.condition = sc->second;
        s.fc_ghz = f * 1e-9;
        s.bs_height_m = cfg.macro ? cfg.macro->z_bs_m : cfg.canyon->tx_height_m;
        s.ut_height_m = cfg.macro ? cfg.macro->z_m_m : cfg.canyon->rx_height_m;
        if (cfg.indoor)
            s.indoor_distance_m = cfg.indoor->depth_m;
        s.validate();
        m.eval = [s](double x) {
            const auto pl = tr38901_eval(s, x);
            return Prediction{-pl.value, {}, pl.flags};
        };
        return m;
    }
    throw ConfigError("unknown model '" + name + "'");
}

} // namespace pathgain

#endif
