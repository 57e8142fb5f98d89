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

#ifndef PATHGAIN_VERIFY_HPP
#define PATHGAIN_VERIFY_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/data_fit.hpp"
#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/oracles.hpp"
#include "pathgain/presets.hpp"
#include "pathgain/surface_em.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

// Verification suites: every closed form against its oracle, with the gap
// bound it must meet. Used by `pathgain verify` and the acceptance tests.

namespace pathgain
{

enum class ToleranceProfile
{
    standard,
    strict, // tighter oracle numerics plus refinement self-consistency rows
};

struct VerifyOptions
{
    ToleranceProfile profile = ToleranceProfile::standard;
    double fault_scale = 1.0; // multiplies every closed-form value; != 1 injects a fault
    Deadline deadline{};
};

namespace detail
{
inline std::string fmt(const char *f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

inline std::string fmt(const char *f, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

inline std::vector<double> logspace(double a, double b, int n)
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(a * std::pow(b / a, double(i) / (n - 1)));
    return out;
}

// dB/decade slope of a gain function fitted over [a, b].
inline double fitted_slope(const std::function<double(double)> &gain, double a, double b)
{
    std::vector<MeasurementRecord> recs;
    for (double r : logspace(a, b, 41))
        recs.push_back({r, to_db(gain(r)), {}, {}});
    return -10.0 * fit_slope_intercept(recs).model.exponent;
}

struct Ctx
{
    const VerifyOptions &opt;
    std::vector<OracleReport> rows;
    SummationControl sum;
    QuadratureControl quad;

    explicit Ctx(const VerifyOptions &o) : opt(o)
    {
        sum.deadline = o.deadline;
        quad.deadline = o.deadline;
        if (o.profile == ToleranceProfile::strict)
        {
            sum.relative_tail_tol = 1e-13;
            quad.rel_tol = 1e-11;
            quad.abs_tol = 1e-18;
        }
    }
    bool strict() const { return opt.profile == ToleranceProfile::strict; }

    void add(const std::string &suite, const std::string &name, double closed, double oracle, double bound, GapKind kind,
             RegimeFlags flags = {}, bool gated = true)
    {
        auto r = compare(suite, name, closed * opt.fault_scale, oracle, bound, kind, flags);
        r.gated = gated;
        rows.push_back(std::move(r));
    }
};

inline double max_fresnel_gap(double n, Polarization pol, double theta_max, double *worst_theta)
{
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i)
    {
        const GrazingAngle t{theta_max * i / 200.0};
        const double a = fresnel_lowgraze_approx(t, Dielectric{n}, pol).value;
        const double e = fresnel_exact(t, Dielectric{n}, pol).real();
        if (std::abs(a - e) >= std::abs(worst))
        {
            worst = a - e;
            *worst_theta = t.radians;
        }
    }
    return worst;
}

inline void suite_fresnel(Ctx &c)
{
    const std::string s = "fresnel";
    struct Case
    {
        double n;
        Polarization pol;
        bool gated;
    };
    const Case cases[] = {
        {2.2, Polarization::perpendicular, true},
        {std::sqrt(5.0), Polarization::perpendicular, true}, {2.2, Polarization::parallel, true},
        {std::sqrt(5.0), Polarization::parallel, true},
        // Rest of the n in [1.5, 3] band, reported only.
        {1.5, Polarization::perpendicular, false}, {1.7, Polarization::perpendicular, false}, {2.0, Polarization::perpendicular, false},
        {3.0, Polarization::perpendicular, false}, {1.5, Polarization::parallel, false},
        {1.7, Polarization::parallel, false}, {2.0, Polarization::parallel, false}, {3.0, Polarization::parallel, false},
    };
    for (const auto &k : cases)
    {
        const bool perp = k.pol == Polarization::perpendicular;
        double th = 0.0;
        const double gap = max_fresnel_gap(k.n, k.pol, 0.1, &th);
        const GrazingAngle t{th};
        const double exact = fresnel_exact(t, Dielectric{k.n}, k.pol).real();
        c.add(s, fmt(perp ? "perpendicular n=%.3f, worst theta=%.3f" : "parallel n=%.3f, worst theta=%.3f", k.n, th),
              exact + gap, exact, perp ? 0.02 : 0.05, GapKind::absolute, {}, k.gated);
    }
}

inline void suite_roughness(Ctx &c)
{
    const std::string s = "roughness";
    const std::pair<const char *, WallSurface> walls[] = {{"corridor", presets::corridor_wall()}, {"urban", presets::urban_wall()}};
    for (const auto &[wname, wall] : walls)
        for (double f : {2e9, 3.5e9, 28e9})
            for (double th : {0.001, 0.01, 0.05})
            {
                const double k = wavenumber(f);
                const auto &rough = *wall.roughness;
                const auto q = roughness_integral(GrazingAngle{th}, rough, k, c.quad);
                const double closed = roughness_loss_rate(rough, k) * th;
                c.add(s, std::string(wname) + fmt(" %.1f GHz theta=%.3f", f * 1e-9, th), closed, q.loss.value, 0.02,
                      GapKind::relative, q.flags);
                if (th == 0.01)
                {
                    const auto g = roughness_integral(GrazingAngle{th}, rough, k, c.quad, RoughnessBracket::general);
                    c.add(s, std::string(wname) + fmt(" %.1f GHz theta=%.3f general bracket", f * 1e-9, th), closed,
                          g.loss.value, 0.02, GapKind::relative, g.flags, false);
                }
            }
}

inline void suite_canyon(Ctx &c)
{
    const std::string s = "canyon";
    const std::pair<const char *, CanyonGeometry> geos[] = {{"corridor", presets::corridor()}, {"urban", presets::urban_canyon()}};
    for (const auto &[gname, geo] : geos)
        for (double f : {2e9, 28e9})
        {
            const std::string tag = std::string(gname) + fmt(" %.0f GHz", f * 1e-9);
            for (double q : {10.0, 20.0, 50.0, 100.0, 200.0})
            {
                const LosLink l{geo, q * geo.width_m, f};
                const auto wg = los_canyon_gain(l);
                c.add(s, tag + fmt(" r/w=%.0f waveguide", q), wg.linear, image_sum_power(l, c.sum).value, 1.5, GapKind::db, wg.flags);
                const auto inc = los_gain_incoherent(l);
                c.add(s, tag + fmt(" r/w=%.0f incoherent ground", q), inc.linear, image_sum_power(l, c.sum, {true, false, std::nullopt}).value, 1.5,
                      GapKind::db, inc.flags);
                if (c.strict() && q == 50.0)
                {
                    SummationControl loose;
                    const auto a = image_sum_power(l, loose);
                    const auto b = image_sum_power(l, c.sum);
                    c.add(s, tag + " r/w=50 refinement", a.value, b.value, 10.0 * a.error_estimate / a.value + 1e-12,
                          GapKind::relative);
                }
            }
            auto g = [&](double r) {
                LosLink l{geo, std::sqrt(r * r - std::pow(geo.tx_height_m - geo.rx_height_m, 2)), f};
                return los_canyon_closed_form(l);
            };
            c.add(s, tag + " slope over [10w, 100w] (dB/decade)", fitted_slope(g, 10 * geo.width_m, 100 * geo.width_m), -15.0,
                  0.1, GapKind::absolute);
        }

    // Off-centre antennas: exact images against the centred closed form.
    for (const auto &[gname, geo] : geos)
    {
        CanyonGeometry off = geo;
        off.tx_offset_m = 0.3 * geo.width_m;
        off.rx_offset_m = -0.3 * geo.width_m;
        const LosLink l{off, 50.0 * geo.width_m, 2e9};
        const LosLink centred{geo, 50.0 * geo.width_m, 2e9};
        c.add(s, std::string(gname) + " 2 GHz r/w=50 offsets +-0.3w", los_canyon_gain(centred).linear,
              image_sum_power(l, c.sum).value, 2.0, GapKind::db);
    }

    // Incoherent ground bounce against one-cycle averages of the coherent form.
    const std::tuple<const char *, CanyonGeometry, double, std::vector<double>> sweeps[] = {
        {"corridor", presets::corridor(), 2e9, {5.0, 10.0, 20.0}},
        {"urban", presets::urban_canyon(), 3.5e9, {20.0, 50.0, 100.0}},
    };
    for (const auto &[gname, geo, f, xs] : sweeps)
        for (double x : xs)
        {
            const LosLink l{geo, x, f};
            c.add(s, std::string(gname) + fmt(" %.1f GHz x=%.0f coherent cycle average", f * 1e-9, x),
                  los_gain_incoherent(l).linear, coherent_cycle_average(l), 1.5, GapKind::db);
        }
}

inline void suite_diffuse(Ctx &c)
{
    const std::string s = "diffuse";
    const double lam = kSpeedOfLight / 28e9;
    for (double kappa : {0.0, 0.38})
    {
        const DiffuseLink l{20.0, 100.0, 10.0, kappa, lam};
        const auto spec = PenetrationSpec::unbounded();
        c.add(s, fmt("unbounded kappa=%.2f, 2-D quadrature", kappa), diffuse_pathgain(l, spec),
              hotwall_quadrature(l, spec, c.quad).value, 0.05, GapKind::db);
        c.add(s, fmt("unbounded kappa=%.2f, radial reduction", kappa), diffuse_pathgain(l, spec),
              hotwall_radial(l, 1.0, c.quad).value, 0.05, GapKind::db);
    }
    // Rectangular openings, depth 1 m, no absorption.
    const DiffuseLink l{20.0, 100.0, 1.0, 0.0, lam};
    for (double w : {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0})
    {
        const auto spec = PenetrationSpec::aperture(w, w);
        c.add(s, fmt("aperture %g x %g d_in", w, w), diffuse_pathgain(l, spec), hotwall_quadrature(l, spec, c.quad).value, 0.05,
              GapKind::db);
    }
    for (auto [w1, w2] : {std::pair{0.1, 100.0}, std::pair{100.0, 0.1}, std::pair{2.0, 0.5}})
    {
        const auto spec = PenetrationSpec::aperture(w1, w2);
        c.add(s, fmt("aperture %g x %g d_in", w1, w2), diffuse_pathgain(l, spec), hotwall_quadrature(l, spec, c.quad).value, 0.05,
              GapKind::db);
    }
    {
        // Weak absorption across the opening, kappa d_in = 0.01.
        const DiffuseLink lk{20.0, 100.0, 1.0, 0.01, lam};
        const auto spec = PenetrationSpec::aperture(2.0, 2.0);
        c.add(s, "aperture 2 x 2 d_in, kappa d_in = 0.01", diffuse_pathgain(lk, spec), hotwall_quadrature(lk, spec, c.quad).value,
              0.05, GapKind::db);
    }
    for (double w : {1.0, 10.0})
    {
        const auto spec = PenetrationSpec::street(w);
        c.add(s, fmt("street %g d_in", w), diffuse_pathgain(l, spec), hotwall_quadrature(l, spec, c.quad).value, 0.05, GapKind::db);
    }
    // Limit chain of the effective transmission.
    const double d = 2.0;
    c.add(s, "limit aperture(w1, 1e6 d) -> street(w1)", t_eff(PenetrationSpec::aperture(3.0, 1e6 * d), d),
          t_eff(PenetrationSpec::street(3.0), d), 1e-4, GapKind::relative);
    c.add(s, "limit street(1e6 d) -> unbounded", t_eff(PenetrationSpec::street(1e6 * d, 0.5), d),
          t_eff(PenetrationSpec::unbounded(0.5), d), 1e-4, GapKind::relative);

    if (c.strict())
    {
        QuadratureControl loose;
        const DiffuseLink lr{20.0, 100.0, 1.0, 0.0, lam};
        const auto spec = PenetrationSpec::aperture(10.0, 10.0);
        const auto a = hotwall_quadrature(lr, spec, loose);
        const auto b = hotwall_quadrature(lr, spec, c.quad);
        c.add(s, "aperture 10 x 10 refinement", a.value, b.value, 10.0 * a.error_estimate / a.value + 1e-10, GapKind::relative);
    }
}

// Canyon with the base at distance d from the terminal's facade.
inline CanyonGeometry oi_geometry(const CanyonGeometry &base, double d)
{
    CanyonGeometry g = base;
    g.tx_offset_m = base.width_m / 2 - d;
    return g;
}

inline Link link_at_range(const CanyonGeometry &g, double r, double f)
{
    const double d = g.width_m / 2 - g.tx_offset_m;
    const double dz = g.tx_height_m - g.rx_height_m;
    return {std::sqrt(r * r - d * d - dz * dz), f};
}

inline void suite_outdoor_indoor(Ctx &c)
{
    const std::string s = "outdoor_indoor";
    struct Set
    {
        const char *name;
        CanyonGeometry geo;
        double T2;
        std::vector<double> freqs;
    };
    CanyonGeometry street = presets::urban_canyon();
    street.tx_height_m = 2.0;
    const Set sets[] = {
        {"street 8.6 m", street, 0.37, {3.5e9}},
        {"corridor-room", presets::corridor(), 0.27, {2e9, 28e9}},
    };
    const IndoorClutter indoor{};
    for (const auto &set : sets)
        for (double f : set.freqs)
        {
            const double L = wall_loss(set.geo.wall, wavenumber(f));
            const double Lw = L * set.geo.width_m;
            const auto pen = PenetrationSpec::unbounded(set.T2);
            const std::string tag = std::string(set.name) + fmt(" %.1f GHz", f * 1e-9);
            for (double d : {0.5, set.geo.width_m / 2, set.geo.width_m - 0.5})
                for (double q : {10.0, 30.0, 100.0})
                {
                    const auto g = oi_geometry(set.geo, d);
                    const Link l = link_at_range(g, q * Lw, f);
                    const auto cf = outdoor_indoor_canyon_gain(g, pen, indoor, l);
                    c.add(s, tag + fmt(" d=%.2f r/Lw=%.0f", d, q), cf.linear, oi_image_series_power(g, pen, indoor, l, c.sum).value,
                          1.5, GapKind::db, cf.flags);
                }
            // Same-side versus opposite-side base: the series barely cares.
            {
                const auto near = oi_geometry(set.geo, 0.5);
                const auto far = oi_geometry(set.geo, set.geo.width_m - 0.5);
                const double r = 30.0 * Lw;
                c.add(s, tag + " near vs far facade at r/Lw=30", oi_image_series_power(near, pen, indoor, link_at_range(near, r, f), c.sum).value,
                      oi_image_series_power(far, pen, indoor, link_at_range(far, r, f), c.sum).value, 2.0, GapKind::db);
            }
            // Slope with a fixed ground coefficient.
            auto g = oi_geometry(set.geo, set.geo.width_m / 2);
            g.ground.fixed_gamma = -1.0;
            auto gain = [&](double r) { return outdoor_indoor_canyon_gain(g, pen, indoor, link_at_range(g, r, f)).linear; };
            c.add(s, tag + " slope over [10Lw, 100Lw] (dB/decade)", fitted_slope(gain, 10 * Lw, 100 * Lw), -25.0, 0.1,
                  GapKind::absolute);
        }
}

inline void suite_guided_trees(Ctx &c)
{
    const std::string s = "guided_trees";
    const double f = 28e9;
    const auto scene = presets::sparse_tree_avenue();
    for (double x : {200.0, 300.0, 500.0, 1000.0})
    {
        const Link l{x, f};
        const auto cf = sidewalk_guided_gain(scene, l);
        c.add(s, fmt("sparse-tree avenue x=%.0f", x), cf.linear, guided_trees_series_power(scene, l, c.sum).value, 2.0, GapKind::db,
              cf.flags, x == 300.0);
    }
    // No trees: the tree series is the outdoor-indoor series with T = 1.
    {
        StreetScene bare = scene;
        bare.rho_v = 0.0;
        const auto g = oi_geometry(bare.canyon, bare.standoff());
        const Link l{300.0, f};
        c.add(s, "rho_v = 0 reduces to the outdoor-indoor series", guided_trees_series_power(bare, l, c.sum).value,
              oi_image_series_power(g, PenetrationSpec::unbounded(), IndoorClutter{}, l, c.sum).value, 1e-12, GapKind::relative);
    }
}

inline void suite_suburban(Ctx &c)
{
    const std::string s = "suburban";
    const double f = 28e9;
    StreetScene scene;
    scene.canyon.width_m = 40.0;
    scene.canyon.tx_height_m = 3.0;
    scene.canyon.rx_height_m = 1.0;
    scene.canyon.ground.fixed_gamma = 0.0;
    scene.back_wall_gamma2 = 0.0;
    scene.foliage = {10.0, kFoliageKappa28GHz, std::nullopt};
    scene.standoff_m = 20.0;
    for (double x : {100.0, 200.0, 500.0})
    {
        const Link l{x, f};
        const double r = detail::street_range(scene, l);
        const DiffuseLink dl{20.0, r, 10.0, kFoliageKappa28GHz, l.wavelength_m()};
        const auto q = hotwall_quadrature(dl, PenetrationSpec::unbounded(), c.quad, HotWallMode::exact_distance,
                                          {x, scene.canyon.rx_height_m - scene.canyon.tx_height_m});
        c.add(s, fmt("foliage d_s=20 d_v=10 x=%.0f, exact source distance", x), suburban_street_gain(scene, l).linear, q.value, 0.5,
              GapKind::db);
    }
}
} // namespace detail

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"fresnel", "roughness", "canyon", "diffuse", "outdoor_indoor", "guided_trees", "suburban"};
    return names;
}

// Runs one suite by name, or all of them for "all". Throws std::invalid_argument for unknown names.
inline std::vector<OracleReport> run_verification(const std::string &suite, const VerifyOptions &opt = {})
{
    detail::Ctx c(opt);
    const bool all = suite == "all";
    bool any = false;
    auto run = [&](const char *name, void (*fn)(detail::Ctx &)) {
        if (all || suite == name)
        {
            fn(c);
            any = true;
        }
    };
    run("fresnel", detail::suite_fresnel);
    run("roughness", detail::suite_roughness);
    run("canyon", detail::suite_canyon);
    run("diffuse", detail::suite_diffuse);
    run("outdoor_indoor", detail::suite_outdoor_indoor);
    run("guided_trees", detail::suite_guided_trees);
    run("suburban", detail::suite_suburban);
    if (!any)
        throw std::invalid_argument("unknown verification suite '" + suite + "'");
    return std::move(c.rows);
}

} // namespace pathgain

#endif
