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

#ifndef PATHGAIN_MORPHOLOGY_HPP
#define PATHGAIN_MORPHOLOGY_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/common.hpp"
#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/surface_em.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

// Composite environment laws: foliage-lined suburban streets, rooftop bases
// over clutter, outdoor-to-indoor coupling along a canyon, and urban sidewalks
// with trees. Each law is assembled from the hot-wall diffuse model, the
// canyon image series and the ground / back-wall power bounces.

namespace pathgain
{

class GeometryError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kPedestrianKappa = 0.02;  // Nep/m, 1 person per 50 m^3, 1 m^2 cross section
inline constexpr double kScaffoldingKappa = 0.1;  // Nep/m
inline constexpr double kFoliageKappa28GHz = 0.38; // Nep/m, default at 28 GHz

// Street tree statistics. fill_fraction is the share of street length
// occupied by tree crowns (trees per metre times crown length).
struct TreeDensity
{
    double fill_fraction = 0.0;
    double crown_width_m = 0.0;
    double tree_height_m = 0.0;

    void validate() const
    {
        detail::require(fill_fraction >= 0.0, "tree fill fraction must be nonnegative");
        detail::require(crown_width_m >= 0.0 && tree_height_m >= 0.0, "tree dimensions must be nonnegative");
    }
};

struct FoliageLayer
{
    double depth_m = 0.0;        // d_v, vegetation crossed next to the terminal
    double kappa_np_per_m = 0.0; // kappa_v
    std::optional<TreeDensity> trees;

    void validate() const
    {
        detail::require(depth_m >= 0.0, "foliage depth must be nonnegative");
        detail::require(kappa_np_per_m >= 0.0, "foliage absorption must be nonnegative");
        if (trees)
            trees->validate();
    }
};

struct IndoorClutter
{
    double kappa_np_per_m = 0.0;
    double depth_m = 0.0;

    void validate() const
    {
        detail::require(kappa_np_per_m >= 0.0 && depth_m >= 0.0, "indoor clutter parameters must be nonnegative");
    }
    double loss_factor() const { return std::exp(-kappa_np_per_m * depth_m); }
};

struct MacroGeometry
{
    double bs_height_m = 0.0;      // z_BS
    double clutter_height_m = 0.0; // z_c
    double mobile_height_m = 0.0;  // z_m
    double street_width_m = 0.0;
    GroundModel ground;

    void validate() const
    {
        if (!(bs_height_m > clutter_height_m))
            throw GeometryError("base height must exceed clutter height");
        if (!(clutter_height_m >= mobile_height_m && mobile_height_m >= 0.0))
            throw GeometryError("clutter height must be at least the mobile height, which must be nonnegative");
        if (!(street_width_m > 0.0))
            throw GeometryError("street width must be positive");
    }
};

struct Link
{
    double horizontal_range_m = 0.0;
    double frequency_hz = 0.0;

    void validate() const
    {
        detail::require(horizontal_range_m > 0.0, "range must be positive");
        detail::require(frequency_hz > 0.0, "frequency must be positive");
    }
    double wavelength_m() const { return wavelength(frequency_hz); }
};

// A street canyon with a sidewalk terminal. canyon.tx is the base, canyon.rx
// the terminal.
struct StreetScene
{
    CanyonGeometry canyon;
    FoliageLayer foliage;
    std::optional<double> standoff_m;       // d_s, base to the terminal's clutter boundary; default w
    std::optional<double> rho_v;            // overrides the tree-density estimate
    double kappa_extra_np_per_m = 0.0;      // pedestrians / scaffolding below clutter height
    double vegetation_free_m = 0.0;         // leading stretch of street without trees
    std::optional<double> direct_veg_path_m; // overrides the estimated r_v
    double back_wall_gamma2 = 1.0;

    void validate() const
    {
        canyon.validate();
        foliage.validate();
        if (standoff_m)
            detail::require(*standoff_m > 0.0, "standoff distance must be positive");
        if (rho_v)
            detail::require(*rho_v >= 0.0 && *rho_v <= 1.0, "vegetation fraction must lie in [0, 1]");
        detail::require(kappa_extra_np_per_m >= 0.0 && vegetation_free_m >= 0.0,
                        "extra absorption and vegetation-free length must be nonnegative");
        if (direct_veg_path_m)
            detail::require(*direct_veg_path_m >= 0.0, "direct vegetation path must be nonnegative");
        detail::require(back_wall_gamma2 >= 0.0 && back_wall_gamma2 <= 1.0, "back-wall reflectance must lie in [0, 1]");
    }

    double standoff() const { return standoff_m.value_or(canyon.width_m); }
};

// Foliage absorption interpolated linearly between 0.07 Nep/m at 2 GHz and
// 0.4 Nep/m at 35 GHz. Note this gives 0.33 at 28 GHz; kFoliageKappa28GHz
// keeps the commonly quoted 0.38.
inline Flagged<double> kappa_v_at_frequency(double frequency_hz)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("frequency must be positive");
    const double f_ghz = frequency_hz * 1e-9;
    Flagged<double> out{0.07 + (0.4 - 0.07) * (f_ghz - 2.0) / 33.0, {}};
    out.flags.set_if(f_ghz < 2.0 || f_ghz > 35.0, Regime::frequency_extrapolated);
    if (out.value < 0.0)
    {
        out.value = 0.0;
        out.flags.set(Regime::clamped);
    }
    return out;
}

// Fraction of the canyon volume below the base occupied by tree crowns,
// trees on both sides of the street.
inline Flagged<double> tree_density_rho(const TreeDensity &t, double bs_height_m, double mobile_height_m, double street_width_m)
{
    t.validate();
    detail::require(bs_height_m > mobile_height_m, "base must be above the mobile");
    detail::require(street_width_m > 0.0, "street width must be positive");
    const double vertical = std::max(0.0, t.tree_height_m - mobile_height_m) / (bs_height_m - mobile_height_m);
    const double horizontal = 2.0 * t.crown_width_m / street_width_m;
    Flagged<double> out{t.fill_fraction * vertical * horizontal, {}};
    if (out.value > 1.0)
    {
        out.value = 1.0;
        out.flags.set(Regime::clamped);
    }
    return out;
}

inline Flagged<double> vegetation_fraction(const StreetScene &s)
{
    if (s.rho_v)
        return {*s.rho_v, {}};
    if (s.foliage.trees)
        return tree_density_rho(*s.foliage.trees, s.canyon.tx_height_m, s.canyon.rx_height_m, s.canyon.width_m);
    return {0.0, {}};
}

namespace detail
{
// lambda^2 d_s^2 T exp(-a) / (8 pi^2 r^4), the hot-wall law with all losses folded in.
inline double quartic_law(double lam, double ds, double r, double transmission, double attenuation_np)
{
    const double r2 = r * r;
    return lam * lam * ds * ds * transmission * std::exp(-attenuation_np) / (8.0 * kPi * kPi * r2 * r2);
}

// lambda^2 sqrt(w) / (32 pi^1.5 L^1.5 r^2.5), the continuum of the canyon image series.
inline double guided_law(double lam, double w, double L, double r)
{
    return lam * lam * std::sqrt(w) / (32.0 * std::pow(kPi, 1.5) * std::pow(L, 1.5) * std::pow(r, 2.5));
}

inline double street_range(const StreetScene &s, const Link &link)
{
    const double dz = s.canyon.tx_height_m - s.canyon.rx_height_m;
    const double ds = s.standoff();
    return std::sqrt(link.horizontal_range_m * link.horizontal_range_m + dz * dz + ds * ds);
}

inline Flagged<double> street_bounces(const StreetScene &s, const Link &link)
{
    const double hsum = s.canyon.tx_height_m + s.canyon.rx_height_m;
    const auto g2 = s.canyon.ground.power_reflectance(hsum, std::hypot(link.horizontal_range_m, s.standoff()));
    return {enhancement_factors(g2.value, s.back_wall_gamma2), g2.flags};
}
} // namespace detail

// Base in the street, terminal behind a foliage layer of depth d_v.
inline PathGain suburban_street_gain(const StreetScene &s, const Link &link)
{
    s.validate();
    link.validate();
    const double r = detail::street_range(s, link);
    const auto b = detail::street_bounces(s, link);
    const double p = detail::quartic_law(link.wavelength_m(), s.standoff(), r, 1.0,
                                         s.foliage.kappa_np_per_m * s.foliage.depth_m);
    return {p * b.value, b.flags};
}

// Terminal inside a house behind the foliage.
inline PathGain suburban_indoor_gain(const StreetScene &s, const IndoorClutter &indoor, const PenetrationSpec &pen,
                                     const Link &link)
{
    indoor.validate();
    auto out = suburban_street_gain(s, link);
    out.linear *= t_eff(pen, indoor.depth_m) * indoor.loss_factor();
    return out;
}

namespace detail
{
inline PathGain overtop(const MacroGeometry &m, double kappa, const Link &link, bool street_limited)
{
    m.validate();
    link.validate();
    detail::require(kappa >= 0.0, "absorption must be nonnegative");
    const double gap = m.bs_height_m - m.clutter_height_m;
    const double depth = m.clutter_height_m - m.mobile_height_m;
    const double r = std::hypot(link.horizontal_range_m, gap);
    const double T = street_limited ? t_eff(PenetrationSpec::street(m.street_width_m), depth) : 1.0;
    const auto g2 = m.ground.power_reflectance(m.bs_height_m + m.mobile_height_m, link.horizontal_range_m);
    const double p = quartic_law(link.wavelength_m(), gap, r, T, kappa * depth);
    return {p * enhancement_factors(g2.value, 0.0), g2.flags};
}
} // namespace detail

// Rooftop base illuminating the clutter top; the terminal sits below it in a
// street of width w.
inline PathGain overtop_gain(const MacroGeometry &m, double foliage_kappa, const Link &link)
{
    if (!(m.clutter_height_m > m.mobile_height_m))
        throw GeometryError("over-top laws need the mobile below the clutter height");
    return detail::overtop(m, foliage_kappa, link, true);
}

// Wide-street limit: no aperture restriction.
inline PathGain overtop_gain_wide(const MacroGeometry &m, double foliage_kappa, const Link &link)
{
    if (!(m.clutter_height_m > m.mobile_height_m))
        throw GeometryError("over-top laws need the mobile below the clutter height");
    return detail::overtop(m, foliage_kappa, link, false);
}

// Direct base-to-terminal path through the clutter layer, attenuated over the
// share of the slant range that lies below the clutter top.
inline PathGain rural_direct_gain(const MacroGeometry &m, double foliage_kappa, const Link &link)
{
    m.validate();
    link.validate();
    const double r = std::hypot(link.horizontal_range_m, m.bs_height_m - m.mobile_height_m);
    const double rv = r * (m.clutter_height_m - m.mobile_height_m) / (m.bs_height_m - m.mobile_height_m);
    const double lam = link.wavelength_m();
    return {std::pow(lam / (4.0 * kPi * r), 2) * std::exp(-foliage_kappa * rv), {}};
}

struct RuralGain
{
    PathGain total;
    double direct = 0.0;
    double over_top = 0.0;
};

inline RuralGain rural_gain(const MacroGeometry &m, const FoliageLayer &foliage, const Link &link)
{
    foliage.validate();
    const auto d = rural_direct_gain(m, foliage.kappa_np_per_m, link);
    const auto o = overtop_gain_wide(m, foliage.kappa_np_per_m, link);
    return {{d.linear + o.linear, d.flags | o.flags}, d.linear, o.linear};
}

// Horizontal range where the direct and over-top rural terms are equal.
// Searches [min_m, max_m]; throws std::domain_error when no crossing exists.
inline double rural_crossover_m(const MacroGeometry &m, const FoliageLayer &foliage, double frequency_hz,
                                double min_m = 1.0, double max_m = 1e5)
{
    auto g = [&](double x) {
        const Link l{x, frequency_hz};
        return std::log(rural_direct_gain(m, foliage.kappa_np_per_m, l).linear) -
               std::log(overtop_gain_wide(m, foliage.kappa_np_per_m, l).linear);
    };
    // Geometric scan for a sign change, then refine.
    const int steps = 400;
    double a = min_m;
    double ga = g(a);
    for (int i = 1; i <= steps; ++i)
    {
        const double b = min_m * std::pow(max_m / min_m, double(i) / steps);
        const double gb = g(b);
        if ((ga > 0.0) != (gb > 0.0))
        {
            std::uintmax_t iters = 200;
            const auto root = boost::math::tools::toms748_solve(g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(50), iters);
            return 0.5 * (root.first + root.second);
        }
        a = b;
        ga = gb;
    }
    throw std::domain_error("direct and over-top terms do not cross in the searched range");
}

// Base in the canyon, terminal indoors behind the facade on one side. The
// distance d from base to that facade is w/2 - tx_offset.
inline PathGain outdoor_indoor_canyon_gain(const CanyonGeometry &c, const PenetrationSpec &pen,
                                           const IndoorClutter &indoor, const Link &link, double back_wall_gamma2 = 1.0)
{
    c.validate();
    indoor.validate();
    link.validate();
    detail::require(back_wall_gamma2 >= 0.0 && back_wall_gamma2 <= 1.0, "back-wall reflectance must lie in [0, 1]");
    const double d = c.width_m / 2 - c.tx_offset_m;
    const double x = link.horizontal_range_m;
    const double dz = c.tx_height_m - c.rx_height_m;
    const double r = std::sqrt(x * x + d * d + dz * dz);
    const double L = wall_loss(c.wall, wavenumber(link.frequency_hz));
    const auto g2 = c.ground.power_reflectance(c.tx_height_m + c.rx_height_m, std::hypot(x, d));

    PathGain out{detail::guided_law(link.wavelength_m(), c.width_m, L, r) * t_eff(pen, indoor.depth_m) *
                     enhancement_factors(g2.value, back_wall_gamma2) * indoor.loss_factor(),
                 g2.flags};
    out.flags.set_if(r < 10.0 * L * c.width_m, Regime::pre_asymptotic);
    return out;
}

// Reflections along the canyon, with extra loss per bounce from trees.
inline PathGain sidewalk_guided_gain(const StreetScene &s, const Link &link)
{
    s.validate();
    link.validate();
    const auto rho = vegetation_fraction(s);
    const double kr = s.foliage.kappa_np_per_m * rho.value;
    const double w = s.canyon.width_m;
    const double L1 = wall_loss(s.canyon.wall, wavenumber(link.frequency_hz)) + kr * w / 2;
    const double r = detail::street_range(s, link);
    const auto b = detail::street_bounces(s, link);

    PathGain out{detail::guided_law(link.wavelength_m(), w, L1, r) * b.value * std::exp(-kr * (s.foliage.depth_m + r)),
                 b.flags | rho.flags};
    out.flags.set_if(r < 10.0 * L1 * w, Regime::pre_asymptotic);
    return out;
}

// Side illumination of the sidewalk clutter, the lowest-order term of the series.
inline PathGain sidewalk_unguided_gain(const StreetScene &s, const Link &link)
{
    s.validate();
    link.validate();
    const auto rho = vegetation_fraction(s);
    const double r = detail::street_range(s, link);
    const auto b = detail::street_bounces(s, link);
    const double p = detail::quartic_law(link.wavelength_m(), s.standoff(), r, 1.0,
                                         s.foliage.kappa_np_per_m * rho.value * s.foliage.depth_m);
    return {p * b.value, b.flags | rho.flags};
}

inline PathGain canyon_with_trees_gain(const StreetScene &s, const Link &link)
{
    const auto g = sidewalk_guided_gain(s, link);
    const auto u = sidewalk_unguided_gain(s, link);
    return {std::max(g.linear, u.linear), g.flags | u.flags};
}

// Vegetated and clutter-covered shares of the direct slant path. Without an
// override, all of the path below tree height beyond the vegetation-free
// stretch counts as vegetation: a low ray runs along the tree row and meets
// crowns even when they are sparse. A street without trees has none.
struct DirectPathSplit
{
    double slant_m = 0.0;
    double vegetation_m = 0.0; // r_v
    double clutter_m = 0.0;    // slant length below clutter height
};

inline DirectPathSplit direct_path_split(const StreetScene &s, const MacroGeometry &m, const Link &link)
{
    const double x = link.horizontal_range_m;
    const double span = m.bs_height_m - m.mobile_height_m;
    DirectPathSplit out;
    out.slant_m = std::hypot(x, span);
    const double stretch = out.slant_m / x;

    // Horizontal distance at which the slant path drops below a height.
    auto below = [&](double height) { return x * std::clamp((m.bs_height_m - height) / span, 0.0, 1.0); };

    if (s.direct_veg_path_m)
    {
        out.vegetation_m = std::min(*s.direct_veg_path_m, out.slant_m);
    }
    else
    {
        const auto &t = s.foliage.trees;
        const double fraction = (t && t->fill_fraction == 0.0) ? 0.0 : 1.0;
        const double top = t ? t->tree_height_m : m.clutter_height_m;
        const double start = std::max(below(top), s.vegetation_free_m);
        out.vegetation_m = fraction * std::max(0.0, x - start) * stretch;
    }
    out.clutter_m = (x - below(m.clutter_height_m)) * stretch;
    return out;
}

struct CanyonTotal
{
    PathGain total;
    double guided = 0.0;
    double unguided = 0.0;
    double trees = 0.0; // max(guided, unguided)
    double over_top = 0.0;
    double direct = 0.0;
};

// Side penetration (max of guided and unguided) + over-top + attenuated direct path.
// The over-top descent and the direct path see kappa_v plus any pedestrian or
// scaffolding absorption.
inline CanyonTotal canyon_total_gain(const StreetScene &s, const MacroGeometry &m, const Link &link)
{
    s.validate();
    m.validate();
    link.validate();
    if (!(m.clutter_height_m > m.mobile_height_m))
        throw GeometryError("over-top laws need the mobile below the clutter height");

    CanyonTotal out;
    const auto g = sidewalk_guided_gain(s, link);
    const auto u = sidewalk_unguided_gain(s, link);
    out.guided = g.linear;
    out.unguided = u.linear;
    out.trees = std::max(g.linear, u.linear);

    const double kappa = s.foliage.kappa_np_per_m;
    const auto o = overtop_gain_wide(m, kappa + s.kappa_extra_np_per_m, link);
    out.over_top = o.linear;

    const auto split = direct_path_split(s, m, link);
    const double lam = link.wavelength_m();
    out.direct = std::pow(lam / (4.0 * kPi * split.slant_m), 2) *
                 std::exp(-kappa * split.vegetation_m - s.kappa_extra_np_per_m * split.clutter_m);

    out.total = {out.trees + out.over_top + out.direct, g.flags | u.flags | o.flags};
    return out;
}

} // namespace pathgain

#endif
