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

#ifndef PATHGAIN_DIFFUSE_HALFSPACE_HPP
#define PATHGAIN_DIFFUSE_HALFSPACE_HPP

#include "pathgain/common.hpp"

#include <cmath>
#include <variant>

// Average power coupled from a free-space source into a terminal embedded in a
// diffusely scattering, absorbing half space (foliage, building interiors).
//
// The boundary acts as a "hot wall": the source illuminates it from standoff
// d_s, the diffuse field of the terminal at depth d_in reaches it with
// absorption exp(-kappa r_in), and the two meet through an effective power
// transmission T_eff that folds in both material loss and aperture size.

namespace pathgain
{

struct UnboundedAperture
{
};

// Opening of width w1 across one axis, unbounded along the other.
struct StreetAperture
{
    double width_m = 0.0;
};

struct RectangularAperture
{
    double width1_m = 0.0;
    double width2_m = 0.0;
};

// Facade built from windows and solid wall; T values are power fractions.
struct FacadeMixture
{
    double window_fraction = 0.0;
    double window_T2 = 1.0;
    double wall_T2 = 0.0;
};

struct PenetrationSpec
{
    std::variant<UnboundedAperture, StreetAperture, RectangularAperture, FacadeMixture> shape{UnboundedAperture{}};
    double material_T2 = 1.0; // |T|^2 of the aperture covering; unused by FacadeMixture

    static PenetrationSpec unbounded(double T2 = 1.0) { return {UnboundedAperture{}, T2}; }
    static PenetrationSpec street(double width_m, double T2 = 1.0) { return {StreetAperture{width_m}, T2}; }
    static PenetrationSpec aperture(double w1, double w2, double T2 = 1.0) { return {RectangularAperture{w1, w2}, T2}; }
    static PenetrationSpec facade(double p_window, double window_T2, double wall_T2)
    {
        return {FacadeMixture{p_window, window_T2, wall_T2}, 1.0};
    }

    void validate() const
    {
        auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
        detail::require(fraction(material_T2), "material power transmission must lie in [0, 1]");
        if (auto s = std::get_if<StreetAperture>(&shape))
            detail::require(s->width_m > 0.0, "street aperture width must be positive");
        else if (auto a = std::get_if<RectangularAperture>(&shape))
            detail::require(a->width1_m > 0.0 && a->width2_m > 0.0, "aperture widths must be positive");
        else if (auto f = std::get_if<FacadeMixture>(&shape))
            detail::require(fraction(f->window_fraction) && fraction(f->window_T2) && fraction(f->wall_T2),
                            "facade fractions must lie in [0, 1]");
    }

    bool bounded() const
    {
        return std::holds_alternative<StreetAperture>(shape) || std::holds_alternative<RectangularAperture>(shape);
    }
};

struct DiffuseLink
{
    double standoff_m = 0.0;       // d_s, source to boundary plane
    double range_m = 0.0;          // r, source to centre of the illuminated region
    double depth_m = 0.0;          // d_in, terminal depth below the boundary
    double kappa_np_per_m = 0.0;   // absorption of the diffuse medium
    double wavelength_m = 0.0;

    void validate() const
    {
        detail::require(standoff_m > 0.0 && range_m > 0.0 && depth_m > 0.0 && wavelength_m > 0.0,
                        "diffuse link lengths must be positive");
        detail::require(kappa_np_per_m >= 0.0, "absorption must be nonnegative");
        detail::require(range_m >= standoff_m, "range must be at least the standoff distance");
    }
};

// Effective boundary power transmission seen by a terminal at depth d_in.
inline double t_eff(const PenetrationSpec &spec, double depth_m)
{
    spec.validate();
    if (spec.bounded())
        detail::require(depth_m > 0.0, "terminal depth must be positive for a bounded aperture");

    const double T2 = spec.material_T2;
    if (auto s = std::get_if<StreetAperture>(&spec.shape))
        return T2 * (2.0 / kPi) * std::atan(s->width_m / (2.0 * depth_m));
    if (auto a = std::get_if<RectangularAperture>(&spec.shape))
    {
        const double w1 = a->width1_m, w2 = a->width2_m, d = depth_m;
        return T2 * (2.0 / kPi) * std::atan(w1 * w2 / (2.0 * d * std::sqrt(4.0 * d * d + w1 * w1 + w2 * w2)));
    }
    if (auto f = std::get_if<FacadeMixture>(&spec.shape))
        return f->window_fraction * f->window_T2 + (1.0 - f->window_fraction) * f->wall_T2;
    return T2;
}

// lambda^2 d_s^2 T_eff exp(-kappa d_in) / (8 pi^2 r^4)
inline double diffuse_pathgain(const DiffuseLink &link, const PenetrationSpec &spec)
{
    link.validate();
    const double lam = link.wavelength_m;
    const double ds = link.standoff_m;
    const double r2 = link.range_m * link.range_m;
    return lam * lam * ds * ds * t_eff(spec, link.depth_m) * std::exp(-link.kappa_np_per_m * link.depth_m) /
           (8.0 * kPi * kPi * r2 * r2);
}

// Extra power from one ground bounce and one back-wall bounce near the terminal.
inline double enhancement_factors(double gamma_g2, double gamma_w2)
{
    if (!(gamma_g2 >= 0.0 && gamma_g2 <= 1.0 && gamma_w2 >= 0.0 && gamma_w2 <= 1.0))
        throw std::out_of_range("power reflection coefficients must lie in [0, 1]");
    return (1.0 + gamma_g2) * (1.0 + gamma_w2);
}

} // namespace pathgain

#endif
