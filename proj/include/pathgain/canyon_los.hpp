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

#ifndef PATHGAIN_CANYON_LOS_HPP
#define PATHGAIN_CANYON_LOS_HPP

#include "pathgain/common.hpp"
#include "pathgain/surface_em.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

// Line-of-sight path gain between antennas in a street canyon or corridor.
//
// Wall reflections form a row of image sources spaced w apart. Summing their
// powers with reflection loss exp(-L m^2 w / r) and treating the sum as an
// integral over reflection order gives a power law with exponent 1.5:
//
//     P = lambda^2 / (16 pi^1.5 sqrt(w L) r^1.5)
//
// The ground adds one more image, either coherently (two-ray beating) or in
// power (factor 1 + |Gamma_g|^2).

namespace pathgain
{

struct CanyonGeometry
{
    double width_m = 0.0;
    double tx_height_m = 0.0;
    double rx_height_m = 0.0;
    GroundModel ground;
    WallSurface wall;
    double tx_offset_m = 0.0; // across-canyon offset from the centre line
    double rx_offset_m = 0.0;

    void validate() const
    {
        detail::require(width_m > 0.0, "canyon width must be positive");
        detail::require(tx_height_m > 0.0 && rx_height_m > 0.0, "antenna heights must be positive");
        detail::require(std::abs(tx_offset_m) < width_m / 2 && std::abs(rx_offset_m) < width_m / 2,
                        "antenna offsets must lie inside the canyon");
        wall.validate();
    }
};

struct LosLink
{
    CanyonGeometry geometry;
    double horizontal_range_m = 0.0;
    double frequency_hz = 0.0;

    void validate() const
    {
        geometry.validate();
        detail::require(horizontal_range_m > 0.0, "range must be positive");
        detail::require(frequency_hz > 0.0, "frequency must be positive");
    }

    double range() const
    {
        return std::hypot(horizontal_range_m, geometry.tx_height_m - geometry.rx_height_m);
    }
    double wavelength_m() const { return pathgain::wavelength(frequency_hz); }
    double wavenumber_rad_m() const { return pathgain::wavenumber(frequency_hz); }
    double wall_loss() const { return pathgain::wall_loss(geometry.wall, wavenumber_rad_m()); }
};

// The centred-antenna power law alone, with no regime handling.
inline double los_canyon_closed_form(const LosLink &link)
{
    link.validate();
    const double lam = link.wavelength_m();
    const double r = link.range();
    return lam * lam / (16.0 * std::pow(kPi, 1.5) * std::sqrt(link.geometry.width_m * link.wall_loss()) * std::pow(r, 1.5));
}

namespace detail
{
inline RegimeFlags canyon_flags(const LosLink &link)
{
    RegimeFlags f;
    const auto &g = link.geometry;
    const double r = link.range();
    const double lam = link.wavelength_m();
    f.set_if(r < 2.0 * g.width_m, Regime::short_range);
    f.set_if(link.wall_loss() < 10.0 * g.width_m / r, Regime::weak_wall_loss);
    f.set_if(g.width_m / 2 - std::abs(g.tx_offset_m) < lam || g.width_m / 2 - std::abs(g.rx_offset_m) < lam,
             Regime::near_wall);
    return f;
}
} // namespace detail

// Waveguide power law, falling back to free space where the image sum is
// carried by the direct path alone (r < L w / pi, including r < w).
inline PathGain los_canyon_gain(const LosLink &link)
{
    const double guided = los_canyon_closed_form(link);
    const double lam = link.wavelength_m();
    const double r = link.range();
    const double free_space = std::pow(lam / (4.0 * kPi * r), 2);

    PathGain out{std::max(guided, free_space), detail::canyon_flags(link)};
    out.flags.set_if(free_space > guided, Regime::few_images);
    return out;
}

struct GroundReflection
{
    double gamma = 0.0;         // real field coefficient
    double image_range_m = 0.0; // r_g, ground image to receiver
    double grazing_rad = 0.0;
    RegimeFlags flags{};
};

inline GroundReflection ground_reflection(const LosLink &link)
{
    link.validate();
    const auto &g = link.geometry;
    const double hsum = g.tx_height_m + g.rx_height_m;
    const double rg = std::hypot(link.horizontal_range_m, hsum);
    const double theta = std::asin(hsum / rg);
    const auto gamma = g.ground.gamma(theta);
    return {gamma.value, rg, theta, gamma.flags};
}

// |exp(ikr) + Gamma exp(ik r_g)|^2
inline double two_ray_factor(double wavenumber_rad_m, double path_difference_m, double gamma)
{
    return 1.0 + gamma * gamma + 2.0 * gamma * std::cos(wavenumber_rad_m * path_difference_m);
}

namespace detail
{
// r_g - r without cancellation.
inline double ground_path_difference(const LosLink &link)
{
    const auto &g = link.geometry;
    const double a = g.tx_height_m + g.rx_height_m;
    const double b = g.tx_height_m - g.rx_height_m;
    const double x = link.horizontal_range_m;
    return (a * a - b * b) / (std::hypot(x, a) + std::hypot(x, b));
}
} // namespace detail

inline PathGain los_gain_coherent(const LosLink &link)
{
    auto base = los_canyon_gain(link);
    const auto gr = ground_reflection(link);
    base.linear *= two_ray_factor(link.wavenumber_rad_m(), detail::ground_path_difference(link), gr.gamma);
    base.flags |= gr.flags;
    return base;
}

inline PathGain los_gain_incoherent(const LosLink &link)
{
    auto base = los_canyon_gain(link);
    const auto gr = ground_reflection(link);
    base.linear *= 1.0 + gr.gamma * gr.gamma;
    base.flags |= gr.flags;
    return base;
}

inline double two_ray_breakpoint_m(const LosLink &link)
{
    return 4.0 * link.geometry.tx_height_m * link.geometry.rx_height_m / link.wavelength_m();
}

// Mean of the coherent gain over the range window in which the two-ray phase
// k (r_g - r) sweeps one full cycle centred on the link's phase. Needs the
// link to sit at least half a cycle before the breakpoint.
inline double coherent_cycle_average(const LosLink &link)
{
    link.validate();
    const auto &g = link.geometry;
    const double k = link.wavenumber_rad_m();
    const double a = g.tx_height_m + g.rx_height_m;
    const double b = std::abs(g.tx_height_m - g.rx_height_m);
    const double phase = k * detail::ground_path_difference(link);
    const double max_phase = k * (a - b);
    if (phase - kPi <= 0.0 || phase + kPi >= max_phase)
        throw std::domain_error("no full two-ray phase cycle around this range");

    // Horizontal range at which r_g - r equals delta.
    auto range_at = [&](double delta) {
        const double s = (a * a - b * b - delta * delta) / (2.0 * delta);
        return std::sqrt(s * s - b * b);
    };
    const double x_lo = range_at((phase + kPi) / k);
    const double x_hi = range_at((phase - kPi) / k);

    LosLink probe = link;
    auto f = [&](double x) {
        probe.horizontal_range_m = x;
        return los_gain_coherent(probe).linear;
    };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, x_lo, x_hi, 15, 1e-10);
    return integral / (x_hi - x_lo);
}

} // namespace pathgain

#endif
