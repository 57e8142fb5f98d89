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

#ifndef PATHGAIN_SURFACE_EM_HPP
#define PATHGAIN_SURFACE_EM_HPP

#include "pathgain/common.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

// Reflection from smooth and rough dielectric boundaries at low grazing
// angles, and the per-radian wall-loss parameter L built from them.

namespace pathgain
{

enum class Polarization
{
    perpendicular, // electric field parallel to the boundary (TE)
    parallel,      // electric field in the plane of incidence (TM); vertical polarization on the ground
};

// Low-grazing approximations are trusted up to this angle. Above it results are
// still computed but carry Regime::extrapolated_angle.
inline constexpr double kLowGrazingValidityRad = 0.3;

struct Dielectric
{
    double refraction_index = 2.0; // real relative index, > 1

    void validate() const
    {
        detail::require(refraction_index > 1.0, "refraction index must exceed 1");
    }
};

inline const Dielectric kTypicalGround{std::sqrt(5.0)};

// 2-state random telegraph surface: wall sections and window wells of
// half-depth A, occupying fractions p1 / p2 with exponential run lengths.
struct TelegraphRoughness
{
    double half_depth_m = 0.0; // A
    double fraction_p1 = 0.5;
    double fraction_p2 = 0.5;
    double rate_mu1 = 1.0; // 1/m, inverse mean window width
    double rate_mu2 = 1.0; // 1/m, inverse mean inter-window spacing

    static TelegraphRoughness from_mean_lengths(double half_depth_m, double p1, double p2,
                                                double mean_width_m, double mean_gap_m)
    {
        detail::require(mean_width_m > 0.0 && mean_gap_m > 0.0, "roughness mean lengths must be positive");
        TelegraphRoughness r{half_depth_m, p1, p2, 1.0 / mean_width_m, 1.0 / mean_gap_m};
        r.validate();
        return r;
    }

    void validate() const
    {
        detail::require(half_depth_m >= 0.0, "roughness half-depth must be nonnegative");
        detail::require(fraction_p1 > 0.0 && fraction_p1 < 1.0 && fraction_p2 > 0.0 && fraction_p2 < 1.0,
                        "roughness state fractions must lie in (0, 1)");
        detail::require(std::abs(fraction_p1 + fraction_p2 - 1.0) <= 1e-12, "roughness state fractions must sum to 1");
        detail::require(rate_mu1 > 0.0 && rate_mu2 > 0.0, "roughness transition rates must be positive");
    }

    double total_rate() const { return rate_mu1 + rate_mu2; }
    double mean_height() const { return half_depth_m * (fraction_p1 - fraction_p2); }
    // Height variance about the mean, 4 A^2 p1 p2.
    double variance() const { return 4.0 * half_depth_m * half_depth_m * fraction_p1 * fraction_p2; }
};

struct WallSurface
{
    Dielectric dielectric;
    std::optional<TelegraphRoughness> roughness; // empty: smooth wall

    void validate() const
    {
        dielectric.validate();
        if (roughness)
            roughness->validate();
    }
};

struct GrazingAngle
{
    double radians = 0.0;
    double validity_threshold = kLowGrazingValidityRad;

    void validate() const
    {
        detail::require(radians >= 0.0 && radians <= kPi / 2 + 1e-15, "grazing angle must lie in [0, pi/2]");
    }
    bool extrapolated() const { return radians > validity_threshold; }
};

// Plane-wave field reflection coefficient of a dielectric half space.
inline std::complex<double> fresnel_exact(GrazingAngle theta, Dielectric n, Polarization pol)
{
    theta.validate();
    n.validate();
    const double s = std::sin(theta.radians);
    const double c = std::cos(theta.radians);
    const double n2 = n.refraction_index * n.refraction_index;
    const double root = std::sqrt(n2 - c * c);
    if (pol == Polarization::perpendicular)
        return (s - root) / (s + root);
    return (n2 * s - root) / (n2 * s + root);
}

// Two-term low-grazing form written as a negative exponential.
inline Flagged<double> fresnel_lowgraze_approx(GrazingAngle theta, Dielectric n, Polarization pol)
{
    theta.validate();
    n.validate();
    const double idx = n.refraction_index;
    double rate = 2.0 / idx;
    if (pol == Polarization::parallel)
    {
        const double n2 = idx * idx;
        if (!(n2 > 2.0))
            throw std::domain_error("parallel low-grazing reflection needs refraction index above sqrt(2)");
        rate = 2.0 * n2 / std::sqrt(n2 - 2.0);
    }
    Flagged<double> out{-std::exp(-rate * theta.radians), {}};
    out.flags.set_if(theta.extrapolated(), Regime::extrapolated_angle);
    return out;
}

// Continuous part of the telegraph-surface height spectrum (m^3). The delta
// at chi = 0 carries the mean height and only shifts the specular plane.
inline double roughness_spectrum(const TelegraphRoughness &r, double chi_x)
{
    const double mu = r.total_rate();
    detail::require(mu > 0.0, "roughness transition rates must be positive");
    return r.variance() / (2.0 * kPi) * 2.0 * mu / (mu * mu + chi_x * chi_x);
}

// Per-radian specular loss rate from large-scale roughness, 16 k^1.5 A^2 p1 p2 sqrt(mu1 + mu2).
inline double roughness_loss_rate(const TelegraphRoughness &r, double wavenumber_rad_m)
{
    detail::require(wavenumber_rad_m > 0.0, "wavenumber must be positive");
    const double A = r.half_depth_m;
    return 16.0 * std::pow(wavenumber_rad_m, 1.5) * A * A * r.fraction_p1 * r.fraction_p2 * std::sqrt(r.total_rate());
}

inline Flagged<double> specular_roughness_factor(GrazingAngle theta, const TelegraphRoughness &r, double wavenumber_rad_m)
{
    theta.validate();
    Flagged<double> out{std::exp(-roughness_loss_rate(r, wavenumber_rad_m) * theta.radians), {}};
    out.flags.set_if(theta.extrapolated(), Regime::extrapolated_angle);
    out.flags.set_if(wavenumber_rad_m < 10.0 * r.total_rate(), Regime::small_scale_roughness);
    return out;
}

// Dimensionless wall-loss parameter: |Gamma(theta)|^2 = exp(-L theta).
inline double wall_loss(const WallSurface &surface, double wavenumber_rad_m)
{
    surface.validate();
    detail::require(wavenumber_rad_m > 0.0, "wavenumber must be positive");
    double L = 4.0 / surface.dielectric.refraction_index;
    if (surface.roughness)
        L += 2.0 * roughness_loss_rate(*surface.roughness, wavenumber_rad_m);
    return L;
}

// Magnitude of the rough-wall reflection coefficient, exp(-(L/2) theta).
inline Flagged<double> reflection_total(GrazingAngle theta, const WallSurface &surface, double wavenumber_rad_m)
{
    theta.validate();
    Flagged<double> out{std::exp(-0.5 * wall_loss(surface, wavenumber_rad_m) * theta.radians), {}};
    out.flags.set_if(theta.extrapolated(), Regime::extrapolated_angle);
    if (surface.roughness)
        out.flags.set_if(wavenumber_rad_m < 10.0 * surface.roughness->total_rate(), Regime::small_scale_roughness);
    return out;
}

// Ground (floor) reflection. Vertical antennas see the parallel form.
struct GroundModel
{
    Dielectric dielectric = kTypicalGround;
    Polarization polarization = Polarization::parallel;
    std::optional<double> fixed_gamma; // real field coefficient overriding the dielectric model

    Flagged<double> gamma(double grazing_rad) const
    {
        if (fixed_gamma)
        {
            detail::require(std::abs(*fixed_gamma) <= 1.0, "ground reflection magnitude must not exceed 1");
            return {*fixed_gamma, {}};
        }
        return fresnel_lowgraze_approx(GrazingAngle{grazing_rad}, dielectric, polarization);
    }

    // |Gamma_g|^2 for a ground image at height sum h_sum over horizontal distance.
    Flagged<double> power_reflectance(double height_sum_m, double horizontal_m) const
    {
        detail::require(height_sum_m >= 0.0 && horizontal_m >= 0.0, "ground geometry must be nonnegative");
        const auto g = gamma(std::atan2(height_sum_m, horizontal_m));
        return {g.value * g.value, g.flags};
    }
};

// |Gamma|^2 of the exact coefficient averaged uniformly over grazing angles in
// [0, pi/2]; an alternative to the unit back-wall reflectance.
inline double angle_averaged_power_reflectance(Dielectric n, Polarization pol)
{
    n.validate();
    auto f = [&](double t) { return std::norm(fresnel_exact(GrazingAngle{t}, n, pol)); };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, kPi / 2, 10, 1e-12);
    return integral / (kPi / 2);
}

} // namespace pathgain

#endif
