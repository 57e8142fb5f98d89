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

#ifndef PATHGAIN_ORACLES_HPP
#define PATHGAIN_ORACLES_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/common.hpp"
#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/surface_em.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

// Brute-force references for the closed forms: exact image sums, the
// discrete reflection series behind the guided laws, and direct quadrature
// of the hot-wall integral and of the roughness loss integral.

namespace pathgain
{

class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class OracleCancelled : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Cooperative cancellation: a wall-clock deadline and/or an external flag.
struct Deadline
{
    std::optional<std::chrono::steady_clock::time_point> at;
    const std::atomic<bool> *cancel = nullptr;

    static Deadline after(std::chrono::milliseconds d) { return {std::chrono::steady_clock::now() + d, nullptr}; }

    bool expired() const
    {
        if (cancel && cancel->load(std::memory_order_relaxed))
            return true;
        return at && std::chrono::steady_clock::now() >= *at;
    }
    void check() const
    {
        if (expired())
            throw OracleCancelled("oracle cancelled or past its deadline");
    }
};

struct SummationControl
{
    std::int64_t max_order = 1'000'000;
    double relative_tail_tol = 1e-10;
    Deadline deadline{};

    void validate() const
    {
        detail::require(max_order >= 1, "max_order must be at least 1");
        detail::require(relative_tail_tol > 0.0, "tail tolerance must be positive");
    }
};

struct QuadratureControl
{
    double abs_tol = 1e-14;
    double rel_tol = 1e-9;
    unsigned max_subdivisions = 15; // bisection depth per axis
    Deadline deadline{};

    void validate() const
    {
        detail::require(abs_tol > 0.0 && rel_tol > 0.0, "quadrature tolerances must be positive");
        detail::require(max_subdivisions >= 1, "max_subdivisions must be at least 1");
    }
};

struct OracleValue
{
    double value = 0.0;
    double error_estimate = 0.0; // absolute
    std::int64_t terms = 0;      // series terms or integrand calls
};

namespace detail
{
// Accumulates nonnegative series terms and decides when the remaining tail is
// negligible. A term t at order m with a running total S stops the sum when
// m t < tol S, a bound that also covers 1/m^2 tails.
class SeriesTail
{
public:
    SeriesTail(const SummationControl &ctl) : ctl_(ctl) { ctl.validate(); }

    bool done(std::int64_t m, double term, double total) const
    {
        if (m % 1024 == 0)
            ctl_.deadline.check();
        return m > 0 && double(m) * term < ctl_.relative_tail_tol * total;
    }
    [[noreturn]] void fail(const char *what) const
    {
        throw ConvergenceError(std::string(what) + ": no convergence within max_order = " + std::to_string(ctl_.max_order));
    }
    std::int64_t max_order() const { return ctl_.max_order; }
    double tol() const { return ctl_.relative_tail_tol; }

private:
    const SummationControl &ctl_;
};
} // namespace detail

struct ImageSumOptions
{
    bool include_ground = false;
    bool coherent = false;
    std::optional<double> wall_loss_override; // 0 gives lossless (metallic) walls
};

// Two-sided sum over wall images m = 0, +-1, +-2, ... with exact image
// positions y_m = m w + (-1)^m y_s and grazing angles, wall reflection
// exp(-L theta / 2) per bounce. Optional ground image per wall image. Powers
// add unless `coherent`, in which case fields with the sign of each
// reflection coefficient add.
inline OracleValue image_sum_power(const LosLink &link, const SummationControl &ctl, const ImageSumOptions &opt = {})
{
    link.validate();
    const auto &g = link.geometry;
    const double k = link.wavenumber_rad_m();
    const double lam = link.wavelength_m();
    const double L = opt.wall_loss_override.value_or(link.wall_loss());
    detail::require(L >= 0.0, "wall loss must be nonnegative");

    const double x = link.horizontal_range_m;
    const double dz = g.tx_height_m - g.rx_height_m;
    const double hz = g.tx_height_m + g.rx_height_m;
    const double horiz_direct = std::hypot(x, dz);
    const double horiz_ground = std::hypot(x, hz);

    double power = 0.0;
    std::complex<double> field{0.0, 0.0};
    detail::SeriesTail tail(ctl);

    auto add_image = [&](std::int64_t m) {
        const double ym = double(m) * g.width_m + ((m % 2 == 0) ? g.tx_offset_m : -g.tx_offset_m);
        const double dy = std::abs(ym - g.rx_offset_m);
        const double order = double(std::llabs(m));
        const double sign = (std::llabs(m) % 2 == 0) ? 1.0 : -1.0;

        double p = 0.0;
        const double d = std::hypot(horiz_direct, dy);
        const double amp = std::exp(-0.5 * L * order * std::atan2(dy, horiz_direct));
        p += amp * amp / (d * d);
        if (opt.coherent)
            field += sign * amp * std::polar(1.0, k * d) / d;

        if (opt.include_ground)
        {
            const double dg = std::hypot(horiz_ground, dy);
            const auto gg = g.ground.gamma(std::asin(hz / dg)).value;
            const double amp_g = std::exp(-0.5 * L * order * std::atan2(dy, horiz_ground)) * gg;
            p += amp_g * amp_g / (dg * dg);
            if (opt.coherent)
                field += sign * amp_g * std::polar(1.0, k * dg) / dg;
        }
        power += p;
        return p;
    };

    add_image(0);
    std::int64_t m = 1;
    for (; m <= ctl.max_order; ++m)
    {
        const double t = add_image(m) + add_image(-m);
        if (tail.done(m, t, power))
            break;
    }
    if (m > ctl.max_order)
        tail.fail("image sum");

    const double scale = lam * lam / (16.0 * kPi * kPi);
    OracleValue out;
    out.value = scale * (opt.coherent ? std::norm(field) : power);
    out.error_estimate = scale * power * ctl.relative_tail_tol;
    out.terms = 2 * m + 1;
    return out;
}

// Reflection series for a terminal behind the canyon wall on one side, the
// base at distance d from that wall. Image standoffs d_m = m w + d (even m),
// m w + w - d (odd m); each image carries exp(-L m d_m / r), i.e. m bounces
// at grazing angle d_m / r.
inline OracleValue oi_image_series_power(const CanyonGeometry &c, const PenetrationSpec &pen, const IndoorClutter &indoor,
                                         const Link &link, const SummationControl &ctl, double back_wall_gamma2 = 1.0,
                                         std::optional<double> wall_loss_override = std::nullopt)
{
    c.validate();
    indoor.validate();
    link.validate();
    const double w = c.width_m;
    const double d = w / 2 - c.tx_offset_m;
    const double x = link.horizontal_range_m;
    const double dz = c.tx_height_m - c.rx_height_m;
    const double r = std::sqrt(x * x + d * d + dz * dz);
    const double L = wall_loss_override.value_or(wall_loss(c.wall, wavenumber(link.frequency_hz)));
    const double lam = link.wavelength_m();
    const auto g2 = c.ground.power_reflectance(c.tx_height_m + c.rx_height_m, std::hypot(x, d));

    double sum = 0.0;
    detail::SeriesTail tail(ctl);
    std::int64_t m = 0;
    for (; m <= ctl.max_order; ++m)
    {
        const double dm = (m % 2 == 0) ? double(m) * w + d : double(m) * w + w - d;
        const double t = (m == 0) ? dm * dm : dm * dm * std::exp(-L * double(m) * dm / r);
        sum += t;
        if (tail.done(m, t, sum) || (std::isinf(L) && m > 0))
            break;
    }
    if (m > ctl.max_order)
        tail.fail("outdoor-indoor series");

    const double pre = lam * lam * t_eff(pen, indoor.depth_m) * enhancement_factors(g2.value, back_wall_gamma2) *
                       indoor.loss_factor() / (8.0 * kPi * kPi * r * r * r * r);
    return {pre * sum, pre * sum * ctl.relative_tail_tol, m + 1};
}

// Sidewalk reflection series with vegetation: image m travels r_m = sqrt(r^2 + d_m^2)
// of which a share rho_v lies in trees; d = standoff.
inline OracleValue guided_trees_series_power(const StreetScene &s, const Link &link, const SummationControl &ctl)
{
    s.validate();
    link.validate();
    const double w = s.canyon.width_m;
    const double d = s.standoff();
    const double r = detail::street_range(s, link);
    const double L = wall_loss(s.canyon.wall, wavenumber(link.frequency_hz));
    const double kr = s.foliage.kappa_np_per_m * vegetation_fraction(s).value;
    const auto b = detail::street_bounces(s, link);
    const double lam = link.wavelength_m();

    double sum = 0.0;
    detail::SeriesTail tail(ctl);
    std::int64_t m = 0;
    for (; m <= ctl.max_order; ++m)
    {
        const double dm = (m % 2 == 0) ? double(m) * w + d : double(m) * w + w - d;
        const double rm = std::hypot(r, dm);
        const double t = dm * dm * std::exp(-L * double(m) * dm / r - kr * rm);
        sum += t;
        if (tail.done(m, t, sum))
            break;
    }
    if (m > ctl.max_order)
        tail.fail("guided tree series");

    const double pre = lam * lam * std::exp(-kr * s.foliage.depth_m) * b.value / (8.0 * kPi * kPi * r * r * r * r);
    return {pre * sum, pre * sum * ctl.relative_tail_tol, m + 1};
}

enum class HotWallMode
{
    far_source,     // source distance frozen at r over the hot region
    exact_distance, // source distance |R| and standoff factor evaluated per boundary point
};

// Placement of the terminal relative to the source for exact_distance mode:
// boundary plane at standoff d_s from the source, hot-region centre offset
// (along, vertical) in that plane from the foot of the source.
struct HotWallGeometry
{
    double along_m = 0.0;
    double vertical_m = 0.0;
};

namespace detail
{
template <class F>
inline double gk(F f, double a, double b, const QuadratureControl &ctl, double *err)
{
    double e = 0.0, l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, ctl.max_subdivisions, ctl.rel_tol * 1e-2, &e, &l1);
    if (err)
        *err += e;
    return v;
}

// e^{-kappa r'} (kappa r' + 1) d / r'^3, the hot-wall kernel without constants.
inline double hotwall_kernel(double kappa, double d, double rp)
{
    return std::exp(-kappa * rp) * (kappa * rp + 1.0) * d / (rp * rp * rp);
}
} // namespace detail

// 2-D quadrature of the hot-wall power integral over the boundary:
//     P = lambda^2 d_s^2 |T|^2 / (16 pi^3) * iint e^{-kappa r'} (kappa r' + 1) d_in / (r'^3 R^4) dA
// with R = r fixed (far_source) or the true source-to-point distance
// (exact_distance). The aperture shape limits the domain; its material
// transmission scales the result. FacadeMixture is treated as unbounded
// with T_eff as |T|^2.
inline OracleValue hotwall_quadrature(const DiffuseLink &link, const PenetrationSpec &spec, const QuadratureControl &ctl,
                                      HotWallMode mode = HotWallMode::far_source, HotWallGeometry geo = {})
{
    link.validate();
    spec.validate();
    ctl.validate();
    const double d = link.depth_m;
    const double kappa = link.kappa_np_per_m;
    const double ds = link.standoff_m;
    const double lam = link.wavelength_m;
    const double r = link.range_m;
    if (mode == HotWallMode::exact_distance)
        detail::require(std::abs(std::hypot(std::hypot(geo.along_m, geo.vertical_m), ds) - r) <= 1e-9 * r,
                        "hot-wall geometry must place the hot-region centre at range r");

    std::int64_t calls = 0;
    auto R4 = [&](double u, double v) {
        if (mode == HotWallMode::far_source)
            return r * r * r * r;
        const double a = geo.along_m + u, b = geo.vertical_m + v;
        const double R2 = a * a + b * b + ds * ds;
        return R2 * R2;
    };
    auto kernel = [&](double u, double v) {
        if ((calls++ & 0x3fff) == 0)
            ctl.deadline.check();
        const double rp = std::sqrt(d * d + u * u + v * v);
        return detail::hotwall_kernel(kappa, d, rp) / R4(u, v);
    };

    double err = 0.0;
    double integral = 0.0;
    double T2 = spec.material_T2;
    const double inf = std::numeric_limits<double>::infinity();

    if (auto a = std::get_if<RectangularAperture>(&spec.shape))
    {
        const double h1 = a->width1_m / 2, h2 = a->width2_m / 2;
        auto inner = [&](double u) {
            auto f = [&](double v) { return kernel(u, v); };
            return detail::gk(f, -h2, 0.0, ctl, &err) + detail::gk(f, 0.0, h2, ctl, &err);
        };
        integral = detail::gk(inner, -h1, 0.0, ctl, &err) + detail::gk(inner, 0.0, h1, ctl, &err);
    }
    else if (auto s = std::get_if<StreetAperture>(&spec.shape))
    {
        const double h1 = s->width_m / 2;
        auto inner = [&](double u) {
            auto f = [&](double v) { return kernel(u, v); };
            return detail::gk(f, -inf, 0.0, ctl, &err) + detail::gk(f, 0.0, inf, ctl, &err);
        };
        integral = detail::gk(inner, -h1, 0.0, ctl, &err) + detail::gk(inner, 0.0, h1, ctl, &err);
    }
    else
    {
        if (std::holds_alternative<FacadeMixture>(spec.shape))
            T2 = t_eff(spec, d);
        // Polar coordinates about the hot-region centre.
        auto inner = [&](double phi) {
            const double c = std::cos(phi), sn = std::sin(phi);
            auto f = [&](double rho) { return rho * kernel(rho * c, rho * sn); };
            return detail::gk(f, 0.0, d, ctl, &err) + detail::gk(f, d, inf, ctl, &err);
        };
        integral = detail::gk(inner, 0.0, kPi, ctl, &err) + detail::gk(inner, kPi, 2.0 * kPi, ctl, &err);
    }

    const double pre = lam * lam * ds * ds * T2 / (16.0 * kPi * kPi * kPi);
    if (!(err <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(integral))) && !(pre * err <= ctl.abs_tol))
        throw ConvergenceError("hot-wall quadrature did not reach the requested tolerance");
    return {pre * integral, pre * err, calls};
}

// Radial reduction of the unbounded far-source integral:
// 2 pi int_{d}^{inf} (d / r') d/dr'(-e^{-kappa r'} / r') dr' = 2 pi e^{-kappa d}.
inline OracleValue hotwall_radial(const DiffuseLink &link, double material_T2, const QuadratureControl &ctl)
{
    link.validate();
    ctl.validate();
    const double d = link.depth_m, kappa = link.kappa_np_per_m;
    auto f = [&](double rp) { return detail::hotwall_kernel(kappa, d, rp) * rp; };
    double err = 0.0;
    const double integral = 2.0 * kPi * (detail::gk(f, d, 2.0 * d, ctl, &err) +
                                         detail::gk(f, 2.0 * d, std::numeric_limits<double>::infinity(), ctl, &err));
    const double r2 = link.range_m * link.range_m;
    const double pre = link.wavelength_m * link.wavelength_m * link.standoff_m * link.standoff_m * material_T2 /
                       (16.0 * kPi * kPi * kPi * r2 * r2);
    return {pre * integral, pre * 2.0 * kPi * err, 0};
}

enum class RoughnessBracket
{
    simplified, // sqrt(2 |chi| / k), large-scale roughness at grazing incidence
    general,    // [sin^2 t + 2 (chi/k) cos t - (chi/k)^2]^{1/2}, evanescent part dropped
};

struct RoughnessLoss
{
    OracleValue loss; // per-reflection loss term, 1 - |V_c|
    RegimeFlags flags{};
};

// Numerical loss term of the mean specular coefficient of a 1-D telegraph
// surface: 2 k^2 sin(theta) int G(chi) B(chi) dchi over the continuous spectrum.
inline RoughnessLoss roughness_integral(GrazingAngle theta, const TelegraphRoughness &rough, double wavenumber_rad_m,
                                        const QuadratureControl &ctl, RoughnessBracket bracket = RoughnessBracket::simplified)
{
    theta.validate();
    rough.validate();
    ctl.validate();
    detail::require(wavenumber_rad_m > 0.0, "wavenumber must be positive");
    const double k = wavenumber_rad_m;
    const double mu = rough.total_rate();
    const double t = theta.radians;

    RoughnessLoss out;
    out.flags.set_if(theta.extrapolated(), Regime::extrapolated_angle);
    out.flags.set_if(k < 10.0 * mu, Regime::small_scale_roughness);
    if (rough.half_depth_m == 0.0)
        return out;

    double err = 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    double half = 0.0; // integral over chi >= 0; G is even
    if (bracket == RoughnessBracket::simplified)
    {
        // chi = u^2 removes the sqrt at the origin and the slow chi^-1.5 tail.
        auto f = [&](double u) { return roughness_spectrum(rough, u * u) * std::sqrt(2.0 / k) * 2.0 * u * u; };
        const double um = std::sqrt(mu);
        half = detail::gk(f, 0.0, um, ctl, &err) + detail::gk(f, um, inf, ctl, &err);
        out.loss.value = 2.0 * k * k * t * 2.0 * half;
    }
    else
    {
        const double s = std::sin(t), c = std::cos(t);
        // Bracket vanishes at q = cos t + 1 (q = chi/k); beyond it the wave is evanescent.
        const double qmax = c + std::sqrt(c * c + s * s);
        auto f = [&](double chi) {
            const double q = chi / k;
            const double b = s * s + 2.0 * q * c - q * q;
            return b > 0.0 ? roughness_spectrum(rough, chi) * std::sqrt(b) : 0.0;
        };
        half = detail::gk(f, 0.0, mu, ctl, &err) + detail::gk(f, mu, qmax * k, ctl, &err);
        out.loss.value = 2.0 * k * k * s * 2.0 * half;
    }
    out.loss.error_estimate = 4.0 * k * k * t * err;
    return out;
}

enum class GapKind
{
    db,       // 10 log10(closed / oracle)
    relative, // closed / oracle - 1
    absolute, // closed - oracle
};

// A named closed-form versus oracle comparison.
struct OracleReport
{
    std::string suite;
    std::string name;
    double closed_form = 0.0;
    double oracle = 0.0;
    double gap = 0.0;
    double bound = 0.0;
    GapKind kind = GapKind::db;
    bool gated = true; // informational rows never fail a suite
    RegimeFlags flags{};

    bool passed() const { return !gated || std::abs(gap) <= bound; }
};

inline OracleReport compare(std::string suite, std::string name, double closed, double oracle, double bound, GapKind kind,
                            RegimeFlags flags = {})
{
    double gap = closed - oracle;
    if (kind == GapKind::db)
        gap = to_db(closed / oracle);
    else if (kind == GapKind::relative)
        gap = closed / oracle - 1.0;
    return {std::move(suite), std::move(name), closed, oracle, gap, bound, kind, true, flags};
}

} // namespace pathgain

#endif
