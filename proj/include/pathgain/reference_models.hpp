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

#ifndef PATHGAIN_REFERENCE_MODELS_HPP
#define PATHGAIN_REFERENCE_MODELS_HPP

#include "pathgain/common.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

// Baselines: free space, slope-intercept, and 3GPP empirical path loss.
// 3GPP formulas take frequency in GHz and distance in metres and return loss
// in dB; everything else here is linear gain or gain in dB.

namespace pathgain
{

inline double friis_gain(double wavelength_m, double range_m)
{
    detail::require(wavelength_m > 0.0 && range_m > 0.0, "wavelength and range must be positive");
    const double a = wavelength_m / (4.0 * kPi * range_m);
    return a * a;
}

// P_dB(r) = P1_dB - 10 n log10(r), r in metres.
struct SlopeIntercept
{
    double intercept_db = 0.0;
    double exponent = 2.0;

    double eval_db(double range_m) const
    {
        detail::require(range_m > 0.0, "range must be positive");
        return intercept_db - 10.0 * exponent * std::log10(range_m);
    }
};

inline double slope_intercept_eval(const SlopeIntercept &m, double range_m) { return m.eval_db(range_m); }

enum class ThreeGppFamily
{
    UMa,
    UMi,
    InH,
    O2I, // low-loss building penetration on top of UMi street canyon
};

enum class ThreeGppCondition
{
    LOS,
    NLOS,
};

struct ThreeGppScenario
{
    ThreeGppFamily family = ThreeGppFamily::UMa;
    ThreeGppCondition condition = ThreeGppCondition::NLOS;
    double fc_ghz = 28.0;
    double bs_height_m = 25.0;
    double ut_height_m = 1.5;
    double street_width_m = 20.0;   // 36.814 only
    double building_height_m = 20.0; // 36.814 only
    double indoor_distance_m = 0.0;  // O2I only, 2-D distance inside the building

    void validate() const
    {
        detail::require(fc_ghz > 0.0 && bs_height_m > 0.0 && ut_height_m > 0.0, "3GPP frequency and heights must be positive");
        detail::require(street_width_m > 0.0 && building_height_m > 0.0, "3GPP street width and building height must be positive");
        detail::require(indoor_distance_m >= 0.0, "indoor distance must be nonnegative");
    }
};

// 3GPP TR 36.814 Table B.1.2.1-1, UMa NLOS. d_3D in metres.
inline double uma_nlos_36814(const ThreeGppScenario &s, double d3d_m)
{
    s.validate();
    detail::require(d3d_m > 0.0, "distance must be positive");
    using std::log10;
    const double w = s.street_width_m, hb = s.building_height_m, hbs = s.bs_height_m, hm = s.ut_height_m;
    return 161.04 - 7.1 * log10(w) + 7.5 * log10(hb) - (24.37 - 3.7 * (hb / hbs) * (hb / hbs)) * log10(hbs) +
           (43.42 - 3.1 * log10(hbs)) * (log10(d3d_m) - 3.0) + 20.0 * log10(s.fc_ghz) -
           (3.2 * std::pow(log10(11.75 * hm), 2) - 4.97);
}

// Constants of 3GPP TR 38.901 V17.0.0 Table 7.4.1-1 (path loss models) and
// clause 7.4.3.1 (O2I building penetration). Data, not code.
namespace tr38901
{
inline constexpr const char *kVersion = "3GPP TR 38.901 V17.0.0 (2022-03)";
inline constexpr double kEffectiveEnvironmentHeight = 1.0; // h_E, m

struct LosCoefficients
{
    double a, b_log_d, c_log_f;       // PL1 = a + b log10(d3D) + c log10(fc)
    double a2, b2_log_d, c2_log_f;    // PL2 = a2 + b2 log10(d3D) + c2 log10(fc) - k_bp log10(d'BP^2 + (hBS - hUT)^2)
    double k_bp;
};

struct NlosCoefficients
{
    double a, b_log_d, c_log_f, h_slope; // PL' = a + b log10(d3D) + c log10(fc) - h_slope (hUT - 1.5)
};

struct Applicability
{
    double min_m, max_m; // d2D for UMa / UMi, d3D for InH
};

inline constexpr LosCoefficients kUMaLos{28.0, 22.0, 20.0, 28.0, 40.0, 20.0, 9.0};
inline constexpr NlosCoefficients kUMaNlos{13.54, 39.08, 20.0, 0.6};
inline constexpr Applicability kUMaRange{10.0, 5000.0};

inline constexpr LosCoefficients kUMiLos{32.4, 21.0, 20.0, 32.4, 40.0, 20.0, 9.5};
inline constexpr NlosCoefficients kUMiNlos{22.4, 35.3, 21.3, 0.3};
inline constexpr Applicability kUMiRange{10.0, 5000.0};

// InH-Office has no breakpoint; the second LOS segment is unused.
inline constexpr LosCoefficients kInHLos{32.4, 17.3, 20.0, 32.4, 17.3, 20.0, 0.0};
inline constexpr NlosCoefficients kInHNlos{17.30, 38.3, 24.9, 0.0};
inline constexpr Applicability kInHRange{1.0, 150.0};

inline constexpr double kFreqMinGHz = 0.5, kFreqMaxGHz = 100.0;

// Clause 7.4.3.1, low-loss model: PL_tw = 5 - 10 log10(0.3 10^(-L_glass/10) + 0.7 10^(-L_concrete/10)),
// L_glass = 2 + 0.2 fc, L_concrete = 5 + 4 fc, PL_in = 0.5 d2D-in.
inline constexpr double kO2IBase = 5.0, kO2IGlassShare = 0.3, kO2IConcreteShare = 0.7;
inline constexpr double kGlassA = 2.0, kGlassB = 0.2, kConcreteA = 5.0, kConcreteB = 4.0;
inline constexpr double kIndoorLossPerMetre = 0.5;
} // namespace tr38901

namespace detail
{
inline double breakpoint_m(const ThreeGppScenario &s)
{
    const double hb = s.bs_height_m - tr38901::kEffectiveEnvironmentHeight;
    const double hu = s.ut_height_m - tr38901::kEffectiveEnvironmentHeight;
    return 4.0 * hb * hu * s.fc_ghz * 1e9 / kSpeedOfLight;
}

inline double los_38901(const tr38901::LosCoefficients &c, const ThreeGppScenario &s, double d2d, bool has_breakpoint)
{
    const double dz = s.bs_height_m - s.ut_height_m;
    const double d3d = std::hypot(d2d, dz);
    const double lf = std::log10(s.fc_ghz);
    if (!has_breakpoint)
        return c.a + c.b_log_d * std::log10(d3d) + c.c_log_f * lf;
    const double bp = breakpoint_m(s);
    if (d2d <= bp)
        return c.a + c.b_log_d * std::log10(d3d) + c.c_log_f * lf;
    return c.a2 + c.b2_log_d * std::log10(d3d) + c.c2_log_f * lf - c.k_bp * std::log10(bp * bp + dz * dz);
}

inline double nlos_38901(const tr38901::NlosCoefficients &c, const ThreeGppScenario &s, double d2d)
{
    const double d3d = std::hypot(d2d, s.bs_height_m - s.ut_height_m);
    return c.a + c.b_log_d * std::log10(d3d) + c.c_log_f * std::log10(s.fc_ghz) - c.h_slope * (s.ut_height_m - 1.5);
}

inline double family_loss(ThreeGppFamily fam, ThreeGppCondition cond, const ThreeGppScenario &s, double d2d)
{
    using namespace tr38901;
    const tr38901::LosCoefficients *los = &kUMaLos;
    const tr38901::NlosCoefficients *nlos = &kUMaNlos;
    bool bp = true;
    if (fam == ThreeGppFamily::UMi)
    {
        los = &kUMiLos;
        nlos = &kUMiNlos;
    }
    else if (fam == ThreeGppFamily::InH)
    {
        los = &kInHLos;
        nlos = &kInHNlos;
        bp = false;
    }
    const double pl_los = los_38901(*los, s, d2d, bp);
    if (cond == ThreeGppCondition::LOS)
        return pl_los;
    return std::max(pl_los, nlos_38901(*nlos, s, d2d));
}
} // namespace detail

// Path loss in dB at 2-D (ground) distance d2D. NLOS returns max(LOS, NLOS').
// No shadow-fading term is added.
inline Flagged<double> tr38901_eval(const ThreeGppScenario &s, double d2d_m)
{
    s.validate();
    detail::require(d2d_m > 0.0, "distance must be positive");
    using namespace tr38901;
    Flagged<double> out;
    out.flags.set_if(s.fc_ghz < kFreqMinGHz || s.fc_ghz > kFreqMaxGHz, Regime::outside_applicability);

    switch (s.family)
    {
    case ThreeGppFamily::UMa:
    case ThreeGppFamily::UMi: {
        const auto &range = s.family == ThreeGppFamily::UMa ? kUMaRange : kUMiRange;
        out.flags.set_if(d2d_m < range.min_m || d2d_m > range.max_m, Regime::outside_applicability);
        out.value = detail::family_loss(s.family, s.condition, s, d2d_m);
        return out;
    }
    case ThreeGppFamily::InH: {
        const double d3d = std::hypot(d2d_m, s.bs_height_m - s.ut_height_m);
        out.flags.set_if(d3d < kInHRange.min_m || d3d > kInHRange.max_m, Regime::outside_applicability);
        out.value = detail::family_loss(s.family, s.condition, s, d2d_m);
        return out;
    }
    case ThreeGppFamily::O2I: {
        // Outdoor part to the facade plus indoor part, both along the same ground line.
        const double total = d2d_m + s.indoor_distance_m;
        out.flags.set_if(total < kUMiRange.min_m || total > kUMiRange.max_m, Regime::outside_applicability);
        const double pl_b = detail::family_loss(ThreeGppFamily::UMi, s.condition, s, total);
        const double l_glass = kGlassA + kGlassB * s.fc_ghz;
        const double l_conc = kConcreteA + kConcreteB * s.fc_ghz;
        const double pl_tw = kO2IBase - 10.0 * std::log10(kO2IGlassShare * std::pow(10.0, -l_glass / 10.0) +
                                                          kO2IConcreteShare * std::pow(10.0, -l_conc / 10.0));
        out.value = pl_b + pl_tw + kIndoorLossPerMetre * s.indoor_distance_m;
        return out;
    }
    }
    throw std::invalid_argument("unsupported 3GPP scenario");
}

// "uma_los", "umi_nlos", "inh_los", "o2i_nlos", ... (case-sensitive).
inline std::optional<std::pair<ThreeGppFamily, ThreeGppCondition>> parse_scenario(std::string_view name)
{
    const auto sep = name.find('_');
    if (sep == std::string_view::npos)
        return std::nullopt;
    const auto fam = name.substr(0, sep);
    const auto cond = name.substr(sep + 1);
    std::pair<ThreeGppFamily, ThreeGppCondition> out;
    if (fam == "uma")
        out.first = ThreeGppFamily::UMa;
    else if (fam == "umi")
        out.first = ThreeGppFamily::UMi;
    else if (fam == "inh")
        out.first = ThreeGppFamily::InH;
    else if (fam == "o2i")
        out.first = ThreeGppFamily::O2I;
    else
        return std::nullopt;
    if (cond == "los")
        out.second = ThreeGppCondition::LOS;
    else if (cond == "nlos")
        out.second = ThreeGppCondition::NLOS;
    else
        return std::nullopt;
    return out;
}

} // namespace pathgain

#endif
