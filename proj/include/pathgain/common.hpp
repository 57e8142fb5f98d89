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

#ifndef PATHGAIN_COMMON_HPP
#define PATHGAIN_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pathgain
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// Power attenuation of one Neper expressed in dB (10/ln 10).
inline constexpr double kDbPerNeper = 10.0 / std::numbers::ln10;

inline double wavelength(double frequency_hz)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

inline double wavenumber(double frequency_hz)
{
    return 2.0 * kPi / wavelength(frequency_hz);
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }
inline double nepers_to_db(double nepers) { return nepers * kDbPerNeper; }

// Conditions under which an asymptotic law is being evaluated outside the
// regime it was derived for. Flags never change the returned value.
enum class Regime : std::uint32_t
{
    extrapolated_angle = 1u << 0,     // grazing angle above the low-grazing validity threshold
    short_range = 1u << 1,            // r < 2w: not r >> w
    weak_wall_loss = 1u << 2,         // L not >> w/r
    few_images = 1u << 3,             // image sum dominated by the direct path; free space used
    pre_asymptotic = 1u << 4,         // r not >> L w for guided series laws
    frequency_extrapolated = 1u << 5, // outside the anchor band of an interpolated constant
    near_wall = 1u << 6,              // antenna within one wavelength of a canyon wall
    outside_applicability = 1u << 7,  // outside the stated range of an empirical model
    clamped = 1u << 8,                // an estimated fraction was clamped into [0, 1]
    small_scale_roughness = 1u << 9,  // roughness spectrum not confined to chi << k
};

class RegimeFlags
{
public:
    constexpr RegimeFlags() = default;
    constexpr RegimeFlags(Regime r) : bits_(static_cast<std::uint32_t>(r)) {}

    constexpr bool test(Regime r) const { return (bits_ & static_cast<std::uint32_t>(r)) != 0; }
    constexpr bool any() const { return bits_ != 0; }
    constexpr std::uint32_t bits() const { return bits_; }

    constexpr void set(Regime r) { bits_ |= static_cast<std::uint32_t>(r); }
    constexpr void set_if(bool cond, Regime r)
    {
        if (cond)
            set(r);
    }

    constexpr RegimeFlags &operator|=(RegimeFlags o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    friend constexpr RegimeFlags operator|(RegimeFlags a, RegimeFlags b) { return a |= b; }
    friend constexpr bool operator==(RegimeFlags, RegimeFlags) = default;

    // '|'-separated flag names in bit order, empty when no flag is set.
    std::string to_string() const
    {
        static constexpr const char *names[] = {
            "extrapolated_angle", "short_range", "weak_wall_loss", "few_images",
            "pre_asymptotic", "frequency_extrapolated", "near_wall", "outside_applicability",
            "clamped", "small_scale_roughness"};
        std::string out;
        for (std::uint32_t i = 0; i < std::size(names); ++i)
        {
            if (bits_ & (1u << i))
            {
                if (!out.empty())
                    out += '|';
                out += names[i];
            }
        }
        return out;
    }

private:
    std::uint32_t bits_ = 0;
};

template <class T>
struct Flagged
{
    T value{};
    RegimeFlags flags{};
};

// Linear average path gain (received over transmitted power) with regime flags.
struct PathGain
{
    double linear = 0.0;
    RegimeFlags flags{};

    double db() const { return to_db(linear); }
};

namespace detail
{
inline void require(bool cond, const char *what)
{
    if (!cond)
        throw std::invalid_argument(what);
}
} // namespace detail

} // namespace pathgain

#endif
