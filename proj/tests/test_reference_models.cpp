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

#include "pathgain/reference_models.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace pathgain;
using test::WithinAbs;
using test::WithinRel;

namespace
{
ThreeGppScenario scenario(ThreeGppFamily fam, ThreeGppCondition cond, double fc = 28.0, double hbs = 25.0, double hut = 1.5)
{
    ThreeGppScenario s;
    s.family = fam;
    s.condition = cond;
    s.fc_ghz = fc;
    s.bs_height_m = hbs;
    s.ut_height_m = hut;
    return s;
}

// Rooftop base over 10 m clutter in a 20 m street.
ThreeGppScenario macro_36814()
{
    auto s = scenario(ThreeGppFamily::UMa, ThreeGppCondition::NLOS, 28.0, 14.0, 1.5);
    s.street_width_m = 20.0;
    s.building_height_m = 10.0;
    return s;
}
} // namespace

TEST_CASE("Friis", "[reference_models]")
{
    CHECK_THAT(to_db(friis_gain(wavelength(28e9), 100.0)), WithinAbs(ref::kFriis28GHz100mDb, 1e-12));
    // The rounded 32.45 dB textbook constant agrees to a few thousandths of a dB.
    CHECK_THAT(to_db(friis_gain(wavelength(28e9), 100.0)), WithinAbs(ref::kFsplFormula28GHz100mDb, 0.005));
    CHECK_THROWS_AS(friis_gain(0.01, 0.0), std::invalid_argument);
}

TEST_CASE("slope-intercept model", "[reference_models]")
{
    const SlopeIntercept m{-60.0, 3.0};
    CHECK(m.eval_db(1.0) == -60.0);
    CHECK_THAT(m.eval_db(100.0), WithinAbs(-120.0, 1e-12));
    CHECK_THAT(slope_intercept_eval(m, 10.0), WithinAbs(-90.0, 1e-12));
    CHECK_THROWS_AS(m.eval_db(0.0), std::invalid_argument);
}

TEST_CASE("36.814 UMa NLOS regression values", "[reference_models]")
{
    const auto s = macro_36814();
    CHECK_THAT(uma_nlos_36814(s, 1000.0), WithinAbs(ref::kUma36814At1km, 1e-10));
    CHECK_THAT(uma_nlos_36814(s, 100.0), WithinAbs(ref::kUma36814At100m, 1e-10));
    // Distance slope (43.42 - 3.1 log10 hBS) dB per decade.
    CHECK_THAT(uma_nlos_36814(s, 1000.0) - uma_nlos_36814(s, 100.0), WithinAbs(43.42 - 3.1 * std::log10(14.0), 1e-10));
}

TEST_CASE("36.814 mobile-height correction vanishes near 1.5 m", "[reference_models]")
{
    auto s = macro_36814();
    s.ut_height_m = ref::kZeroMobileTermHeight;
    const double at_zero = uma_nlos_36814(s, 500.0);
    s.ut_height_m = 3.0;
    CHECK(uma_nlos_36814(s, 500.0) < at_zero);
}

TEST_CASE("38.901 UMa LOS below the breakpoint", "[reference_models]")
{
    const auto s = scenario(ThreeGppFamily::UMa, ThreeGppCondition::LOS);
    const double d2d = std::sqrt(100.0 * 100.0 - 23.5 * 23.5);
    const auto pl = tr38901_eval(s, d2d);
    CHECK_THAT(pl.value, WithinAbs(ref::kUmaLosPl1At100m, 1e-10));
    CHECK_FALSE(pl.flags.any());
}

TEST_CASE("38.901 UMa LOS is continuous at the breakpoint", "[reference_models]")
{
    const auto s = scenario(ThreeGppFamily::UMa, ThreeGppCondition::LOS, 3.5);
    const double bp = 4.0 * 24.0 * 0.5 * 3.5e9 / kSpeedOfLight;
    CHECK_THAT(tr38901_eval(s, bp * (1 + 1e-12)).value, WithinAbs(tr38901_eval(s, bp * (1 - 1e-12)).value, 1e-6));
}

TEST_CASE("38.901 NLOS never beats LOS", "[reference_models]")
{
    for (auto fam : {ThreeGppFamily::UMa, ThreeGppFamily::UMi, ThreeGppFamily::InH, ThreeGppFamily::O2I})
    {
        auto los = scenario(fam, ThreeGppCondition::LOS, 28.0, fam == ThreeGppFamily::InH ? 3.0 : 10.0);
        auto nlos = los;
        nlos.condition = ThreeGppCondition::NLOS;
        for (double d = 10.0; d <= 5000.0; d *= 1.1)
            CHECK(tr38901_eval(nlos, d).value >= tr38901_eval(los, d).value);
    }
}

TEST_CASE("38.901 O2I low-loss penetration", "[reference_models]")
{
    auto o2i = scenario(ThreeGppFamily::O2I, ThreeGppCondition::NLOS, 28.0, 10.0);
    o2i.indoor_distance_m = 4.0;
    auto umi = o2i;
    umi.family = ThreeGppFamily::UMi;
    const double extra = tr38901_eval(o2i, 96.0).value - tr38901_eval(umi, 100.0).value;
    CHECK_THAT(extra, WithinAbs(ref::kO2iLowLossPenetration28 + 0.5 * 4.0, 1e-10));
}

TEST_CASE("38.901 applicability flags", "[reference_models]")
{
    const auto s = scenario(ThreeGppFamily::UMa, ThreeGppCondition::NLOS);
    CHECK(tr38901_eval(s, 5.0).flags.test(Regime::outside_applicability));
    CHECK(tr38901_eval(s, 6000.0).flags.test(Regime::outside_applicability));
    CHECK_FALSE(tr38901_eval(s, 500.0).flags.any());
    CHECK(tr38901_eval(scenario(ThreeGppFamily::UMa, ThreeGppCondition::NLOS, 150.0), 500.0).flags.test(Regime::outside_applicability));
    CHECK(tr38901_eval(scenario(ThreeGppFamily::InH, ThreeGppCondition::LOS, 28.0, 3.0), 200.0).flags.test(Regime::outside_applicability));
}

TEST_CASE("36.814 and 38.901 UMa NLOS stay close on a rooftop macro", "[reference_models]")
{
    const auto a = macro_36814();
    const auto b = scenario(ThreeGppFamily::UMa, ThreeGppCondition::NLOS, 28.0, 14.0, 1.5);
    for (double d3d = 200.0; d3d <= 1000.0; d3d += 50.0)
    {
        const double d2d = std::sqrt(d3d * d3d - 12.5 * 12.5);
        CHECK(std::abs(uma_nlos_36814(a, d3d) - tr38901_eval(b, d2d).value) <= 10.0);
    }
}

TEST_CASE("scenario names", "[reference_models]")
{
    const auto p = parse_scenario("umi_nlos");
    REQUIRE(p);
    CHECK(p->first == ThreeGppFamily::UMi);
    CHECK(p->second == ThreeGppCondition::NLOS);
    CHECK(parse_scenario("o2i_los")->first == ThreeGppFamily::O2I);
    CHECK_FALSE(parse_scenario("uma"));
    CHECK_FALSE(parse_scenario("UMa_los"));
    CHECK_FALSE(parse_scenario("rma_los"));
    CHECK_FALSE(parse_scenario("uma_xlos"));
}

TEST_CASE("3GPP inputs are validated", "[reference_models]")
{
    auto s = macro_36814();
    CHECK_THROWS_AS(uma_nlos_36814(s, 0.0), std::invalid_argument);
    s.street_width_m = 0.0;
    CHECK_THROWS_AS(uma_nlos_36814(s, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(tr38901_eval(macro_36814(), -5.0), std::invalid_argument);
}
