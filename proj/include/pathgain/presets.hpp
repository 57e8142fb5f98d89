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

#ifndef PATHGAIN_PRESETS_HPP
#define PATHGAIN_PRESETS_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/surface_em.hpp"

// Reference parameter sets for walls and scenes that recur in tests,
// verification suites and shipped configs.

namespace pathgain::presets
{

// Office corridor: plasterboard, door wells 3.5 cm deep, 1 m wide every 3 m.
inline WallSurface corridor_wall()
{
    return {Dielectric{1.7}, TelegraphRoughness::from_mean_lengths(0.035, 0.25, 0.75, 1.0, 3.0)};
}

// Building facade with 10 cm window wells.
inline WallSurface urban_wall()
{
    return {Dielectric{2.2}, TelegraphRoughness::from_mean_lengths(0.1, 0.85, 0.15, 0.33, 2.0)};
}

// Facade used for the Manhattan sidewalk streets: same layout, 1 cm wells.
inline WallSurface street_wall()
{
    return {Dielectric{2.2}, TelegraphRoughness::from_mean_lengths(0.01, 0.85, 0.15, 0.33, 2.0)};
}

// 1.6 m corridor, transmitter 2.2 m, receiver 1 m.
inline CanyonGeometry corridor()
{
    CanyonGeometry g;
    g.width_m = 1.6;
    g.tx_height_m = 2.2;
    g.rx_height_m = 1.0;
    g.wall = corridor_wall();
    return g;
}

// 8.6 m street, base 5 m, terminal 1.5 m.
inline CanyonGeometry urban_canyon()
{
    CanyonGeometry g;
    g.width_m = 8.6;
    g.tx_height_m = 5.0;
    g.rx_height_m = 1.5;
    g.wall = urban_wall();
    return g;
}

// A Manhattan avenue with few trees: 32 m wide, rooftop base at 56 m on the
// terminal's side (5 m from the sidewalk clutter), 3 m of vegetation depth.
inline StreetScene sparse_tree_avenue()
{
    StreetScene s;
    s.canyon.width_m = 32.0;
    s.canyon.tx_height_m = 56.0;
    s.canyon.rx_height_m = 1.5;
    s.canyon.wall = street_wall();
    s.foliage = {3.0, kFoliageKappa28GHz, TreeDensity{0.05, 4.0, 10.0}};
    s.standoff_m = 5.0;
    return s;
}

inline MacroGeometry sparse_tree_avenue_macro() { return {56.0, 10.0, 1.5, 32.0, {}}; }

// A residential street lined with trees: 35 m wide, base 15 m, a quarter of
// the street length under crowns.
inline StreetScene dense_tree_street()
{
    StreetScene s;
    s.canyon.width_m = 35.0;
    s.canyon.tx_height_m = 15.0;
    s.canyon.rx_height_m = 1.5;
    s.canyon.wall = street_wall();
    s.foliage = {2.0, kFoliageKappa28GHz, TreeDensity{0.25, 4.0, 10.0}};
    s.standoff_m = 5.0;
    return s;
}

inline MacroGeometry dense_tree_street_macro() { return {15.0, 10.0, 1.5, 35.0, {}}; }

} // namespace pathgain::presets

#endif
