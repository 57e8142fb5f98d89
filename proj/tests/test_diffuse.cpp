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

#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/oracles.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace pathgain;
using test::WithinAbs;
using test::WithinRel;

namespace
{
DiffuseLink example_link(double kappa = 0.38, double depth = 10.0)
{
    return {20.0, 100.0, depth, kappa, wavelength(28e9)};
}
} // namespace

TEST_CASE("unbounded hot-wall law at 28 GHz", "[diffuse]")
{
    const auto link = example_link();
    CHECK_THAT(diffuse_pathgain(link, PenetrationSpec::unbounded()), WithinRel(ref::kDiffuseUnbounded28Closed, 1e-13));
    // The closed form is exact for an unbounded boundary and a far source.
    CHECK_THAT(hotwall_quadrature(link, PenetrationSpec::unbounded(), QuadratureControl{}).value,
               WithinRel(ref::kDiffuseUnbounded28Quadrature, 1e-8));
    CHECK_THAT(hotwall_radial(link, 1.0, QuadratureControl{}).value, WithinRel(ref::kDiffuseUnbounded28Quadrature, 1e-10));
}

TEST_CASE("power law in range and standoff", "[diffuse]")
{
    auto a = example_link();
    auto b = a;
    b.range_m *= 10.0;
    CHECK_THAT(test::db_gap(diffuse_pathgain(b, {}), diffuse_pathgain(a, {})), WithinAbs(-40.0, 1e-10));
    b = a;
    b.standoff_m *= 2.0;
    CHECK_THAT(diffuse_pathgain(b, {}) / diffuse_pathgain(a, {}), WithinRel(4.0, 1e-13));
}

TEST_CASE("absorption enters only through the terminal depth", "[diffuse]")
{
    const auto a = example_link(0.2, 3.0);
    auto b = a;
    b.depth_m = 5.0;
    CHECK_THAT(diffuse_pathgain(b, {}) / diffuse_pathgain(a, {}), WithinRel(std::exp(-0.2 * 2.0), 1e-13));
    const auto lossless = example_link(0.0, 3.0);
    auto deeper = lossless;
    deeper.depth_m = 30.0;
    CHECK(diffuse_pathgain(lossless, {}) == diffuse_pathgain(deeper, {}));
}

TEST_CASE("material transmission scales the unbounded law", "[diffuse]")
{
    const auto link = example_link();
    CHECK_THAT(diffuse_pathgain(link, PenetrationSpec::unbounded(0.25)) / diffuse_pathgain(link, {}), WithinRel(0.25, 1e-15));
}

TEST_CASE("aperture transmission", "[diffuse]")
{
    CHECK_THAT(t_eff(PenetrationSpec::aperture(2.0, 2.0), 1.0), WithinRel(ref::kApertureSquareTeff, 1e-14));
    CHECK_THAT(t_eff(PenetrationSpec::aperture(3.0, 5.0), 0.7), WithinRel(t_eff(PenetrationSpec::aperture(5.0, 3.0), 0.7), 1e-15));
    CHECK_THAT(t_eff(PenetrationSpec::street(4.0, 0.5), 2.0), WithinRel(0.5 * 0.5, 1e-14)); // atan(1) = pi / 4
    CHECK_THAT(t_eff(PenetrationSpec::street(1e9), 1.0), WithinRel(1.0, 1e-8));
    CHECK_THAT(t_eff(PenetrationSpec::aperture(1e9, 1e9), 1.0), WithinRel(1.0, 1e-8));
    // One side very long: the street form.
    CHECK_THAT(t_eff(PenetrationSpec::aperture(3.0, 1e9), 2.0), WithinRel(t_eff(PenetrationSpec::street(3.0), 2.0), 1e-8));
}

TEST_CASE("aperture transmission falls with depth", "[diffuse]")
{
    double prev = 1.0;
    for (double d : {0.01, 0.1, 1.0, 10.0, 100.0})
    {
        const double t = t_eff(PenetrationSpec::aperture(2.0, 1.0), d);
        CHECK(t < prev);
        CHECK(t > 0.0);
        prev = t;
    }
}

TEST_CASE("square aperture quadrature matches the oracle value", "[diffuse]")
{
    const DiffuseLink link{20.0, 100.0, 1.0, 0.0, wavelength(28e9)};
    const auto q = hotwall_quadrature(link, PenetrationSpec::aperture(2.0, 2.0), QuadratureControl{});
    CHECK_THAT(q.value, WithinRel(ref::kApertureSquareQuadrature, 1e-8));
    // With kappa = 0 the aperture form is exact.
    CHECK_THAT(diffuse_pathgain(link, PenetrationSpec::aperture(2.0, 2.0)), WithinRel(q.value, 1e-8));
}

TEST_CASE("facade mixture", "[diffuse]")
{
    const auto f = PenetrationSpec::facade(0.3, 0.8, 0.1);
    CHECK_THAT(t_eff(f, 1.0), WithinRel(0.3 * 0.8 + 0.7 * 0.1, 1e-15));
    CHECK_FALSE(f.bounded());
    CHECK(t_eff(PenetrationSpec::facade(0.0, 1.0, 0.0), 1.0) == 0.0);
}

TEST_CASE("enhancement factors", "[diffuse]")
{
    CHECK(enhancement_factors(0.0, 0.0) == 1.0);
    CHECK(enhancement_factors(1.0, 1.0) == 4.0);
    CHECK_THAT(enhancement_factors(0.25, 0.5), WithinRel(1.875, 1e-15));
    CHECK_THROWS_AS(enhancement_factors(1.1, 0.0), std::out_of_range);
    CHECK_THROWS_AS(enhancement_factors(0.0, -0.1), std::out_of_range);
}

TEST_CASE("diffuse inputs are validated", "[diffuse]")
{
    auto l = example_link();
    l.range_m = 10.0; // inside the standoff
    CHECK_THROWS_AS(diffuse_pathgain(l, {}), std::invalid_argument);
    l = example_link();
    l.kappa_np_per_m = -0.1;
    CHECK_THROWS_AS(diffuse_pathgain(l, {}), std::invalid_argument);
    CHECK_THROWS_AS(t_eff(PenetrationSpec::unbounded(1.5), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(t_eff(PenetrationSpec::street(0.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(t_eff(PenetrationSpec::street(2.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(t_eff(PenetrationSpec::facade(1.2, 1.0, 0.0), 1.0), std::invalid_argument);
    CHECK_NOTHROW(t_eff(PenetrationSpec::unbounded(), 0.0));
}
