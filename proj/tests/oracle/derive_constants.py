# SPDX-License-Identifier: Apache-2.0
#
# pathgain: closed-form average path gain laws for common radio environments
# Copyright (C) 2026 The pathgain authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
"""Independent reference values for the C++ unit tests.

Written from the model definitions with mpmath at 30 digits, sharing no code
with the library. Run it to regenerate the constants frozen in
tests/reference_values.hpp:

    python3 tests/oracle/derive_constants.py
"""
from mpmath import mp, mpf, sqrt, exp, log10, pi, asin, atan, atan2, quad, inf, findroot, cos, sin, hypot

mp.dps = 30
C = mpf(299792458)


def wavelength(f):
    return C / f


def wavenumber(f):
    return 2 * pi / wavelength(f)


def wall_loss(n, A, p1, p2, mean1, mean2, k):
    mu = 1 / mpf(mean1) + 1 / mpf(mean2)
    return 4 / mpf(n) + 32 * k ** mpf(1.5) * mpf(A) ** 2 * mpf(p1) * mpf(p2) * sqrt(mu)


def fresnel_perp(t, n):
    s, c = sin(t), cos(t)
    root = sqrt(n * n - c * c)
    return (s - root) / (s + root)


def fresnel_par(t, n):
    s, c = sin(t), cos(t)
    root = sqrt(n * n - c * c)
    return (n * n * s - root) / (n * n * s + root)


def ground_gamma_par(t, n=sqrt(5)):
    return -exp(-(2 * n * n / sqrt(n * n - 2)) * t)


def telegraph_spectrum(chi, A, p1, p2, mu):
    var = 4 * A * A * p1 * p2
    return var / (2 * pi) * 2 * mu / (mu * mu + chi * chi)


def out(name, value):
    print("inline constexpr double %s = %s;" % (name, repr(float(value))))


f2, f28, f35 = mpf(2e9), mpf(28e9), mpf(3.5e9)

# Fresnel at 0.05 rad, n = sqrt 5.
n5 = sqrt(5)
out("kFresnelExactPerp", fresnel_perp(mpf("0.05"), n5))
out("kFresnelExactPar", fresnel_par(mpf("0.05"), n5))
out("kFresnelApproxPerp", -exp(-2 * mpf("0.05") / n5))
out("kFresnelApproxPar", -exp(-(2 * 5 / sqrt(3)) * mpf("0.05")))

# Corridor roughness spectrum at chi = 0 and its integral.
A, p1, p2, mu = mpf("0.035"), mpf("0.25"), mpf("0.75"), mpf(1) + mpf(1) / 3
out("kCorridorSpectrumAtZero", telegraph_spectrum(0, A, p1, p2, mu))
out("kCorridorVariance", 4 * A * A * p1 * p2)

# Wall loss.
out("kCorridorL2GHz", wall_loss("1.7", "0.035", "0.25", "0.75", 1, 3, wavenumber(f2)))
out("kCorridorL28GHz", wall_loss("1.7", "0.035", "0.25", "0.75", 1, 3, wavenumber(f28)))
out("kUrbanL3p5GHz", wall_loss("2.2", "0.1", "0.85", "0.15", "0.33", 2, wavenumber(f35)))
Lc2 = wall_loss("1.7", "0.035", "0.25", "0.75", 1, 3, wavenumber(f2))
out("kCorridorReflection0p02", exp(-Lc2 * mpf("0.02") / 2))

# Roughness integral (simplified bracket), corridor wall, 28 GHz, theta 0.01.
k28 = wavenumber(f28)
theta = mpf("0.01")
I = 2 * quad(lambda c: telegraph_spectrum(c, A, p1, p2, mu) * sqrt(2 * c / k28), [0, mu, 10 * mu, inf])
out("kCorridorRoughnessIntegral28", 2 * k28 ** 2 * theta * I)
out("kCorridorRoughnessClosed28", 16 * k28 ** mpf(1.5) * A * A * p1 * p2 * sqrt(mu) * theta)

# Diffuse half-space, unbounded, 28 GHz: d_s 20, r 100, d_in 10, kappa 0.38.
lam28 = wavelength(f28)
ds, r, d, kap = mpf(20), mpf(100), mpf(10), mpf("0.38")
pre = lam28 ** 2 * ds ** 2 / (16 * pi ** 3 * r ** 4)
kernel = lambda rp: exp(-kap * rp) * (kap * rp + 1) * d / rp ** 3
radial = 2 * pi * quad(lambda rho: kernel(sqrt(rho * rho + d * d)) * rho, [0, d, 10 * d, inf])
out("kDiffuseUnbounded28Quadrature", pre * radial)
out("kDiffuseUnbounded28Closed", lam28 ** 2 * ds ** 2 * exp(-kap * d) / (8 * pi ** 2 * r ** 4))

# Square aperture 2 d_in x 2 d_in, kappa 0, d_in = 1.
d1 = mpf(1)
k0 = lambda u, v: d1 / sqrt(u * u + v * v + d1 * d1) ** 3
sq = quad(k0, [-1, 0, 1], [-1, 0, 1])
pre1 = lam28 ** 2 * ds ** 2 / (16 * pi ** 3 * r ** 4)
out("kApertureSquareQuadrature", pre1 * sq)
out("kApertureSquareTeff", (2 / pi) * atan(4 / (2 * sqrt(4 + 4 + 4))))

# Ground reflection, 2 GHz corridor, x = 20, heights 2.2 / 1.0.
rg = sqrt(20 ** 2 + mpf("3.2") ** 2)
tg = asin(mpf("3.2") / rg)
out("kCorridorGroundRange", rg)
out("kCorridorGroundAngle", tg)
out("kCorridorGroundGamma", ground_gamma_par(tg))

# Brute-force image sum, corridor 2 GHz, centred antennas, x with r = 30 m.
w = mpf("1.6")
dz, hz = mpf("1.2"), mpf("3.2")
x30 = sqrt(30 ** 2 - dz ** 2)
lam2 = wavelength(f2)


def image_sum(x, w, L, lam, ground=False, n_max=2000):
    hd = hypot(x, dz)
    hg = hypot(x, hz)

    def pair(m):
        dy = m * w
        dd = hypot(hd, dy)
        t = exp(-L * m * atan2(dy, hd)) / dd ** 2
        if ground:
            dg = hypot(hg, dy)
            gam = ground_gamma_par(asin(hz / dg))
            t += exp(-L * m * atan2(dy, hg)) * gam ** 2 / dg ** 2
        return t

    # Explicit orders up to n_max, then the smooth tail by the midpoint rule
    # (error of order f''/24 per unit, negligible this far out). Each |m| > 0
    # appears twice.
    total = pair(mpf(0)) + 2 * sum(pair(mpf(m)) for m in range(1, n_max + 1))
    total += 2 * quad(pair, [n_max + mpf(0.5), 10 * n_max, inf])
    return lam ** 2 / (16 * pi ** 2) * total


mp.dps = 20
out("kCorridorImageSum30m", image_sum(x30, w, Lc2, lam2))
out("kCorridorClosed30m", lam2 ** 2 / (16 * pi ** mpf(1.5) * sqrt(w * Lc2) * mpf(30) ** mpf(1.5)))
Lc28 = wall_loss("1.7", "0.035", "0.25", "0.75", 1, 3, wavenumber(f28))
x50 = sqrt(50 ** 2 - dz ** 2)
out("kCorridor28ImageSumGround50m", image_sum(x50, w, Lc28, lam28, ground=True))
mp.dps = 30

# Outdoor-indoor series, street 8.6 m, 3.5 GHz, urban wall, T2 0.37, centred
# base (d = w/2), heights 2.0 / 1.5, r = 50 m.
wu = mpf("8.6")
Lu = wall_loss("2.2", "0.1", "0.85", "0.15", "0.33", 2, wavenumber(f35))
lam35 = wavelength(f35)
du = wu / 2
dzu = mpf("0.5")
r50 = mpf(50)
xu = sqrt(r50 ** 2 - du ** 2 - dzu ** 2)
g2 = ground_gamma_par(atan2(mpf("3.5"), hypot(xu, du))) ** 2
s = mpf(0)
for m in range(0, 200000):
    dm = m * wu + du if m % 2 == 0 else m * wu + wu - du
    t = dm * dm * exp(-Lu * m * dm / r50)
    s += t
    if m > 0 and m * t < mpf("1e-25") * s:
        break
pre = lam35 ** 2 * mpf("0.37") * (1 + g2) * 2 / (8 * pi ** 2 * r50 ** 4)
out("kStreetOiSeries50m", pre * s)
out("kStreetOiClosed50m", lam35 ** 2 * mpf("0.37") * (1 + g2) * 2 * sqrt(wu) / (32 * pi ** mpf(1.5) * Lu ** mpf(1.5) * r50 ** mpf(2.5)))

# Tree density on the sparse-tree avenue.
out("kSparseAvenueRho", mpf("0.05") * mpf("8.5") * 8 / (mpf("54.5") * 32))

# Rural crossover: z_BS 14, z_c 10, z_m 1.5, 28 GHz, kappa 0.38, wide over-top.
zbs, zc, zm = mpf(14), mpf(10), mpf("1.5")


def rural_direct(x, kap):
    rr = hypot(x, zbs - zm)
    rv = rr * (zc - zm) / (zbs - zm)
    return (lam28 / (4 * pi * rr)) ** 2 * exp(-kap * rv)


def overtop_wide(x, kap):
    rr = hypot(x, zbs - zc)
    g = ground_gamma_par(atan2(zbs + zm, x))
    return lam28 ** 2 * (zbs - zc) ** 2 * exp(-kap * (zc - zm)) * (1 + g * g) / (8 * pi ** 2 * rr ** 4)


def crossings(kappa):
    gap = lambda x: mp.log(rural_direct(x, kappa)) - mp.log(overtop_wide(x, kappa))
    xs = [mpf(1) * mpf(1.02) ** i for i in range(600)]
    roots = [findroot(gap, (a, b), solver="anderson") for a, b in zip(xs, xs[1:]) if gap(a) * gap(b) <= 0]
    return gap, roots


# With the 28 GHz absorption the over-top term wins at every range: freeze the
# largest gap to show no crossing exists. Weaker absorption does cross.
gap, roots = crossings(kap)
assert not roots
xpk = findroot(lambda x: mp.diff(gap, x), 10)
out("kRuralNoCrossPeakRange", xpk)
out("kRuralNoCrossPeakGap", gap(xpk))
out("kRuralCrossoverKappa0", crossings(0)[1][0])
near, far = crossings(mpf("0.2"))[1]
out("kRuralCrossoverKappa0p2", near)
out("kRuralCrossoverKappa0p2Far", far)

# 3GPP 36.814 UMa NLOS, w 20, z_b 10, z_BS 14, z_m 1.5, 28 GHz, 1 km.
def uma36814(w, zb, zbs, zm, fc, d):
    return (161.04 - 7.1 * log10(w) + 7.5 * log10(zb) - (24.37 - 3.7 * (zb / zbs) ** 2) * log10(zbs)
            + (43.42 - 3.1 * log10(zbs)) * (log10(d) - 3) + 20 * log10(fc) - (3.2 * log10(11.75 * zm) ** 2 - 4.97))


out("kUma36814At1km", uma36814(20, 10, 14, mpf("1.5"), 28, 1000))
out("kUma36814At100m", uma36814(20, 10, 14, mpf("1.5"), 28, 100))
out("kZeroMobileTermHeight", findroot(lambda z: 3.2 * log10(11.75 * z) ** 2 - 4.97, 1.5))

# 38.901 UMa LOS PL1 at d3D = 100 m, 28 GHz; Friis at 100 m.
out("kUmaLosPl1At100m", 28 + 22 * log10(100) + 20 * log10(28))
out("kFriis28GHz100mDb", 10 * log10((lam28 / (4 * pi * 100)) ** 2))
out("kFsplFormula28GHz100mDb", -(mpf("32.45") + 20 * log10(28000) + 20 * log10(mpf("0.1"))))

# 38.901 O2I low-loss penetration at 28 GHz (glass 30 %, concrete 70 %).
fc = mpf(28)
out("kO2iLowLossPenetration28", 5 - 10 * log10(mpf("0.3") * 10 ** (-(2 + mpf("0.2") * fc) / 10) + mpf("0.7") * 10 ** (-(5 + 4 * fc) / 10)))
