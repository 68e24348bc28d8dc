#!/usr/bin/env python3
"""Independent oracle for the two-particle cross-coupling golden values.

Each packet is propagated by numerical quadrature over momentum space
(no closed-form spreading Gaussian), velocities come from finite
differences of the wavefunction, and dv1/dx2 from a further central
difference. Run once; the printed values are frozen into
tests/dbb_test.cpp and tests/acceptance.cpp.
"""
import mpmath as mp

mp.mp.dps = 40
HBAR = mp.mpf(1)
MASS = mp.mpf(1)


def packet(center, width, k, t0):
    center, width, k, t0 = map(mp.mpf, (center, width, k, t0))

    def psi(x, t):
        tau = t - t0

        def integrand(p):
            # Fourier amplitude of exp(-(x-c)^2/(4w^2) + i k (x-c)), up to a constant
            amp = mp.exp(-width**2 * (p - k) ** 2 - 1j * p * center)
            return amp * mp.exp(1j * p * x - 1j * HBAR * p**2 * tau / (2 * MASS))

        lo, hi = k - 14 / width, k + 14 / width
        return mp.quad(integrand, mp.linspace(lo, hi, 9))

    return psi


def two_particle(pa, pb, sign):
    if sign == 0:
        return lambda x1, x2, t: pa(x1, t) * pb(x2, t)
    return lambda x1, x2, t: pa(x1, t) * pb(x2, t) + sign * pa(x2, t) * pb(x1, t)


def v1(big_psi, x1, x2, t, h=mp.mpf("1e-12")):
    d = (big_psi(x1 + h, x2, t) - big_psi(x1 - h, x2, t)) / (2 * h)
    return HBAR / MASS * mp.im(d / big_psi(x1, x2, t))


def coupling(big_psi, x1, x2, t, h=mp.mpf("1e-6")):
    # fourth-order central difference in x2
    f = lambda dx: v1(big_psi, x1, x2 + dx, t)
    return abs((-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h))


if __name__ == "__main__":
    pa = packet(-1.5, 1.0, 1.0, 0.0)
    pb = packet(1.5, 0.8, -0.5, 0.0)
    x1, x2, t = mp.mpf("-0.3"), mp.mpf("0.4"), mp.mpf("0.4")
    for name, sign in (("product", 0), ("symmetric", 1), ("antisymmetric", -1)):
        print(name, mp.nstr(coupling(two_particle(pa, pb, sign), x1, x2, t), 17))
    # single-particle velocity check value
    print("v1p", mp.nstr(v1(lambda a, b, tt: pa(a, tt), x1, 0, t), 17))
