#!/usr/bin/env python3
"""Independent high-precision reference values frozen into the unit tests.

Every quantity is evaluated from its defining formula with mpmath at 50
digits, without reusing any algebraic rearrangement from the C++ sources.
Run: python3 tools/oracles.py
"""

from mpmath import mp, mpf, log, sqrt

mp.dps = 50


def show(label, value):
    print(f"{label:40s} {mp.nstr(value, 17)}")


def lorentz(u):
    return 1 / sqrt(1 - u * u)


def prim_to_cons_1d(rho, u, p, gamma):
    W = lorentz(u)
    h = 1 + gamma * p / ((gamma - 1) * rho)
    return rho * W, rho * h * W * W * u, rho * h * W * W - p


def weno5_left(v, eps=mpf("1e-6")):
    v0, v1, v2, v3, v4 = [mpf(x) for x in v]
    b0 = mpf(13) / 12 * (v0 - 2 * v1 + v2) ** 2 + mpf(1) / 4 * (v0 - 4 * v1 + 3 * v2) ** 2
    b1 = mpf(13) / 12 * (v1 - 2 * v2 + v3) ** 2 + mpf(1) / 4 * (v1 - v3) ** 2
    b2 = mpf(13) / 12 * (v2 - 2 * v3 + v4) ** 2 + mpf(1) / 4 * (3 * v2 - 4 * v3 + v4) ** 2
    a = [mpf("0.1") / (eps + b0) ** 2, mpf("0.6") / (eps + b1) ** 2, mpf("0.3") / (eps + b2) ** 2]
    q = [(2 * v0 - 7 * v1 + 11 * v2) / 6, (-v1 + 5 * v2 + 2 * v3) / 6, (2 * v2 + 5 * v3 - v4) / 6]
    return sum(ai * qi for ai, qi in zip(a, q)) / sum(a)


def entropy_1d(rho, u, p, gamma):
    S = log(p) - gamma * log(rho)
    return -rho * lorentz(u) * S / (gamma - 1)


def main():
    g53 = mpf(5) / 3

    show("ln_mean(1, 2)", (mpf(2) - 1) / (log(2) - log(1)))
    show("ln_mean(3, 3.0003)", (mpf("3.0003") - 3) / (log(mpf("3.0003")) - log(3)))
    show("ln_mean(0.25, 7)", (mpf(7) - mpf("0.25")) / (log(7) - log(mpf("0.25"))))

    uL, uR = mpf("0.3"), mpf("-0.5")
    show("lorentz_mean_1d(0.3, -0.5)", (lorentz(uR) - lorentz(uL)) / (uR - uL))

    D, m, E = prim_to_cons_1d(mpf(1), mpf("0.5"), mpf(1), g53)
    show("prim_to_cons D (1, .5, 1)", D)
    show("prim_to_cons m (1, .5, 1)", m)
    show("prim_to_cons E (1, .5, 1)", E)

    rho, u, p = mpf(1), mpf("0.5"), mpf(1)
    h = 1 + g53 * p / ((g53 - 1) * rho)
    cs = sqrt(g53 * p / (rho * h))
    show("sound_speed (1, .5, 1)", cs)
    show("lambda- (1, .5, 1)", (u - cs) / (1 - u * cs))
    show("lambda+ (1, .5, 1)", (u + cs) / (1 + u * cs))
    show("entropy eta (2, .5, 3)", entropy_1d(mpf(2), u, mpf(3), g53))

    # interface average of (1, 0.2, 1) and (0.5, -0.1, 0.25)
    rL, rR, uL, uR, pL, pR = mpf(1), mpf("0.5"), mpf("0.2"), mpf("-0.1"), mpf(1), mpf("0.25")
    rbar = (rR - rL) / (log(rR) - log(rL))
    bL, bR = rL / pL, rR / pR
    bbar = (bR - bL) / (log(bR) - log(bL))
    show("avg rho", rbar)
    show("avg u", (uL + uR) / 2)
    show("avg p", rbar / bbar)

    for stencil in ([1, 1, 1, 0, 0], [0, 0, 1, 1, 1], [1, 2, 4, 8, 16], [0.3, -1.2, 2.5, 0.7, -0.4]):
        show(f"weno5_left{stencil}", weno5_left(stencil))


if __name__ == "__main__":
    main()
