"""Brute-force reference values: composite Simpson on desingularized integrands.

Nothing here touches the tanh-sinh code, the Carlson kernel or the
distance-form integrands of the package.  Each function rewrites a defining
integral by a substitution that leaves a bounded, smooth integrand on a
closed interval, then applies ``oracle_integrate`` (plain Simpson).
"""

from __future__ import annotations

import numpy as np

from glasser.quadrature import oracle_integrate

N = 1_000_000
SQRT3 = np.sqrt(3.0)


def _safe_ratio(v, w):
    """v / sqrt(v**2 + w) with the v = 0, w = 0 limit taken as 1."""
    with np.errstate(invalid="ignore", divide="ignore"):
        r = v / np.sqrt(v * v + w)
    return np.where((v == 0) & (w == 0), 1.0, r)


# Carlson forms: t = (v / (1 - v))^2 maps [0, inf) onto [0, 1).


def _carlson_factors(v, args):
    om2 = (1.0 - v) ** 2
    return [v * v + a * om2 for a in args]


def rf_oracle(x, y, z, n=N):
    def f(v):
        fx, fy, fz = _carlson_factors(v, (x, y, z))
        # v / sqrt(fx fy fz), with the zero-argument factor paired with v
        return _safe_ratio(v, x * (1.0 - v) ** 2) / np.sqrt(fy * fz)

    return oracle_integrate(f, 0.0, 1.0, n)


def rc_oracle(x, y, n=N):
    return rf_oracle(x, y, y, n)


def rj_oracle(x, y, z, p, n=N):
    def f(v):
        fx, fy, fz = _carlson_factors(v, (x, y, z))
        fp = v * v + p * (1.0 - v) ** 2
        return 3.0 * _safe_ratio(v, x * (1.0 - v) ** 2) * (1.0 - v) ** 2 / (fp * np.sqrt(fy * fz))

    return oracle_integrate(f, 0.0, 1.0, n)


def rd_oracle(x, y, z, n=N):
    return rj_oracle(x, y, z, z, n)


# Legendre forms: integrands are smooth on [0, phi] for k < 1, n < 1.


def ellip_f_oracle(phi, k, n=N):
    return oracle_integrate(lambda t: 1.0 / np.sqrt(1.0 - (k * np.sin(t)) ** 2), 0.0, phi, n)


def ellip_pi_oracle(phi, char, k, n=N):
    def f(t):
        s2 = np.sin(t) ** 2
        return 1.0 / ((1.0 - char * s2) * np.sqrt(1.0 - k * k * s2))

    return oracle_integrate(f, 0.0, phi, n)


# The family.


def f_oracle(a, b, n=N):
    """Defining integral after x = tan(theta); for a < 1 also theta = pi/2 - w^2."""

    def core(theta):
        ph = 1.0 + np.sin(2.0 * theta) ** 2 / (b * b)
        return 1.0 / np.sqrt(ph + np.sqrt(ph))

    if a >= 1.0:
        return oracle_integrate(lambda t: np.cos(t) ** (2 * a - 2) * core(t), 0.0, np.pi / 2, n)

    # cos(pi/2 - w^2) = sin(w^2); sin(w^2)^(2a-2) * 2w stays bounded for a > 1/2
    def g(w):
        w2 = w * w
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(w == 0, 1.0, np.sin(w2) / w2)
        return 2.0 * w ** (4 * a - 3) * ratio ** (2 * a - 2) * core(np.pi / 2 - w2)

    return oracle_integrate(g, 0.0, np.sqrt(np.pi / 2), n)


def f1_integral_oracle(b, n=N):
    """k * int_k^1 dt/((t+1) sqrt((1-t)(t^2-k^2))) with t = k + (1-k) sin^2(psi)."""
    k = b / np.sqrt(b * b + 1.0)

    def f(psi):
        t = k + (1.0 - k) * np.sin(psi) ** 2
        return 2.0 / ((t + 1.0) * np.sqrt(t + k))

    return k * oracle_integrate(f, 0.0, np.pi / 2, n)


def eq6_integral_oracle(b, n=N):
    """The bare t-integral of the a = 1 substitution, without the k prefactor."""
    k = b / np.sqrt(b * b + 1.0)
    return f1_integral_oracle(b, n) / k


def f32_trig_oracle(b, n=N):
    def f(t):
        st = np.sin(t)
        r = np.sqrt(b * b + st * st)
        # csc(t/2) sin t = 2 cos(t/2); sec(t/2) sin t = 2 sin(t/2)
        return 2.0 * (np.cos(t / 2) + np.sin(t / 2)) / np.sqrt(r * (r + b))

    return b / 4.0 * oracle_integrate(f, 0.0, np.pi / 2, n)


def f32_y_oracle(n=N):
    """y = sqrt3/2 + (1 - sqrt3/2) sin^2(psi) removes both endpoint singularities."""
    lo = SQRT3 / 2.0
    span = 1.0 - lo

    def branch(sign):
        def f(psi):
            s, c = np.sin(psi), np.cos(psi)
            y = lo + span * s * s
            # 4y^2 - 3 = 4 (y - lo)(y + lo);  dy = 2 span s c dpsi
            q_over_s2 = 4.0 * span * (y + lo)
            root = np.sqrt(q_over_s2) * s
            if sign > 0:
                return 2.0 * span * c / np.sqrt(y * (1.0 + y) * q_over_s2 * (y + root))
            # y - sqrt(4y^2-3) = 3 (1-y)(1+y)/(y + root), 1 - y = span c^2
            last_over_c2 = 3.0 * span * (1.0 + y) / (y + root)
            return 2.0 * span / np.sqrt(y * (1.0 + y) * q_over_s2 * last_over_c2)

        return oracle_integrate(f, 0.0, np.pi / 2, n)

    return 3.0 / np.sqrt(8.0) * (branch(+1) + branch(-1))


def f32_x_oracle(n=N):
    """x = sin(psi) / sqrt3 turns sqrt(1 - 3x^2) into cos(psi)."""

    def f(psi):
        x = np.sin(psi) / SQRT3
        big_x = np.sqrt(x * x + 1.0)
        num = np.sqrt(np.maximum(big_x - 2.0 * x, 0.0)) + np.sqrt(big_x + 2.0 * x)
        return num / (SQRT3 * np.sqrt(x * x + 1.0) * np.sqrt(big_x * (big_x + 2.0 / SQRT3)))

    return 3.0 ** 0.25 / 2.0 * oracle_integrate(f, 0.0, np.pi / 2, n)


def f3_variant_oracle(b, n=N):
    """f(1,b)/2 - (k^2/4) int_1^{1/k} sqrt(x(x-1)/(1-k^2x^2)) dx, x = 1 + (1/k - 1) sin^2."""
    k = b / np.sqrt(b * b + 1.0)
    span = 1.0 / k - 1.0

    def f(psi):
        s = np.sin(psi)
        x = 1.0 + span * s * s
        # x - 1 = span s^2, 1/k - x = span c^2, dx = 2 span s c
        return 2.0 * span * s * s * np.sqrt(x / (k * (1.0 + k * x)))

    return 0.5 * f_oracle(1.0, b, n) - 0.25 * k * k * oracle_integrate(f, 0.0, np.pi / 2, n)


def transformed_oracle(a, b, n=N):
    """The s-integral with s = sin(psi); for a < 1 also psi = w^2."""

    def core(psi):
        s = np.sin(psi)
        r = np.sqrt(b * b + s * s)
        return 1.0 / np.sqrt(r * (r + b))

    scale = 2.0 ** -a * b
    if a >= 1.0:
        def f(psi):
            c = np.cos(psi)
            return ((1.0 + c) ** (a - 1) + (1.0 - c) ** (a - 1)) * core(psi)

        return scale * oracle_integrate(f, 0.0, np.pi / 2, n)

    def g(w):
        psi = w * w
        c = np.cos(psi)
        # (1 - cos psi)^(a-1) * 2w = (2 sin^2(psi/2))^(a-1) * 2w, bounded for a > 1/2
        with np.errstate(divide="ignore", invalid="ignore"):
            sinc = np.where(w == 0, 0.5, np.sin(psi / 2) / np.where(w == 0, 1.0, w * w))
        small = (2.0 * sinc * sinc) ** (a - 1) * 2.0 * w ** (4 * a - 3)
        return ((1.0 + c) ** (a - 1) * 2.0 * w + small) * core(psi)

    return scale * oracle_integrate(g, 0.0, np.sqrt(np.pi / 2), n)
