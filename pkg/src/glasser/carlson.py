"""Carlson symmetric elliptic integrals RF, RC, RD and RJ.

All four use the duplication theorem followed by a truncated Taylor
series in the normalized deviations, after B. C. Carlson, "Numerical
computation of real or complex elliptic integrals" (1995). Only the real,
non-principal-value branches are implemented.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError

__all__ = ["rf", "rc", "rd", "rj", "MAX_ITERATIONS"]

MAX_ITERATIONS = 200

# Target relative truncation error of the series tail.
_R = 1e-16
_Q_RF = (3.0 * _R) ** (-1.0 / 6.0)
_Q_RC = (3.0 * _R) ** (-1.0 / 8.0)
_Q_RJ = (0.25 * _R) ** (-1.0 / 6.0)


def _check(name: str, *args: float) -> None:
    for v in args:
        if not math.isfinite(v):
            raise DomainError(f"{name}: arguments must be finite, got {args}")
        if v < 0.0:
            raise DomainError(f"{name}: arguments must be nonnegative, got {args}")


def rf(x: float, y: float, z: float) -> float:
    """Carlson's RF(x, y, z) = 1/2 * int_0^inf dt / sqrt((t+x)(t+y)(t+z)).

    At most one argument may be zero.
    """
    _check("rf", x, y, z)
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError("rf: at most one argument may be zero")

    x0, y0 = x, y
    a0 = (x + y + z) / 3.0
    q = _Q_RF * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    scale = 1.0
    for _ in range(MAX_ITERATIONS):
        if scale * q < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    else:
        raise ConvergenceError("rf: duplication did not converge")

    xd = (a0 - x0) * scale / a
    yd = (a0 - y0) * scale / a
    zd = -(xd + yd)
    e2 = xd * yd - zd * zd
    e3 = xd * yd * zd
    return (
        1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    ) / math.sqrt(a)


def rc(x: float, y: float) -> float:
    """Degenerate case RC(x, y) = RF(x, y, y), for x >= 0 and y > 0."""
    _check("rc", x, y)
    if y <= 0.0:
        raise DomainError("rc: y must be positive (principal value not supported)")

    y0 = y
    a0 = (x + 2.0 * y) / 3.0
    q = _Q_RC * abs(a0 - x)
    a = a0
    scale = 1.0
    for _ in range(MAX_ITERATIONS):
        if scale * q < abs(a):
            break
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    else:
        raise ConvergenceError("rc: duplication did not converge")

    s = (y0 - a0) * scale / a
    series = 1.0 + s * s * (
        3.0 / 10.0
        + s * (1.0 / 7.0 + s * (3.0 / 8.0 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 9.0 / 8.0))))
    )
    return series / math.sqrt(a)


def _rj_series(xd: float, yd: float, zd: float, pd: float) -> float:
    e2 = xd * yd + xd * zd + yd * zd - 3.0 * pd * pd
    e3 = xd * yd * zd + 2.0 * e2 * pd + 4.0 * pd ** 3
    e4 = (2.0 * xd * yd * zd + e2 * pd + 3.0 * pd ** 3) * pd
    e5 = xd * yd * zd * pd * pd
    return (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )


def rj(x: float, y: float, z: float, p: float) -> float:
    """Carlson's RJ(x, y, z, p) = 3/2 * int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z))).

    Symmetric in x, y, z; at most one of them may be zero and p must be
    positive.
    """
    _check("rj", x, y, z, p)
    if p <= 0.0:
        raise DomainError("rj: p must be positive (principal value not supported)")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError("rj: at most one of x, y, z may be zero")

    x0, y0, z0 = x, y, z
    a0 = (x + y + z + 2.0 * p) / 5.0
    q = _Q_RJ * max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    a = a0
    scale = 1.0
    tail = 0.0
    for _ in range(MAX_ITERATIONS):
        if scale * q < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        # alpha and beta are sums of positive terms: no cancellation when p << x, y, z
        alpha = (p * (sx + sy + sz) + sx * sy * sz) ** 2
        beta = p * (p + lam) ** 2
        tail += scale * rc(alpha, beta)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    else:
        raise ConvergenceError("rj: duplication did not converge")

    xd = (a0 - x0) * scale / a
    yd = (a0 - y0) * scale / a
    zd = (a0 - z0) * scale / a
    pd = -(xd + yd + zd) / 2.0
    return scale * _rj_series(xd, yd, zd, pd) / (a * math.sqrt(a)) + 3.0 * tail


def rd(x: float, y: float, z: float) -> float:
    """RD(x, y, z) = RJ(x, y, z, z); symmetric in x and y only."""
    _check("rd", x, y, z)
    if z <= 0.0:
        raise DomainError("rd: z must be positive")
    if x == 0.0 and y == 0.0:
        raise DomainError("rd: x and y may not both be zero")

    x0, y0 = x, y
    a0 = (x + y + 3.0 * z) / 5.0
    q = _Q_RJ * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    scale = 1.0
    tail = 0.0
    for _ in range(MAX_ITERATIONS):
        if scale * q < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        tail += scale / (sz * (z + lam))
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    else:
        raise ConvergenceError("rd: duplication did not converge")

    xd = (a0 - x0) * scale / a
    yd = (a0 - y0) * scale / a
    zd = -(xd + yd) / 3.0
    e2 = xd * yd - 6.0 * zd * zd
    e3 = (3.0 * xd * yd - 8.0 * zd * zd) * zd
    e4 = 3.0 * (xd * yd - zd * zd) * zd * zd
    e5 = xd * yd * zd ** 3
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return scale * series / (a * math.sqrt(a)) + 3.0 * tail
