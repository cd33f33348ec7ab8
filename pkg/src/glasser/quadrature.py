"""Tanh-sinh quadrature with level doubling, plus a composite Simpson oracle.

The tanh-sinh rule maps ``[-1, 1]`` through ``x = tanh(pi/2 * sinh t)`` and
applies the trapezoid rule in ``t``.  Inverse-square-root endpoint
singularities are integrated without special handling, provided the
integrand can be evaluated close enough to the endpoint.  Near an endpoint
other than zero, the abscissa itself cannot resolve distances below one ulp,
so :func:`integrate_finite` can optionally hand the integrand the exact
distances to both endpoints (``distances=True``); integrands written in
terms of those distances keep full accuracy down to distances of 1e-150.

:func:`oracle_integrate` is deliberately naive (uniform composite Simpson)
and shares no code with the tanh-sinh path, so the two can cross-check each
other.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, QuadratureError

__all__ = [
    "ToleranceSpec",
    "QuadratureResult",
    "integrate_finite",
    "integrate_semi_infinite",
    "oracle_integrate",
]

# Nodes closer than this (in the reference interval [-1, 1]) to an endpoint
# are dropped.  The plain floor matches double resolution of the abscissa;
# the distance floor is where integrands given exact distances stop mattering.
PLAIN_FLOOR = 1e-15
DISTANCE_FLOOR = 1e-150

MIN_LEVEL = 3
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ToleranceSpec:
    abs_tol: float = 1e-12
    max_level: int = 12

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_level < MIN_LEVEL:
            raise DomainError(f"max_level must be >= {MIN_LEVEL}, got {self.max_level}")


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of one integration.

    ``error_estimate`` is the difference between the last two levels; when
    ``converged`` is true it does not exceed the requested tolerance.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool

    def __float__(self) -> float:
        return self.value


DEFAULT_TOL = ToleranceSpec()


# Node tables ---------------------------------------------------------------

_tables: dict[int, tuple[tuple[float, float, float], ...]] = {}
_tables_lock = threading.Lock()


def _t_max() -> float:
    # Solve 2*exp(-pi*sinh t) ~ DISTANCE_FLOOR for t, rounded up.
    return math.asinh(math.log(2.0 / DISTANCE_FLOOR) / math.pi) + 0.05


def _node(t: float) -> tuple[float, float, float]:
    """Return (x, 1 - x, weight) for the positive node at ``t``."""
    u = _HALF_PI * math.sinh(t)
    cu = math.cosh(u)
    comp = 1.0 / (math.exp(u) * cu)
    weight = _HALF_PI * math.cosh(t) / (cu * cu)
    return 1.0 - comp, comp, weight


def _level_nodes(level: int) -> tuple[tuple[float, float, float], ...]:
    """Positive nodes that are new at ``level`` (step h = 2**-level).

    Level 0 holds t = 1, 2, ...; the node at t = 0 is handled separately.
    Later levels hold the odd multiples of h.
    """
    table = _tables.get(level)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(level)
        if table is None:
            h = 2.0 ** -level
            tmax = _t_max()
            start, stride = (1, 1) if level == 0 else (1, 2)
            nodes = []
            j = start
            while j * h <= tmax:
                nodes.append(_node(j * h))
                j += stride
            table = tuple(nodes)
            _tables[level] = table
    return table


# Integrators ---------------------------------------------------------------


def _checked(v: float, x: float) -> float:
    if math.isnan(v) or math.isinf(v):
        raise QuadratureError(f"integrand returned {v} at x = {x!r}")
    return v


def integrate_finite(
    f: Callable[..., float],
    lo: float,
    hi: float,
    tol: ToleranceSpec = DEFAULT_TOL,
    *,
    distances: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]`` by tanh-sinh with level doubling.

    Parameters
    ----------
    f : callable
        ``f(x)``, or ``f(x, x - lo, hi - x)`` when ``distances`` is true.
        The two distances are computed without cancellation, so an
        integrand with a factor like ``sqrt(hi - x)`` should use them.
    lo, hi : float
        Finite limits with ``lo < hi``.
    tol : ToleranceSpec
        Stop once two successive levels differ by less than ``abs_tol``.

    Raises
    ------
    QuadratureError
        If the integrand returns NaN or infinity at an interior node.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("integrate_finite needs finite limits")
    if not lo < hi:
        raise DomainError(f"integrate_finite needs lo < hi, got [{lo}, {hi}]")

    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    floor = DISTANCE_FLOOR if distances else PLAIN_FLOOR

    if distances:
        def g(x: float, dlo: float, dhi: float) -> float:
            return _checked(f(x, dlo, dhi), x)
    else:
        def g(x: float, dlo: float, dhi: float) -> float:
            return _checked(f(x), x)

    def level_sum(level: int) -> tuple[float, int]:
        total = 0.0
        count = 0
        for xr, comp, w in _level_nodes(level):
            if comp < floor:
                break
            d_near = half * comp
            d_far = half * (1.0 + xr)
            total += w * (g(hi - d_near, d_far, d_near) + g(lo + d_near, d_near, d_far))
            count += 2
        return total, count

    centre = _HALF_PI * g(mid, half, half)
    s0, n = level_sum(0)
    estimate = centre + s0
    evaluations = n + 1

    error = math.inf
    for level in range(1, tol.max_level + 1):
        s, n = level_sum(level)
        evaluations += n
        h = 2.0 ** -level
        new = 0.5 * estimate + h * s
        error = half * abs(new - estimate)
        estimate = new
        if level >= MIN_LEVEL and error <= tol.abs_tol:
            return QuadratureResult(half * estimate, error, evaluations, True)
    return QuadratureResult(half * estimate, error, evaluations, False)


def integrate_semi_infinite(
    f: Callable[[float], float],
    lo: float,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, inf)``.

    The range is split at ``max(lo, 1)``; the unbounded piece is folded onto
    ``(0, 1/max(lo, 1)]`` by ``x -> 1/y``.  ``f`` must decay faster than
    ``1/x``.  Each piece gets half of ``abs_tol``.
    """
    if not math.isfinite(lo):
        raise DomainError("integrate_semi_infinite needs a finite lower limit")
    split = max(lo, 1.0)
    piece_tol = ToleranceSpec(0.5 * tol.abs_tol, tol.max_level)

    def folded(y: float, dlo: float, dhi: float) -> float:
        # dlo is y itself, exact down to DISTANCE_FLOOR
        return f(1.0 / dlo) / (dlo * dlo)

    tail = integrate_finite(folded, 0.0, 1.0 / split, piece_tol, distances=True)
    if split == lo:
        return tail
    head = integrate_finite(f, lo, split, piece_tol)
    return QuadratureResult(
        head.value + tail.value,
        head.error_estimate + tail.error_estimate,
        head.evaluations + tail.evaluations,
        head.converged and tail.converged,
    )


def oracle_integrate(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    n: int = 1_000_000,
) -> float:
    """Composite Simpson rule with ``n`` uniform panels (rounded up to even).

    ``f`` is called once on the full array of abscissae and must return an
    array of the same shape.  The integrand has to be bounded on the closed
    interval, so singular integrals need a smoothing substitution first.
    """
    if n < 100_000:
        raise DomainError(f"oracle_integrate needs n >= 1e5 panels, got {n}")
    n += n % 2
    x = np.linspace(lo, hi, n + 1)
    y = np.asarray(f(x), dtype=float)
    h = (hi - lo) / n
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))
