"""Legendre-form elliptic integrals of the first and third kind.

Conventions (Byrd & Friedman):

    F(phi, k)    = int_0^phi dt / sqrt(1 - k^2 sin^2 t)
    Pi(phi, n, k) = int_0^phi dt / ((1 - n sin^2 t) sqrt(1 - k^2 sin^2 t))

``k`` is the modulus (not the parameter ``m = k^2``) and the characteristic
``n`` enters with a minus sign, so ``0 <= n < 1`` keeps the integrand free of
poles.  Both reduce to Carlson forms.
"""

from __future__ import annotations

import math

from .carlson import rf, rj
from .errors import DomainError

__all__ = ["ellip_f", "ellip_pi", "complete_k", "complete_pi"]

_HALF_PI = 0.5 * math.pi


def _check_modulus(k: float) -> None:
    if not (0.0 <= k < 1.0):
        raise DomainError(f"modulus k must lie in [0, 1), got {k}")


def _check_characteristic(n: float) -> None:
    if not (0.0 <= n < 1.0):
        raise DomainError(f"characteristic n must lie in [0, 1), got {n}")


def _check_amplitude(phi: float) -> None:
    if not (0.0 <= phi <= _HALF_PI):
        raise DomainError(f"amplitude phi must lie in [0, pi/2], got {phi}")


def _sin_cos2(phi: float) -> tuple[float, float]:
    # cos(pi/2) is 6e-17 in binary64; pin it so the complete case is exact.
    if phi == _HALF_PI:
        return 1.0, 0.0
    c = math.cos(phi)
    return math.sin(phi), c * c


def ellip_f(phi: float, k: float) -> float:
    """Incomplete integral of the first kind, F(phi, k)."""
    _check_amplitude(phi)
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    s, c2 = _sin_cos2(phi)
    return s * rf(c2, 1.0 - k * k * s * s, 1.0)


def ellip_pi(phi: float, n: float, k: float) -> float:
    """Incomplete integral of the third kind, Pi(phi, n, k)."""
    _check_amplitude(phi)
    _check_characteristic(n)
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    s, c2 = _sin_cos2(phi)
    s2 = s * s
    delta2 = 1.0 - k * k * s2
    value = s * rf(c2, delta2, 1.0)
    if n != 0.0:
        value += n / 3.0 * s * s2 * rj(c2, delta2, 1.0, 1.0 - n * s2)
    return value


def complete_k(k: float) -> float:
    """Complete integral of the first kind, K(k) = F(pi/2, k)."""
    _check_modulus(k)
    return rf(0.0, 1.0 - k * k, 1.0)


def complete_pi(n: float, k: float) -> float:
    """Complete integral of the third kind, Pi(pi/2, n, k)."""
    _check_characteristic(n)
    _check_modulus(k)
    kp2 = 1.0 - k * k
    value = rf(0.0, kp2, 1.0)
    if n != 0.0:
        value += n / 3.0 * rj(0.0, kp2, 1.0, 1.0 - n)
    return value
