"""Representations of the integral family

    f(a, b) = int_0^inf dx / ((x^2 + 1)^a * sqrt(phi(x) + sqrt(phi(x)))),
    phi(x)  = 1 + 4 u^2 / b^2,   u = x / (x^2 + 1).

Every published rewriting of ``f`` is an independent function here, so that
each can be checked against the direct integral.  Factors of the form
``sqrt(1 - b / sqrt(b^2 + s^2))`` are always evaluated through the exact
rewrite ``s / sqrt(R (R + b))`` with ``R = sqrt(b^2 + s^2)``, which removes
the 0/0 cancellation at ``s = 0``.  Integrands with a square-root zero at an
endpoint use the distance form of :func:`integrate_finite`.

Formulas that look doubtful as printed (the standard-form ``Pi`` for
``a = 1`` and the ``f(3, b)`` display) are evaluated verbatim; judging them
is the audit harness's job.  Their emended variants are labelled conjectural.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import DomainError
from .legendre import complete_pi, ellip_f
from .quadrature import (
    DEFAULT_TOL,
    QuadratureResult,
    ToleranceSpec,
    integrate_finite,
    integrate_semi_infinite,
)

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Params:
    """One member ``(a, b)`` of the family; needs ``a > 1/2`` and ``b > 0``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.a) or not self.a > 0.5:
            raise DomainError(
                f"f(a, b) requires a > 1/2 for convergence at infinity, got a = {self.a}"
            )
        if not math.isfinite(self.b) or not self.b > 0.0:
            raise DomainError(f"f(a, b) requires finite b > 0, got b = {self.b}")


@dataclass(frozen=True)
class ModulusSet:
    """Elliptic parameters attached to ``b``: ``k``, ``alpha^2`` and ``kappa``."""

    k: float
    alpha_sq: float
    kappa: float

    @classmethod
    def from_b(cls, b: float) -> ModulusSet:
        r = math.hypot(b, 1.0)
        k = b / r
        # kappa = r - b, written without cancellation for large b
        return cls(k=k, alpha_sq=0.5 * (1.0 + k), kappa=1.0 / (r + b))

    @property
    def alpha_sq_variant(self) -> float:
        """``(sqrt(b^2+1) - b) / (2 sqrt(b^2+1))``, the sign-flipped characteristic."""
        # equals (1 - k)/2, written in kappa to avoid cancellation as k -> 1
        kk = self.kappa * self.kappa
        return kk / (1.0 + kk)


class Status(str, enum.Enum):
    OK = "OK"
    ILL_DEFINED = "ILL_DEFINED"
    NO_CONVERGENCE = "NO_CONVERGENCE"


@dataclass(frozen=True)
class RepresentationValue:
    """Value of one representation at one parameter point.

    ``value`` is ``None`` unless ``status`` is OK.  An ILL_DEFINED value
    carries the offending subinterval in ``domain`` and a description in
    ``detail``.
    """

    rep_id: str
    value: float | None
    status: Status
    error_estimate: float = 0.0
    applicability: str = "all a > 1/2, b > 0"
    conjectural: bool = False
    detail: str = ""
    domain: tuple[float, float] | None = None

    @classmethod
    def from_quadrature(cls, rep_id: str, result: QuadratureResult, **kw) -> RepresentationValue:
        if result.converged:
            return cls(rep_id, result.value, Status.OK, result.error_estimate, **kw)
        return cls(
            rep_id,
            None,
            Status.NO_CONVERGENCE,
            result.error_estimate,
            detail=f"quadrature stopped at error estimate {result.error_estimate:.3g}",
            **kw,
        )


def phi(x: float, b: float) -> float:
    u = x / (x * x + 1.0)
    return 1.0 + 4.0 * u * u / (b * b)


# Direct and transformed integrals -------------------------------------------


def _scaled_integral(scale, f, lo, hi, tol: ToleranceSpec, distances=False) -> QuadratureResult:
    """``scale * int_lo^hi f`` with the tolerance applied to the scaled value."""
    inner = ToleranceSpec(tol.abs_tol / abs(scale), tol.max_level)
    res = integrate_finite(f, lo, hi, inner, distances=distances)
    return QuadratureResult(
        scale * res.value, abs(scale) * res.error_estimate, res.evaluations, res.converged
    )


def direct_integrand(p: Params):
    a, inv_b2 = p.a, 1.0 / (p.b * p.b)

    def f(x: float) -> float:
        x2p1 = x * x + 1.0
        u = x / x2p1
        ph = 1.0 + 4.0 * u * u * inv_b2
        return x2p1 ** -a / math.sqrt(ph + math.sqrt(ph))

    return f


def f_direct(p: Params, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """The defining integral over ``[0, inf)``."""
    return integrate_semi_infinite(direct_integrand(p), 0.0, tol)


def transformed_integrand(p: Params):
    """Integrand in ``s = 2u`` on ``[0, 1]``, in distance form.

    The ``1/s`` of the printed form cancels against the ``s`` of the
    stabilized square-root factor.
    """
    a, b = p.a, p.b
    em1 = a - 1.0

    def f(s: float, dlo: float, dhi: float) -> float:
        s2 = s * s
        c = math.sqrt(dhi * (2.0 - dhi))  # sqrt(1 - s^2)
        one_minus_c = s2 / (1.0 + c)
        pair = (1.0 + c) ** em1 + one_minus_c ** em1
        r = math.sqrt(b * b + s2)
        return pair / (c * math.sqrt(r * (r + b)))

    return f


def f_transformed(p: Params, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    scale = 2.0 ** -p.a * p.b
    return _scaled_integral(scale, transformed_integrand(p), 0.0, 1.0, tol, distances=True)


# a = 1 ----------------------------------------------------------------------


def f1_integral(b: float, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """``k * int_k^1 dt / ((t+1) sqrt((1-t)(t^2-k^2)))``, the t-substituted form."""
    Params(1.0, b)
    k = ModulusSet.from_b(b).k

    def f(t: float, dlo: float, dhi: float) -> float:
        return 1.0 / ((t + 1.0) * math.sqrt(dhi * dlo * (t + k)))

    return _scaled_integral(k, f, k, 1.0, tol, distances=True)


def _f1_standard_form(b: float, alpha_sq: float, kappa: float) -> float:
    k = ModulusSet.from_b(b).k
    return k / math.sqrt(k + 1.0) * complete_pi(alpha_sq, kappa)


def f1_closed(b: float) -> float:
    """``k / sqrt(k+1) * Pi(pi/2, alpha^2, kappa)`` exactly as printed."""
    Params(1.0, b)
    m = ModulusSet.from_b(b)
    return _f1_standard_form(b, m.alpha_sq, m.kappa)


def f1_closed_variant(b: float) -> float:
    """Conjectural: :func:`f1_closed` with ``alpha^2 = (1 - k)/2``.

    The printed ``alpha^2 = (1 + k)/2`` tends to 1 as ``b -> inf`` and the
    complete ``Pi`` diverges, while ``f(1, b)`` stays bounded; flipping the
    sign of ``b`` in the numerator is the obvious candidate emendation.
    """
    Params(1.0, b)
    m = ModulusSet.from_b(b)
    return _f1_standard_form(b, m.alpha_sq_variant, m.kappa)


# a = 3 ----------------------------------------------------------------------


def _f3_formula(b: float, k: float, lower: float, tol: ToleranceSpec) -> QuadratureResult:
    """``f(1,b)/2 - (k^2/4) int_lower^{1/k} sqrt(x (x-1) / (1 - k^2 x^2)) dx``, ``lower >= 1``.

    Each of the two terms gets half the error budget.
    """
    upper = 1.0 / k
    shift = lower - 1.0

    def f(x: float, dlo: float, dhi: float) -> float:
        # 1 - k^2 x^2 = k (1/k - x) (1 + k x)
        return math.sqrt(x * (dlo + shift) / (k * dhi * (1.0 + k * x)))

    half = ToleranceSpec(0.5 * tol.abs_tol, tol.max_level)
    f1 = f_direct(Params(1.0, b), tol)
    integral = _scaled_integral(-0.25 * k * k, f, lower, upper, half, distances=True)
    return QuadratureResult(
        0.5 * f1.value + integral.value,
        0.5 * f1.error_estimate + integral.error_estimate,
        f1.evaluations + integral.evaluations,
        f1.converged and integral.converged,
    )


def f3_literal(b: float, tol: ToleranceSpec = DEFAULT_TOL) -> RepresentationValue:
    """``f(1,b)/2 - (k^2/4) int_{1/sqrt(1+k^2)}^{1/k} sqrt(x(x-1)/(1-k^2 x^2)) dx``.

    The radicand is negative wherever ``x < 1`` on the printed range, so for
    every ``b > 0`` this returns ILL_DEFINED with that subinterval.
    """
    Params(3.0, b)
    k = ModulusSet.from_b(b).k
    lower, upper = 1.0 / math.sqrt(1.0 + k * k), 1.0 / k
    note = "a = 3"
    # On (0, 1/k) the denominator is positive, so the sign is that of x - 1.
    if lower < 1.0:
        bad = (lower, min(1.0, upper))
        return RepresentationValue(
            "f3-literal",
            None,
            Status.ILL_DEFINED,
            applicability=note,
            detail=(
                f"radicand x(x-1)/(1-k^2 x^2) < 0 on [{bad[0]!r}, {bad[1]!r}) "
                f"(k = {k!r})"
            ),
            domain=bad,
        )
    res = _f3_formula(b, k, lower, tol)
    return RepresentationValue.from_quadrature("f3-literal", res, applicability=note)


def f3_variant(b: float, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """Conjectural: the ``f(3, b)`` display with the integral restricted to ``[1, 1/k]``."""
    Params(3.0, b)
    k = ModulusSet.from_b(b).k
    return _f3_formula(b, k, 1.0, tol)


# a = 3/2 --------------------------------------------------------------------


def f32_trig(b: float, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """``(b/4) int_0^{pi/2} [csc(t/2) + sec(t/2)] sqrt(1 - b/sqrt(b^2 + sin^2 t)) dt``."""
    Params(1.5, b)
    bb = b * b

    def f(t: float) -> float:
        st = math.sin(t)
        r = math.sqrt(bb + st * st)
        # csc(t/2) * sin(t) stays bounded as t -> 0
        return (1.0 / math.sin(0.5 * t) + 1.0 / math.cos(0.5 * t)) * st / math.sqrt(r * (r + b))

    return _scaled_integral(0.25 * b, f, 0.0, 0.5 * math.pi, tol)


def f32_y_branch(sign: int, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """One term of ``int_{sqrt3/2}^1 dy / sqrt(y(1+y)(4y^2-3)(y +/- sqrt(4y^2-3)))``."""
    lo = 0.5 * SQRT3

    def f(y: float, dlo: float, dhi: float) -> float:
        q = 2.0 * dlo * (2.0 * y + SQRT3)  # 4y^2 - 3
        root = math.sqrt(q)
        if sign > 0:
            last = y + root
        else:
            last = 3.0 * dhi * (1.0 + y) / (y + root)  # y - sqrt(4y^2 - 3)
        return 1.0 / math.sqrt(y * (1.0 + y) * q * last)

    return integrate_finite(f, lo, 1.0, tol, distances=True)


def f32_y_form(tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """The algebraic y-form for ``f(3/2, sqrt 3)``: ``3/sqrt 8`` times both branches."""
    w = 3.0 / math.sqrt(8.0)
    branch_tol = ToleranceSpec(0.5 * tol.abs_tol / w, tol.max_level)
    plus, minus = f32_y_branch(+1, branch_tol), f32_y_branch(-1, branch_tol)
    return QuadratureResult(
        w * (plus.value + minus.value),
        w * (plus.error_estimate + minus.error_estimate),
        plus.evaluations + minus.evaluations,
        plus.converged and minus.converged,
    )


def f32_x_form(tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
    """The reduced x-form on ``[0, 1/sqrt 3]`` (printed with the label ``f(2/3, sqrt 3)``)."""
    hi = 1.0 / SQRT3
    c = 2.0 / SQRT3

    def f(x: float, dlo: float, dhi: float) -> float:
        x2p1 = x * x + 1.0
        big_x = math.sqrt(x2p1)
        d = SQRT3 * dhi * (1.0 + SQRT3 * x)  # 1 - 3x^2
        minus = d / (big_x + 2.0 * x)  # X - 2x
        num = math.sqrt(minus) + math.sqrt(big_x + 2.0 * x)
        return num / (math.sqrt(x2p1 * d) * math.sqrt(big_x * (big_x + c)))

    return _scaled_integral(3.0 ** 0.25 / 2.0, f, 0.0, hi, tol, distances=True)


def arias_value() -> float:
    """Closed form ``(sqrt3-1)/2 Pi(pi/2, 2-sqrt3, 3^-1/2) - 6^-1/2 F(asin sqrt(2-sqrt3), 3^-1/2)``."""
    n = 2.0 - SQRT3
    k = 1.0 / SQRT3
    return 0.5 * (SQRT3 - 1.0) * complete_pi(n, k) - ellip_f(
        math.asin(math.sqrt(n)), k
    ) / math.sqrt(6.0)


def gr_claimed_value() -> float:
    """The tabulated value ``pi / (2 sqrt 6)`` for ``f(3/2, sqrt 3)``."""
    return math.pi / (2.0 * math.sqrt(6.0))


# Integer a ------------------------------------------------------------------


@dataclass(frozen=True)
class PolynomialRep:
    """``f(a, b) = multiple * f(1, b) + 2^-a b int_0^1 P(x) / (2x sqrt(1-x)) sqrt(1 - b/sqrt(b^2+x)) dx``.

    ``coefficients[i]`` multiplies ``x**i``; ``coefficients[0]`` is always 0.
    """

    a: int
    multiple: Fraction
    coefficients: tuple[Fraction, ...] = field(default=())

    def poly(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def remainder(self, b: float, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
        """The polynomial integral, including its ``2^-a b`` prefactor."""
        # P(x)/x as a polynomial, Horner form
        reduced = [float(c) for c in self.coefficients[1:]]
        if not any(reduced):
            return QuadratureResult(0.0, 0.0, 1, True)

        def f(x: float, dlo: float, dhi: float) -> float:
            acc = 0.0
            for c in reversed(reduced):
                acc = acc * x + c
            r = math.sqrt(b * b + x)
            return acc * math.sqrt(x / (r * (r + b))) / (2.0 * math.sqrt(dhi))

        return _scaled_integral(2.0 ** -self.a * b, f, 0.0, 1.0, tol, distances=True)

    def evaluate(self, b: float, tol: ToleranceSpec = DEFAULT_TOL) -> QuadratureResult:
        m = float(self.multiple)
        half = 0.5 * tol.abs_tol
        f1 = f_direct(Params(1.0, b), ToleranceSpec(half / m, tol.max_level))
        rem = self.remainder(b, ToleranceSpec(half, tol.max_level))
        return QuadratureResult(
            m * f1.value + rem.value,
            m * f1.error_estimate + rem.error_estimate,
            f1.evaluations + rem.evaluations,
            f1.converged and rem.converged,
        )


def integer_a_expansion(a: int) -> PolynomialRep:
    """Binomial expansion of ``[1+c]^(a-1) + [1-c]^(a-1)``, ``c = sqrt(1-x)``.

    Odd powers of ``c`` cancel, leaving ``2 sum_j C(a-1, 2j) (1-x)^j``.  Its
    constant term yields the multiple of ``f(1, b)``; the rest is ``P``.
    """
    if isinstance(a, bool) or int(a) != a or a < 2:
        raise DomainError(f"integer_a_expansion needs an integer a >= 2, got {a}")
    a = int(a)
    coeffs = [Fraction(0)] * ((a - 1) // 2 + 1)
    for j in range(0, (a - 1) // 2 + 1):
        w = 2 * comb(a - 1, 2 * j)
        # (1 - x)^j
        for i in range(j + 1):
            coeffs[i] += w * comb(j, i) * (-1) ** i
    constant = coeffs[0]
    coeffs[0] = Fraction(0)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return PolynomialRep(a=a, multiple=Fraction(constant, 2 ** a), coefficients=tuple(coeffs))
