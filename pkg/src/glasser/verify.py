"""Identity audit: evaluate every applicable representation and compare pairs.

Each representation of ``f(a, b)`` is registered with the parameter points
where it applies and with what the audit expects of it:

``confirm``
    should agree with the direct integral;
``refute``
    is known to be wrong (the tabulated value for ``f(3/2, sqrt 3)``);
``audit``
    printed identity whose correctness is in doubt; the verdict is recorded
    but never counted as a failure.

Conjectural emendations are reported with ``conjectural=True`` and are also
kept out of the pass/fail accounting.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from . import family
from .family import SQRT3, Params, RepresentationValue, Status
from .quadrature import DEFAULT_TOL, QuadratureResult, ToleranceSpec

__all__ = [
    "DEFAULT_TOLERANCE",
    "DEFAULT_A_GRID",
    "DEFAULT_B_GRID",
    "Verdict",
    "Representation",
    "REPRESENTATIONS",
    "REP_IDS",
    "PairResult",
    "IdentityReport",
    "GrCheck",
    "evaluate_all",
    "evaluate_rep",
    "gr_check",
    "audit_grid",
]

DEFAULT_TOLERANCE = 1e-9
DEFAULT_A_GRID = (0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0)
DEFAULT_B_GRID = (0.5, 1.0, SQRT3, 2.0, 10.0)


class Verdict(str, enum.Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    ILL_DEFINED = "ILL_DEFINED"


@dataclass(frozen=True)
class Representation:
    rep_id: str
    applies: Callable[[Params], bool]
    compute: Callable[[Params, ToleranceSpec], RepresentationValue]
    applicability: str
    expectation: str = "confirm"
    conjectural: bool = False

    def evaluate(self, p: Params, tol: ToleranceSpec = DEFAULT_TOL) -> RepresentationValue:
        return self.compute(p, tol)


def _from_quad(rep_id: str, note: str, conjectural: bool, fn):
    def compute(p: Params, tol: ToleranceSpec) -> RepresentationValue:
        return RepresentationValue.from_quadrature(
            rep_id, fn(p, tol), applicability=note, conjectural=conjectural
        )

    return compute


def _exact(rep_id: str, note: str, conjectural: bool, fn):
    def compute(p: Params, tol: ToleranceSpec) -> RepresentationValue:
        return RepresentationValue(
            rep_id, fn(p), Status.OK, 0.0, applicability=note, conjectural=conjectural
        )

    return compute


def _half_f1(p: Params, tol: ToleranceSpec) -> QuadratureResult:
    r = family.f_direct(Params(1.0, p.b), tol)
    return QuadratureResult(0.5 * r.value, 0.5 * r.error_estimate, r.evaluations, r.converged)


def _f3_literal(p: Params, tol: ToleranceSpec) -> RepresentationValue:
    return family.f3_literal(p.b, tol)


def _is_a(a: float) -> Callable[[Params], bool]:
    return lambda p: p.a == a


def _special(p: Params) -> bool:
    return p.a == 1.5 and p.b == SQRT3


def _build_registry() -> tuple[Representation, ...]:
    spec = [
        # rep_id, applies, note, expectation, conjectural, kind, function
        ("direct", lambda p: True, "all a > 1/2, b > 0", "confirm", False, "quad",
         lambda p, t: family.f_direct(p, t)),
        ("transformed", lambda p: True, "all a > 1/2, b > 0", "confirm", False, "quad",
         lambda p, t: family.f_transformed(p, t)),
        ("f1-integral", _is_a(1.0), "a = 1", "confirm", False, "quad",
         lambda p, t: family.f1_integral(p.b, t)),
        ("f1-closed", _is_a(1.0), "a = 1", "audit", False, "exact",
         lambda p: family.f1_closed(p.b)),
        ("f1-closed-variant", _is_a(1.0), "a = 1", "audit", True, "exact",
         lambda p: family.f1_closed_variant(p.b)),
        ("f2-relation", _is_a(2.0), "a = 2", "confirm", False, "quad", _half_f1),
        ("f3-literal", _is_a(3.0), "a = 3", "audit", False, "raw", _f3_literal),
        ("f3-variant", _is_a(3.0), "a = 3", "audit", True, "quad",
         lambda p, t: family.f3_variant(p.b, t)),
        ("f32-trig", _is_a(1.5), "a = 3/2", "confirm", False, "quad",
         lambda p, t: family.f32_trig(p.b, t)),
        ("f32-y", _special, "a = 3/2, b = sqrt(3) only", "audit", False, "quad",
         lambda p, t: family.f32_y_form(t)),
        ("f32-x", _special, "a = 3/2, b = sqrt(3) only", "audit", False, "quad",
         lambda p, t: family.f32_x_form(t)),
        ("arias", _special, "a = 3/2, b = sqrt(3) only", "confirm", False, "exact",
         lambda p: family.arias_value()),
        ("gr-claimed", _special, "a = 3/2, b = sqrt(3) only", "refute", False, "exact",
         lambda p: family.gr_claimed_value()),
    ]
    reps = []
    for rep_id, applies, note, expect, conj, kind, fn in spec:
        if kind == "quad":
            compute = _from_quad(rep_id, note, conj, fn)
        elif kind == "exact":
            compute = _exact(rep_id, note, conj, fn)
        else:
            compute = fn
        reps.append(Representation(rep_id, applies, compute, note, expect, conj))
    return tuple(reps)


REPRESENTATIONS = _build_registry()
REP_IDS = tuple(r.rep_id for r in REPRESENTATIONS)
_BY_ID = {r.rep_id: r for r in REPRESENTATIONS}


def evaluate_rep(rep_id: str, p: Params, tol: ToleranceSpec = DEFAULT_TOL) -> RepresentationValue:
    """Evaluate one representation by tag; raises KeyError for unknown tags."""
    return _BY_ID[rep_id].evaluate(p, tol)


def applicable(p: Params) -> list[Representation]:
    return [r for r in REPRESENTATIONS if r.applies(p)]


@dataclass(frozen=True)
class PairResult:
    rep_i: str
    rep_j: str
    delta: float | None
    verdict: Verdict
    expectation: str
    conjectural: bool

    @property
    def unexpected(self) -> bool:
        """A refutation of a pair that both sides claim should hold."""
        return (
            self.verdict is Verdict.REFUTED
            and self.expectation == "confirm"
            and not self.conjectural
        )


def _pair_expectation(e1: str, e2: str) -> str:
    if "refute" in (e1, e2):
        return "refute"
    if "audit" in (e1, e2):
        return "audit"
    return "confirm"


def compare(v1: RepresentationValue, v2: RepresentationValue, tolerance: float) -> tuple[float | None, Verdict]:
    if v1.status is not Status.OK or v2.status is not Status.OK:
        return None, Verdict.ILL_DEFINED
    delta = abs(v1.value - v2.value)
    return delta, Verdict.CONFIRMED if delta <= tolerance else Verdict.REFUTED


@dataclass(frozen=True)
class IdentityReport:
    params: Params
    entries: tuple[RepresentationValue, ...]
    pairwise: tuple[PairResult, ...]
    tolerance: float
    reference_value: float | None

    def entry(self, rep_id: str) -> RepresentationValue:
        for e in self.entries:
            if e.rep_id == rep_id:
                return e
        raise KeyError(rep_id)

    def pair(self, rep_i: str, rep_j: str) -> PairResult:
        for pr in self.pairwise:
            if {pr.rep_i, pr.rep_j} == {rep_i, rep_j}:
                return pr
        raise KeyError((rep_i, rep_j))

    @property
    def unexpected_refutations(self) -> list[PairResult]:
        return [pr for pr in self.pairwise if pr.unexpected]

    @property
    def passed(self) -> bool:
        return not self.unexpected_refutations

    def to_dict(self) -> dict:
        expect = {r.rep_id: r.expectation for r in REPRESENTATIONS}
        return {
            "params": {"a": self.params.a, "b": self.params.b},
            "tolerance": self.tolerance,
            "reference_value": self.reference_value,
            "entries": [
                {
                    "rep_id": e.rep_id,
                    "value": e.value,
                    "status": e.status.value,
                    "error_estimate": e.error_estimate,
                    "applicability": e.applicability,
                    "expectation": expect[e.rep_id],
                    "conjectural": e.conjectural,
                    "detail": e.detail,
                    "domain": list(e.domain) if e.domain is not None else None,
                }
                for e in self.entries
            ],
            "pairwise": [
                {
                    "rep_i": pr.rep_i,
                    "rep_j": pr.rep_j,
                    "delta": pr.delta,
                    "verdict": pr.verdict.value,
                    "expectation": pr.expectation,
                    "conjectural": pr.conjectural,
                }
                for pr in self.pairwise
            ],
            "passed": self.passed,
        }


def evaluate_all(
    p: Params,
    tolerance: float = DEFAULT_TOLERANCE,
    quad_tol: ToleranceSpec = DEFAULT_TOL,
) -> IdentityReport:
    """Evaluate every representation that applies at ``p`` and compare all pairs.

    Entries follow registry order; pairs follow ``itertools.combinations``
    over the entries.  Failures become statuses, never exceptions.
    """
    if not tolerance > 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    reps = applicable(p)
    entries = tuple(r.evaluate(p, quad_tol) for r in reps)
    pairs = []
    for (r1, v1), (r2, v2) in itertools.combinations(zip(reps, entries), 2):
        delta, verdict = compare(v1, v2, tolerance)
        pairs.append(
            PairResult(
                r1.rep_id,
                r2.rep_id,
                delta,
                verdict,
                _pair_expectation(r1.expectation, r2.expectation),
                r1.conjectural or r2.conjectural,
            )
        )
    ref = entries[0]
    return IdentityReport(p, entries, tuple(pairs), tolerance, ref.value)


@dataclass(frozen=True)
class GrCheck:
    reference: float
    arias: float
    gr_claimed: float
    arias_delta: float
    gap: float
    tol_confirm: float
    tol_refute: float

    @property
    def arias_confirmed(self) -> bool:
        return self.arias_delta <= self.tol_confirm

    @property
    def gr_refuted(self) -> bool:
        return self.gap >= self.tol_refute

    @property
    def passed(self) -> bool:
        return self.arias_confirmed and self.gr_refuted

    def to_dict(self) -> dict:
        return {
            "reference_value": self.reference,
            "arias_value": self.arias,
            "gr_claimed_value": self.gr_claimed,
            "arias_delta": self.arias_delta,
            "gap": self.gap,
            "tol_confirm": self.tol_confirm,
            "tol_refute": self.tol_refute,
            "arias_confirmed": self.arias_confirmed,
            "gr_refuted": self.gr_refuted,
            "passed": self.passed,
        }


def gr_check(
    tol_confirm: float = DEFAULT_TOLERANCE,
    tol_refute: float = 1e-3,
    quad_tol: ToleranceSpec = DEFAULT_TOL,
) -> GrCheck:
    """Compare the closed form and the tabulated value with ``f(3/2, sqrt 3)``."""
    ref = family.f_direct(Params(1.5, SQRT3), quad_tol)
    if not ref.converged:
        raise ArithmeticError("reference quadrature for f(3/2, sqrt 3) did not converge")
    arias = family.arias_value()
    gr = family.gr_claimed_value()
    return GrCheck(
        reference=ref.value,
        arias=arias,
        gr_claimed=gr,
        arias_delta=abs(arias - ref.value),
        gap=abs(gr - ref.value),
        tol_confirm=tol_confirm,
        tol_refute=tol_refute,
    )


def audit_grid(
    a_list: Iterable[float],
    b_list: Iterable[float],
    tolerance: float = DEFAULT_TOLERANCE,
    quad_tol: ToleranceSpec = DEFAULT_TOL,
) -> list[IdentityReport]:
    """:func:`evaluate_all` over the Cartesian grid, ``a`` varying slowest."""
    b_list = list(b_list)
    params = [Params(a, b) for a in a_list for b in b_list]
    return [evaluate_all(p, tolerance, quad_tol) for p in params]

