"""Satellite knots ``Sat(P, C)`` with a lasso or annular-braid pattern.

The bracket of a satellite is the pattern's skein element with every ``z^k``
replaced by the bracket of the 0-framed ``k``-cable of the companion, scaled by
a framing factor.  Its Jones polynomial is obtained either by correcting that
bracket with the satellite writhe, or directly from the pattern's solid-torus
Jones polynomial with ``z^k`` replaced by the ``k``-parallel Jones polynomial of
the companion.  Both routes are implemented so they can be compared.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .alexander import alexander_closure, satellite_alexander_from_parts
from .braid import (
    BraidWord,
    NotAKnotError,
    bracket_closure,
    framed_cable,
    jones_closure,
    parallel_jones,
)
from .lasso import Lasso, bracket as lasso_bracket, degree, normalize, writhe as lasso_writhe
from .poly import LaurentPolynomial, delta, framing_factor
from .skein import SkeinElement

log = logging.getLogger(__name__)

__all__ = [
    "AnnularPattern",
    "SatelliteSpec",
    "RouteMismatchError",
    "pattern_bracket",
    "pattern_jones_st",
    "pattern_writhe",
    "pattern_winding",
    "satellite_bracket",
    "satellite_writhe",
    "satellite_jones",
    "satellite_jones_via_bracket",
    "satellite_alexander",
    "cable_writhe",
    "thm1_condition",
    "thm2_condition",
    "distinguish",
]


class RouteMismatchError(AssertionError):
    pass


@dataclass(frozen=True)
class AnnularPattern:
    """Closure of a braid inside the solid torus.

    Closure arcs of strands ``axis .. n-1`` (0-based) go around the core, so
    the pattern winds ``n - axis`` times.  With ``axis = n - 1`` only the
    outermost arc encircles the core, which ties the braid's knot into a core
    curve.
    """

    braid: BraidWord
    axis: int = 0

    def __post_init__(self):
        if not 0 <= self.axis < self.braid.strands:
            raise ValueError(f"axis {self.axis} out of range for {self.braid.strands} strands")

    def __str__(self) -> str:
        return f"annular({self.braid})" if self.axis == 0 else f"annular({self.braid}; axis={self.axis})"


Pattern = Union[Lasso, AnnularPattern]


def pattern_bracket(p: Pattern) -> SkeinElement:
    if isinstance(p, Lasso):
        return lasso_bracket(p)
    return bracket_closure(p.braid, "annulus", axis=p.axis)


def pattern_writhe(p: Pattern) -> int:
    if isinstance(p, Lasso):
        return lasso_writhe(p)
    return p.braid.exponent_sum()


def pattern_winding(p: Pattern) -> int:
    """Number of times the pattern generates the first homology of the solid torus."""
    if isinstance(p, Lasso):
        norm = normalize(p)
        return 0 if norm.twists == (0,) else degree(norm)
    if not p.braid.is_knot():
        raise NotAKnotError(f"pattern {p} is not a knot")
    return p.braid.strands - p.axis


def pattern_jones_st(p: Pattern) -> SkeinElement:
    return pattern_bracket(p).scale(framing_factor(pattern_writhe(p))).to_jones_variable()


@dataclass(frozen=True)
class SatelliteSpec:
    pattern: Pattern
    companion: BraidWord
    companion_name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.companion.is_knot():
            raise NotAKnotError(f"companion {self.companion} is not a knot")

    def __str__(self) -> str:
        return f"Sat({self.pattern},{self.companion_name or self.companion})"


@lru_cache(maxsize=256)
def _cable_bracket(companion: BraidWord, k: int) -> LaurentPolynomial:
    if k == 0:
        return LaurentPolynomial.one()
    return bracket_closure(framed_cable(companion, k), "sphere")


def satellite_bracket(s: SatelliteSpec) -> LaurentPolynomial:
    """Unknot-normalized bracket of the composite diagram of the satellite."""
    x = pattern_bracket(s.pattern)
    M = x.geometric_degree()
    correction = framing_factor(-s.companion.exponent_sum())
    return x.substitute_basis(lambda k: correction ** (M - k) * _cable_bracket(s.companion, k))


def satellite_writhe(s: SatelliteSpec) -> int:
    M = pattern_bracket(s.pattern).geometric_degree()
    return pattern_writhe(s.pattern) + M * s.companion.exponent_sum()


def cable_writhe(k: int, n: int, w: int) -> int:
    """Writhe of a ``k``-parallel of a diagram with writhe ``w`` plus ``n`` half-twists."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return k * k * w + n * k * (k - 1) // 2


def satellite_jones_via_bracket(s: SatelliteSpec) -> LaurentPolynomial:
    return (framing_factor(satellite_writhe(s)) * satellite_bracket(s)).to_jones_variable()


def satellite_jones(s: SatelliteSpec, verify: bool = False) -> LaurentPolynomial:
    """Jones polynomial of the satellite, in ``u = t^{1/2}``.

    With ``verify`` the bracket route is evaluated too and any disagreement
    raises :class:`RouteMismatchError`.
    """
    j = pattern_jones_st(s.pattern).substitute_basis(lambda k: parallel_jones(s.companion, k))
    if verify:
        other = satellite_jones_via_bracket(s)
        if other != j:
            raise RouteMismatchError(f"{s}: substitution route {j} != bracket route {other}")
        log.debug("both Jones routes agree for %s", s)
    return j


def satellite_alexander(s: SatelliteSpec) -> LaurentPolynomial:
    companion = alexander_closure(s.companion)
    winding = pattern_winding(s.pattern)
    if isinstance(s.pattern, Lasso):
        return satellite_alexander_from_parts(companion, winding)
    return satellite_alexander_from_parts(companion, winding, alexander_closure(s.pattern.braid))


# -- decision procedures ----------------------------------------------------

@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    alexander_nontrivial: bool
    parallel_differs: bool
    alexander: LaurentPolynomial
    parallel: LaurentPolynomial
    reference: LaurentPolynomial

    @property
    def witness(self) -> str:
        failed = []
        if not self.alexander_nontrivial:
            failed.append("alexander polynomial is 1")
        if not self.parallel_differs:
            failed.append("parallel Jones polynomial equals the unknot reference")
        return "; ".join(failed) if failed else "both clauses hold"

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "alexander_nontrivial": self.alexander_nontrivial,
            "parallel_differs": self.parallel_differs,
            "alexander": self.alexander.to_text(),
            "parallel": self.parallel.to_text(),
            "reference": self.reference.to_text(),
            "witness": self.witness,
        }


def _condition(C: BraidWord, parallel: LaurentPolynomial, reference: LaurentPolynomial) -> ConditionResult:
    alex = alexander_closure(C)
    a_ok = alex != 1
    j_ok = parallel != reference
    return ConditionResult(a_ok and j_ok, a_ok, j_ok, alex, parallel, reference)


def thm1_condition(C: BraidWord) -> ConditionResult:
    """``Δ_C != 1`` and ``J(C;2) != J(U;2)``: the ``L(r)`` satellites of C are pairwise distinct."""
    return _condition(C, parallel_jones(C, 2), delta("u"))


def thm2_condition(C: BraidWord) -> ConditionResult:
    """``Δ_C != 1`` and ``J(C;3) != J(C) J(U;3)``: the ``L(1,r)`` satellites are pairwise distinct."""
    return _condition(C, parallel_jones(C, 3), jones_closure(C) * delta("u") ** 2)


@dataclass(frozen=True)
class SatelliteReport:
    pattern: str
    companion: str
    alexander: LaurentPolynomial
    jones: LaurentPolynomial
    writhe: int
    geometric_degree: int

    @classmethod
    def of(cls, s: SatelliteSpec, verify: bool = False) -> "SatelliteReport":
        return cls(
            str(s.pattern),
            s.companion_name or str(s.companion),
            satellite_alexander(s),
            satellite_jones(s, verify=verify),
            satellite_writhe(s),
            pattern_bracket(s.pattern).geometric_degree(),
        )

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern,
            "companion": self.companion,
            "alexander": self.alexander.to_text(),
            "jones": self.jones.to_text(),
            "writhe": self.writhe,
            "geometric_degree": self.geometric_degree,
        }


DISTINGUISHED_BY_ALEXANDER = "distinguished-by-Alexander"
DISTINGUISHED_BY_JONES = "distinguished-by-Jones"
NOT_DISTINGUISHED = "not-distinguished"


@dataclass(frozen=True)
class DistinctionReport:
    first: SatelliteReport
    second: SatelliteReport
    verdict: str

    def to_json(self) -> dict:
        return {"satellites": [self.first.to_json(), self.second.to_json()], "verdict": self.verdict}


def distinguish(p1: Lasso, p2: Lasso, C: BraidWord, companion_name: str | None = None) -> DistinctionReport:
    r1 = SatelliteReport.of(SatelliteSpec(p1, C, companion_name))
    r2 = SatelliteReport.of(SatelliteSpec(p2, C, companion_name))
    if r1.alexander != r2.alexander:
        verdict = DISTINGUISHED_BY_ALEXANDER
    elif r1.jones != r2.jones:
        verdict = DISTINGUISHED_BY_JONES
    else:
        verdict = NOT_DISTINGUISHED
    return DistinctionReport(r1, r2, verdict)
