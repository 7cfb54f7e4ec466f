"""Lassos: twisted sums of nested unknots in the solid torus.

``L(r_1, ..., r_m)`` joins ``m + 1`` nested cores by ``m`` twisted bands.
Only the twist counts matter here; a lasso is a tuple of integers.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .poly import LaurentPolynomial, framing_factor
from .skein import SkeinElement

__all__ = [
    "Lasso",
    "LassoParseError",
    "degree",
    "writhe",
    "normalize",
    "reverse",
    "bracket",
    "closed_form_simple",
    "jones_st",
    "eq1_simple",
    "formula_l1r",
]

_A = "A"


class LassoParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"{reason} at position {position} in {text!r}")


@dataclass(frozen=True)
class Lasso:
    twists: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(r) for r in self.twists))

    @classmethod
    def of(cls, *twists: int) -> "Lasso":
        return cls(tuple(twists))

    _SYNTAX = re.compile(r"\s*L\s*\((.*)\)\s*$", re.S)

    @classmethod
    def parse(cls, text: str, warn: bool = True) -> "Lasso":
        """Parse ``L(r1, r2, ...)``; ``L()`` and ``L(∅)`` are the bare core.

        Zeros are accepted and normalized away, with a warning.
        """
        m = cls._SYNTAX.match(text)
        if not m:
            if re.match(r"\s*L\s*\(", text) and ")" not in text:
                raise LassoParseError(text, len(text), "missing ')'")
            pos = len(text) - len(text.lstrip())
            raise LassoParseError(text, pos, "expected 'L(...)'")
        body = m.group(1)
        offset = m.start(1)
        if body.strip() in ("", "∅"):
            return cls(())
        twists = []
        pos = offset
        for field in body.split(","):
            tok = field.strip().replace("−", "-")
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise LassoParseError(text, pos + len(field) - len(field.lstrip()), f"bad twist {tok!r}")
            twists.append(int(tok))
            pos += len(field) + 1
        lasso = cls(tuple(twists))
        if not lasso.is_normalized():
            norm = lasso.normalize()
            if warn:
                warnings.warn(f"{lasso} contains zero twists; normalized to {norm}", stacklevel=2)
            return norm
        return lasso

    def __str__(self) -> str:
        return "L(" + ",".join(str(r) for r in self.twists) + ")"

    @property
    def m(self) -> int:
        return len(self.twists)

    def is_normalized(self) -> bool:
        return 0 not in self.twists or self.twists == (0,)

    def degree(self) -> int:
        return degree(self)

    def writhe(self) -> int:
        return writhe(self)

    def normalize(self) -> "Lasso":
        return normalize(self)

    def reverse(self) -> "Lasso":
        return reverse(self)

    def bracket(self) -> SkeinElement:
        return bracket(self)

    def jones_st(self) -> SkeinElement:
        return jones_st(self)


def _twists(L) -> tuple[int, ...]:
    return L.twists if isinstance(L, Lasso) else tuple(L)


def degree(L: Lasso) -> int:
    """Winding number of the lasso around the core."""
    twists = _twists(L)
    if 0 in twists:
        raise ValueError(f"degree needs a normalized lasso, got {L}")
    prev = 1
    total = 1
    for r in twists:
        prev = (-1) ** ((1 + r) % 2) if prev == 1 else 1
        total += prev
    return total


def writhe(L: Lasso) -> int:
    return -sum(_twists(L))


# Zero-elimination rules.  Each takes the twist tuple and the index of a zero
# and returns the simplified tuple, or None when the rule does not apply.

def _leading(tw: tuple[int, ...], i: int):
    if i == 0 and len(tw) >= 2 and tw[0] == 0:
        return tw[2:]
    return None


def _interior(tw: tuple[int, ...], i: int):
    if 0 < i < len(tw) - 1 and tw[i] == 0:
        return tw[: i - 1] + (tw[i - 1] + tw[i + 1],) + tw[i + 2:]
    return None


def _trailing(tw: tuple[int, ...], i: int):
    if i == len(tw) - 1 and len(tw) >= 2 and tw[i] == 0:
        return tw[:-2]
    return None


RULES = {"leading": _leading, "interior": _interior, "trailing": _trailing}


def simplify_once(twists: tuple[int, ...], rule: str, index: int):
    """Apply one named zero-elimination rule at ``index``; None if inapplicable."""
    return RULES[rule](tuple(twists), index)


def normalize(L: Lasso) -> Lasso:
    # L(0) is terminal: its bracket z^0 differs from that of L() (z^1).
    tw = _twists(L)
    while 0 in tw and tw != (0,):
        if tw[0] == 0 and len(tw) >= 2:
            tw = _leading(tw, 0)
            continue
        interior = [i for i in range(1, len(tw) - 1) if tw[i] == 0]
        if interior:
            tw = _interior(tw, interior[0])
            continue
        tw = _trailing(tw, len(tw) - 1)
    return Lasso(tw)


def reverse(L: Lasso) -> Lasso:
    return Lasso(_twists(L)[::-1])


_Z1 = SkeinElement.z(1)


@lru_cache(maxsize=None)
def _bracket(tw: tuple[int, ...]) -> SkeinElement:
    if not tw:
        return SkeinElement.z(1)
    if tw == (0,):
        return SkeinElement.z(0)
    r1 = tw[0]
    if r1 == 0:
        return _bracket(tw[2:]).scale(framing_factor(tw[1]))
    A = LaurentPolynomial.monomial(1, 1, _A)
    Ainv = LaurentPolynomial.monomial(-1, 1, _A)
    step = 1 if r1 > 0 else -1
    near = A if r1 > 0 else Ainv
    far = Ainv if r1 > 0 else A
    smaller = (r1 - step,) + tw[1:]
    rest = _bracket(tw[1:])
    return _bracket(smaller).scale(near) + (_Z1 * rest).scale(far * framing_factor(r1 - step))


def bracket(L: Lasso) -> SkeinElement:
    """Skein-module bracket of the lasso's normal diagram (raw zeros allowed)."""
    return _bracket(_twists(L))


def closed_form_simple(r: int) -> SkeinElement:
    """Bracket of ``L(r)`` summed in closed form; ``r < 0`` by ``A -> A^{-1}``."""
    if r == 0:
        raise ValueError("closed form is stated for r != 0")
    n = abs(r)
    total = LaurentPolynomial({4 * i - 2: (-1) ** i for i in range(1, n + 1)}, _A)
    elem = SkeinElement({0: LaurentPolynomial.monomial(n, 1, _A), 2: framing_factor(n) * total})
    return elem if r > 0 else elem.mirror()


def jones_st(L: Lasso) -> SkeinElement:
    """Writhe-normalized bracket, coefficients in ``u = t^{1/2}``."""
    return bracket(L).scale(framing_factor(writhe(L))).to_jones_variable()


def _t(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(2 * e, c, "u")


def _neg_t_pow(r: int) -> LaurentPolynomial:
    # (-t)^{-r}
    return _t(-r, (-1) ** (r % 2))


def eq1_simple(r: int) -> SkeinElement:
    """J_ST(L(r)) from its closed expression; negative ``r`` via ``t -> t^{-1}``."""
    if r == 0:
        raise ValueError("defined for r != 0")
    if r < 0:
        return eq1_simple(-r).mirror()
    one = LaurentPolynomial.one("u")
    w = _neg_t_pow(r)
    half = LaurentPolynomial.monomial(1, 1, "u")
    frac = (one - w).exact_divide(_t(1) + 1)
    return SkeinElement({0: w, 2: -(half * frac)}, "u")


def formula_l1r(r: int) -> SkeinElement:
    """J_ST(L(1, r)) from its closed expression, ``r > 0``.

    Mixed-sign lassos have no closed expression here; use :func:`jones_st`.
    """
    if r == 0:
        raise ValueError("defined for r != 0")
    if r < 0:
        raise ValueError("L(1, r) with r < 0 mixes twist signs; no closed form, use jones_st")
    one = LaurentPolynomial.one("u")
    w = _neg_t_pow(r)
    c1 = -_t(-1) + w * (_t(-1) + 1)
    c3 = (one - w).exact_divide(_t(1) + 1)
    return SkeinElement({1: c1, 3: c3}, "u")
