"""Conway-normalized Alexander polynomials of braid closures and their compositions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, NotAKnotError
from .poly import LaurentPolynomial

__all__ = [
    "AlexanderSpecTerm",
    "AlexanderNormalizationError",
    "reduced_burau",
    "alexander_closure",
    "satellite_alexander_from_parts",
    "connected_sum_alexander",
    "canonical_lasso",
    "parse_spec",
    "realize_spec",
    "Realization",
]

Matrix = list[list[LaurentPolynomial]]


class AlexanderNormalizationError(ArithmeticError):
    pass


def _t(e: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e, c, "t")


def _identity(n: int) -> Matrix:
    one, zero = _t(0), LaurentPolynomial.zero("t")
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _generator_matrix(n: int, g: int) -> Matrix:
    """Reduced Burau image of ``sigma_i^{±1}`` on ``n`` strands, size ``n - 1``."""
    size = n - 1
    m = _identity(size)
    i = abs(g) - 1  # row/column of the diagonal entry
    if g > 0:
        m[i][i] = _t(1, -1)
        if i > 0:
            m[i - 1][i] = _t(1)
        if i < size - 1:
            m[i + 1][i] = _t(0)
    else:
        m[i][i] = _t(-1, -1)
        if i > 0:
            m[i - 1][i] = _t(0)
        if i < size - 1:
            m[i + 1][i] = _t(-1)
    return m


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    n, k, p = len(x), len(y), len(y[0]) if y else 0
    zero = LaurentPolynomial.zero("t")
    out = []
    for r in range(n):
        row = []
        for c in range(p):
            acc = zero
            for j in range(k):
                if x[r][j] and y[j][c]:
                    acc = acc + x[r][j] * y[j][c]
            row.append(acc)
        out.append(row)
    return out


def reduced_burau(beta: BraidWord) -> Matrix:
    """Product of the per-letter reduced Burau matrices, ``(n-1) x (n-1)``."""
    if beta.strands < 2:
        raise ValueError("reduced Burau representation needs at least 2 strands")
    m = _identity(beta.strands - 1)
    for g in beta.letters:
        m = _matmul(m, _generator_matrix(beta.strands, g))
    return m


def determinant(matrix: Matrix) -> LaurentPolynomial:
    """Fraction-free (Bareiss) determinant; every division is exact."""
    n = len(matrix)
    if n == 0:
        return _t(0)
    a = [row[:] for row in matrix]
    sign = 1
    prev = _t(0)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return LaurentPolynomial.zero("t")
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_divide(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def conway_normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by the unit ``±t^j`` that makes ``p`` symmetric with ``p(1) = 1``."""
    if p.is_zero():
        raise AlexanderNormalizationError("zero polynomial has no normalization")
    span = p.degree() + p.min_degree()
    if span % 2:
        raise AlexanderNormalizationError(f"{p} has odd span; not a knot polynomial")
    q = p.shift(-span // 2)
    value = q.evaluate(1)
    if value not in (1, -1):
        raise AlexanderNormalizationError(f"{p} evaluates to {value} at t = 1")
    q = q.scale(int(value))
    if not q.is_symmetric():
        raise AlexanderNormalizationError(f"{q} is not symmetric")
    return q


def alexander_closure(beta: BraidWord) -> LaurentPolynomial:
    """Conway-normalized Alexander polynomial of a knot given as a braid closure."""
    if not beta.is_knot():
        raise NotAKnotError(f"closure of {beta} has {beta.components()} components")
    n = beta.strands
    if n == 1:
        return _t(0)
    b = reduced_burau(beta)
    one = _t(0)
    m = [[(one if i == j else LaurentPolynomial.zero("t")) - b[i][j] for j in range(n - 1)]
         for i in range(n - 1)]
    # det(I - B) = Δ(t) (1 - t^n) / (1 - t) up to a unit
    raw = determinant(m) * (one - _t(1))
    raw = raw.exact_divide(one - _t(n))
    return conway_normalize(raw)


def satellite_alexander_from_parts(companion_alexander: LaurentPolynomial, winding: int,
                                   pattern_alexander: LaurentPolynomial | None = None) -> LaurentPolynomial:
    """``Δ_P(t) Δ_C(t^n)`` for a pattern of winding number ``n``."""
    result = companion_alexander.substitute_power(winding)
    if pattern_alexander is not None:
        result = result * pattern_alexander
    return result


def connected_sum_alexander(parts: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    result = _t(0)
    for p in parts:
        result = result * p
    return result


# -- realization by request ---------------------------------------------------

@dataclass(frozen=True)
class AlexanderSpecTerm:
    knot: str
    power: int = 1

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be >= 0")

    def __str__(self) -> str:
        return self.knot if self.power == 1 else f"{self.knot}@{self.power}"


_SPEC_FACTOR = re.compile(r"\s*([A-Za-z0-9_]+)\s*(?:\^\s*(\d+))?\s*(?:@\s*(\d+))?\s*(?:\^\s*(\d+))?\s*$")


def parse_spec(text: str) -> list[AlexanderSpecTerm]:
    """Parse ``"5_1^2 * 8_19@3 * 10_161@0"`` into one term per factor."""
    terms: list[AlexanderSpecTerm] = []
    if not text.strip():
        return terms
    pos = 0
    for chunk in text.split("*"):
        m = _SPEC_FACTOR.match(chunk)
        if not m:
            raise ValueError(f"cannot parse factor {chunk.strip()!r} at position {pos}")
        name, mult1, power, mult2 = m.groups()
        if mult1 and mult2:
            raise ValueError(f"multiplicity given twice in {chunk.strip()!r}")
        mult = int(mult1 or mult2 or 1)
        terms.extend([AlexanderSpecTerm(name, int(power) if power else 1)] * mult)
        pos += len(chunk) + 1
    return terms


def canonical_lasso(d: int):
    """A lasso of degree ``d``: L(2), L(1,2), L(1), then L(1, ..., 1)."""
    from .lasso import Lasso

    if d < 0:
        raise ValueError("degree must be >= 0")
    if d == 0:
        return Lasso.of(2)
    if d == 1:
        return Lasso.of(1, 2)
    return Lasso((1,) * (d - 1))


@dataclass(frozen=True)
class Realization:
    pieces: tuple[str, ...]
    target: LaurentPolynomial
    recomputed: LaurentPolynomial

    @property
    def recipe(self) -> str:
        return " # ".join(self.pieces) if self.pieces else "unknot"

    @property
    def verified(self) -> bool:
        return self.target == self.recomputed

    def to_json(self) -> dict:
        return {
            "recipe": self.recipe,
            "pieces": list(self.pieces),
            "target": self.target.to_text(),
            "recomputed": self.recomputed.to_text(),
            "verified": self.verified,
        }


def realize_spec(spec: Sequence[AlexanderSpecTerm], alexander_of, lassos=(), proper_satellites: bool = False) -> Realization:
    """Build a connected sum of lasso satellites whose Alexander polynomial is the product
    of ``Δ_knot(t^power)`` over the request.

    ``alexander_of(name)`` returns a knot's Alexander polynomial.  ``lassos`` may
    supply replacement patterns; each is used for the terms whose power equals
    its degree.
    """
    from .lasso import degree

    overrides = {}
    for L in lassos:
        overrides.setdefault(degree(L), L)
    pieces = []
    target_parts = []
    recomputed_parts = []
    for term in spec:
        delta_k = alexander_of(term.knot)
        target_parts.append(delta_k.substitute_power(term.power))
        if term.power == 1 and not proper_satellites and 1 not in overrides:
            pieces.append(term.knot)
            recomputed_parts.append(delta_k)
            continue
        L = overrides.get(term.power, canonical_lasso(term.power))
        pieces.append(f"Sat({L},{term.knot})")
        recomputed_parts.append(satellite_alexander_from_parts(delta_k, degree(L)))
    return Realization(
        tuple(pieces),
        connected_sum_alexander(target_parts),
        connected_sum_alexander(recomputed_parts),
    )
