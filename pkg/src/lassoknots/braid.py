"""Braid words and the Kauffman bracket of their closures.

Letters are signed generator indices: ``+i`` is ``sigma_i`` and ``-i`` its
inverse, ``1 <= i < strands``.  A closure is read either in the 3-sphere or in
the annulus around the core of the solid torus.

Two evaluators are provided.  :func:`bracket_closure` runs a transfer over
planar matchings (compiled kernel when available); :func:`state_sum_oracle`
expands every crossing and walks the resulting loops, and is kept as an
independent check.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from ._matching import matching_table, transfer_counts_py
from .poly import LaurentPolynomial, delta, framing_factor
from .skein import SkeinElement

try:
    from ._ctransfer import transfer_counts as _native_transfer
except ImportError:  # pragma: no cover - depends on the build
    _native_transfer = None

if os.environ.get("LASSOKNOTS_PURE_PYTHON"):
    _native_transfer = None

KERNEL = "cython" if _native_transfer is not None else "python"
NATIVE_MAX_LETTERS = 62
ORACLE_MAX_LETTERS = 20

Ambient = Literal["sphere", "annulus"]

__all__ = [
    "KERNEL",
    "BraidWord",
    "BraidParseError",
    "NotAKnotError",
    "bracket_closure",
    "state_sum_oracle",
    "cable",
    "half_twists",
    "framed_cable",
    "jones_closure",
    "parallel_jones",
    "connected_sum",
]


class BraidParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"{reason} at position {position} in {text!r}")


class NotAKnotError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    _SYNTAX = re.compile(r"\s*B\s*(\d+)\s*:(.*)$", re.S)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"B3: 1 -2 1 -2"``."""
        m = cls._SYNTAX.match(text)
        if not m:
            raise BraidParseError(text, 0, "expected 'B<n>: <letters>'")
        n = int(m.group(1))
        if n < 1:
            raise BraidParseError(text, m.start(1), "a braid needs at least one strand")
        letters = []
        for tok in re.finditer(r"\S+", m.group(2)):
            s = tok.group().replace("−", "-")
            if not re.fullmatch(r"[+-]?\d+", s):
                raise BraidParseError(text, m.start(2) + tok.start(), f"bad letter {s!r}")
            g = int(s)
            if g == 0 or abs(g) >= n:
                raise BraidParseError(text, m.start(2) + tok.start(), f"generator {g} out of range")
            letters.append(g)
        return cls(n, tuple(letters))

    def __str__(self) -> str:
        return " ".join([f"B{self.strands}:"] + [str(g) for g in self.letters])

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data) -> "BraidWord":
        return cls(int(data["strands"]), tuple(data["letters"]))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Where each starting position ends up after the braid."""
        pos = list(range(self.strands))
        where = list(range(self.strands))  # where[p] = strand at position p
        for g in self.letters:
            i = abs(g) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        for p, s in enumerate(where):
            pos[s] = p
        return tuple(pos)

    def components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for s in range(self.strands):
            if not seen[s]:
                count += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        return count

    def is_knot(self) -> bool:
        return self.components() == 1

    def rotate(self, k: int = 1) -> "BraidWord":
        """Conjugate by moving the first ``k`` letters to the end."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def stabilize(self, sign: int = 1) -> "BraidWord":
        return BraidWord(self.strands + 1, self.letters + (sign * self.strands,))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def shifted(self, offset: int, strands: int | None = None) -> "BraidWord":
        n = strands if strands is not None else self.strands + offset
        return BraidWord(n, tuple(g + offset if g > 0 else g - offset for g in self.letters))


def _require_knot(beta: BraidWord, what: str) -> None:
    if not beta.is_knot():
        raise NotAKnotError(f"{what}: closure of {beta} has {beta.components()} components")


# -- fast evaluator ---------------------------------------------------------

@lru_cache(maxsize=None)
def _native_tables(n: int):
    table = matching_table(n)
    cols = max(n - 1, 1)
    nxt = np.zeros((len(table), cols), dtype=np.intc)
    cls = np.zeros((len(table), cols), dtype=np.uint8)
    if n > 1:
        nxt[:, :] = np.array(table.next_state, dtype=np.intc)
        cls[:, :] = np.array(table.closes, dtype=np.uint8)
    return table, nxt, cls


def _state_counts(beta: BraidWord, kernel: str | None):
    """Iterate ``(matching, h, l, count)`` over non-zero transfer counts."""
    kernel = kernel or KERNEL
    if kernel not in ("cython", "python"):
        raise ValueError(f"unknown kernel {kernel!r}")
    letters = beta.letters
    if kernel == "cython" and _native_transfer is None:
        raise RuntimeError("compiled transfer kernel is not available")
    if kernel == "cython" and len(letters) <= NATIVE_MAX_LETTERS:
        table, nxt, cls = _native_tables(beta.strands)
        arr = _native_transfer(nxt, cls, np.asarray(letters, dtype=np.intc), len(table))
        ms, hs, ls = np.nonzero(arr)
        vals = arr[ms, hs, ls]
        return table, zip(ms.tolist(), hs.tolist(), ls.tolist(), vals.tolist())
    table = matching_table(beta.strands)
    counts = transfer_counts_py(table, letters)
    return table, ((m, h, l, v) for (m, h, l), v in counts.items())


def _assemble(groups: dict, ambient: str, variable: str = "A"):
    d = delta(variable)
    if ambient == "sphere":
        total = LaurentPolynomial.zero(variable)
        for (_, dpow), terms in groups.items():
            total = total + LaurentPolynomial(terms, variable) * d ** dpow
        return total
    coeffs: dict[int, LaurentPolynomial] = {}
    for (w, dpow), terms in groups.items():
        p = LaurentPolynomial(terms, variable) * d ** dpow
        coeffs[w] = coeffs[w] + p if w in coeffs else p
    return SkeinElement(coeffs, variable)


def bracket_closure(beta: BraidWord, ambient: Ambient = "sphere", axis: int = 0, kernel: str | None = None):
    """Kauffman bracket of the closure of ``beta``.

    ``sphere`` gives the unknot-normalized bracket as a polynomial in ``A``.
    ``annulus`` gives a :class:`SkeinElement`; closure arcs of strands
    ``>= axis`` (0-based) encircle the core.
    """
    if ambient not in ("sphere", "annulus"):
        raise ValueError(f"unknown ambient {ambient!r}")
    table, counts = _state_counts(beta, kernel)
    closure = table.closure(axis)
    c = len(beta.letters)
    groups: dict[tuple[int, int], dict[int, int]] = {}
    for m, h, l, v in counts:
        c0, w = closure[m]
        if ambient == "sphere":
            key = (0, l + c0 + w - 1)
        elif w:
            key = (w, l + c0)
        else:
            key = (0, l + c0 - 1)
        bucket = groups.setdefault(key, {})
        a = 2 * h - c
        bucket[a] = bucket.get(a, 0) + int(v)
    return _assemble(groups, ambient)


# -- independent oracle -----------------------------------------------------

def _oracle_loops(n: int, letters: tuple[int, ...], state: tuple[int, ...], axis: int):
    """Loops of one smoothing: list of winding numbers, one per loop."""
    c = len(letters)
    if c == 0:
        return [1 if j >= axis else 0 for j in range(n)]
    # node (k, j): position j at level k; every node has exactly two edges
    edges: list[tuple] = []
    incident: dict[tuple[int, int], list[int]] = {}

    def edge(u, v, w=0):
        incident.setdefault(u, []).append(len(edges))
        incident.setdefault(v, []).append(len(edges))
        edges.append((u, v, w))

    for k, g in enumerate(letters):
        i = abs(g) - 1
        for j in range(n):
            if j not in (i, i + 1):
                edge((k, j), (k + 1, j))
        if state[k] == 0:
            edge((k, i), (k + 1, i))
            edge((k, i + 1), (k + 1, i + 1))
        else:
            edge((k, i), (k, i + 1))
            edge((k + 1, i), (k + 1, i + 1))
    for j in range(n):
        # closure arcs run from the top back to the bottom
        edge((c, j), (0, j), 1 if j >= axis else 0)
    used = [False] * len(edges)
    windings = []
    for first in range(len(edges)):
        if used[first]:
            continue
        net = 0
        node = edges[first][0]
        e = first
        while True:
            used[e] = True
            u, v, w = edges[e]
            if node == u:
                net, node = net + w, v
            else:
                net, node = net - w, u
            a, b = incident[node]
            e = b if a == e else a
            if e == first:
                break
        windings.append(net)
    return windings


def state_sum_oracle(beta: BraidWord, ambient: Ambient = "sphere", axis: int = 0,
                     max_letters: int = ORACLE_MAX_LETTERS):
    """Bracket of the closure by explicit expansion of all ``2^c`` smoothings."""
    c = len(beta.letters)
    if c > max_letters:
        raise ValueError(f"state-sum oracle limited to {max_letters} letters, got {c}")
    A = LaurentPolynomial.monomial(1)
    d = delta("A")
    sphere_total = LaurentPolynomial.zero()
    annulus_total: dict[int, LaurentPolynomial] = {}
    for state in itertools.product((0, 1), repeat=c):
        # vertical smoothing of a positive crossing carries A
        a = sum((1 if g > 0 else -1) * (1 if s == 0 else -1) for g, s in zip(beta.letters, state))
        weight = A ** a if a >= 0 else LaurentPolynomial.monomial(a)
        windings = _oracle_loops(beta.strands, beta.letters, state, axis)
        for w in windings:
            assert w in (-1, 0, 1), w
        if ambient == "sphere":
            sphere_total = sphere_total + weight * d ** (len(windings) - 1)
        else:
            wrap = sum(1 for w in windings if w)
            contractible = len(windings) - wrap
            if wrap:
                term, k = weight * d ** contractible, wrap
            else:
                term, k = weight * d ** (contractible - 1), 0
            annulus_total[k] = annulus_total[k] + term if k in annulus_total else term
    if ambient == "sphere":
        return sphere_total
    return SkeinElement(annulus_total)


# -- cabling and framing ----------------------------------------------------

def cable(beta: BraidWord, k: int) -> BraidWord:
    """Blackboard ``k``-parallel: each letter becomes a ``k x k`` crossing block."""
    if k < 1:
        raise ValueError("cable multiplicity must be >= 1")
    letters = []
    for g in beta.letters:
        i = abs(g)
        sign = 1 if g > 0 else -1
        base = (i - 1) * k
        for a in range(k):
            for b in range(k):
                letters.append(sign * (base + k - a + b))
    return BraidWord(beta.strands * k, tuple(letters))


def half_twists(k: int, n: int) -> BraidWord:
    """``Delta_k^n`` on ``k`` strands, ``Delta_k = (s1 ... s_{k-1})(s1 ... s_{k-2}) ... (s1)``."""
    if k < 1:
        raise ValueError("need k >= 1")
    delta_k = [g for top in range(k - 1, 0, -1) for g in range(1, top + 1)]
    if n >= 0:
        letters = delta_k * n
    else:
        letters = [-g for g in reversed(delta_k)] * (-n)
    return BraidWord(k, tuple(letters))


def framed_cable(beta: BraidWord, k: int, group: int = 0) -> BraidWord:
    """0-framed ``k``-cable: blackboard cable plus ``-2 wr`` half-twists on one cable group."""
    cabled = cable(beta, k)
    twist = half_twists(k, -2 * beta.exponent_sum()).shifted(group * k, cabled.strands)
    return cabled + twist


def jones_closure(beta: BraidWord, kernel: str | None = None) -> LaurentPolynomial:
    """Jones polynomial of the closure, in ``u = t^{1/2}``."""
    b = bracket_closure(beta, "sphere", kernel=kernel)
    return (framing_factor(beta.exponent_sum()) * b).to_jones_variable()


@lru_cache(maxsize=256)
def parallel_jones(beta: BraidWord, k: int) -> LaurentPolynomial:
    """Jones polynomial of the 0-framed ``k``-parallel of a knot; ``k = 0`` gives 1."""
    _require_knot(beta, "parallel_jones")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return LaurentPolynomial.one("u")
    return jones_closure(framed_cable(beta, k))


def connected_sum(beta1: BraidWord, beta2: BraidWord) -> BraidWord:
    """Braid whose closure is the connected sum of the two knot closures."""
    _require_knot(beta1, "connected_sum")
    _require_knot(beta2, "connected_sum")
    n = beta1.strands + beta2.strands - 1
    return BraidWord(n, beta1.letters + beta2.shifted(beta1.strands - 1, n).letters)
