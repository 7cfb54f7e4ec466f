"""Elements of the Kauffman bracket skein module of the solid torus.

An element is a finite sum ``sum_k p_k z^k`` over the normalized basis, where
``z^k`` (k >= 1) is k parallel copies of the core and ``z^0`` is a single
contractible loop, i.e. ``delta`` times the empty diagram.  Products follow

    z^0 z^j = delta z^j,      z^i z^j = z^{i+j}  (i, j >= 1).
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Callable, Mapping, Union

from .poly import (
    LaurentPolynomial,
    VariableMismatchError,
    ZeroPolynomialError,
    delta,
)

__all__ = ["SkeinElement", "skein_mul", "geometric_degree", "substitute_basis", "embed_to_s3"]

Coefficient = Union[LaurentPolynomial, int]


class SkeinElement:
    __slots__ = ("_terms", "_variable")

    def __init__(self, terms: Mapping[int, Coefficient] = None, variable: str = "A"):
        acc: dict[int, LaurentPolynomial] = {}
        for k, p in (terms or {}).items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"winding index must be a non-negative integer, got {k!r}")
            if isinstance(p, int):
                p = LaurentPolynomial.constant(p, variable)
            if p.variable != variable:
                raise VariableMismatchError(f"coefficient in {p.variable}, element over {variable}")
            acc[k] = acc[k] + p if k in acc else p
        self._terms = {k: p for k, p in sorted(acc.items()) if p}
        self._variable = variable

    @classmethod
    def z(cls, k: int, coefficient: Coefficient = 1, variable: str = "A") -> "SkeinElement":
        return cls({k: coefficient}, variable)

    @classmethod
    def zero(cls, variable: str = "A") -> "SkeinElement":
        return cls({}, variable)

    @property
    def variable(self) -> str:
        return self._variable

    @property
    def terms(self) -> Mapping[int, LaurentPolynomial]:
        return MappingProxyType(self._terms)

    def coefficient(self, k: int) -> LaurentPolynomial:
        return self._terms.get(k, LaurentPolynomial.zero(self._variable))

    def support(self) -> list[int]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def geometric_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("geometric degree of the zero element is undefined")
        return max(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "SkeinElement") -> None:
        if other._variable != self._variable:
            raise VariableMismatchError(
                f"cannot combine skein elements over {self._variable} and {other._variable}"
            )

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for k, p in other._terms.items():
            acc[k] = acc[k] + p if k in acc else p
        return SkeinElement(acc, self._variable)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement({k: -p for k, p in self._terms.items()}, self._variable)

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "SkeinElement":
        return SkeinElement({k: p * c for k, p in self._terms.items()}, self._variable)

    def __mul__(self, other):
        if isinstance(other, (LaurentPolynomial, int)):
            return self.scale(other)
        if not isinstance(other, SkeinElement):
            return NotImplemented
        self._check(other)
        d = delta(self._variable)
        acc: dict[int, LaurentPolynomial] = {}
        for i, p in self._terms.items():
            for j, q in other._terms.items():
                c = p * q
                if i == 0 or j == 0:
                    c = c * d
                acc[i + j] = acc[i + j] + c if i + j in acc else c
        return SkeinElement(acc, self._variable)

    def __rmul__(self, other):
        if isinstance(other, (LaurentPolynomial, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._variable == other._variable and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._variable, tuple(self._terms.items())))

    # -- coefficient maps ---------------------------------------------------

    def map_coefficients(self, f: Callable[[LaurentPolynomial], LaurentPolynomial]) -> "SkeinElement":
        mapped = {k: f(p) for k, p in self._terms.items()}
        variable = next(iter(mapped.values())).variable if mapped else self._variable
        return SkeinElement(mapped, variable)

    def to_jones_variable(self) -> "SkeinElement":
        if not self._terms:
            return SkeinElement.zero("u")
        return self.map_coefficients(LaurentPolynomial.to_jones_variable)

    def mirror(self) -> "SkeinElement":
        return self.map_coefficients(LaurentPolynomial.mirror)

    def substitute_basis(self, f: Mapping[int, LaurentPolynomial] | Callable[[int], LaurentPolynomial]) -> LaurentPolynomial:
        """Evaluate ``sum_k p_k f(k)``.

        Coefficients in ``A`` are rewritten in ``u`` when the images are in ``u``.
        """
        lookup = f.__getitem__ if isinstance(f, Mapping) else f
        images = {}
        for k in self._terms:
            try:
                images[k] = lookup(k)
            except KeyError:
                raise KeyError(f"no image given for z^{k}") from None
            if isinstance(images[k], int):
                images[k] = LaurentPolynomial.constant(images[k], self._variable)
        target = {img.variable for img in images.values()}
        if len(target) > 1:
            raise VariableMismatchError(f"basis images use several variables: {sorted(target)}")
        var = target.pop() if target else self._variable
        total = LaurentPolynomial.zero(var)
        for k, p in self._terms.items():
            if p.variable != var:
                if p.variable == "A" and var == "u":
                    p = p.to_jones_variable()
                else:
                    raise VariableMismatchError(f"cannot convert {p.variable} coefficients to {var}")
            total = total + p * images[k]
        return total

    def embed_to_s3(self) -> LaurentPolynomial:
        """Read the element in the 3-sphere: ``z^0 -> 1``, ``z^k -> delta^(k-1)``."""
        if not self._terms:
            raise ZeroPolynomialError("cannot embed the zero element")
        d = delta(self._variable)
        return self.substitute_basis(lambda k: d ** (k - 1) if k else LaurentPolynomial.one(self._variable))

    # -- text and JSON ------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (k, p) in enumerate(self._terms.items()):
            basis = f"z^{k}"
            if p.is_monomial():
                (e, c), = p.terms.items()
                neg = c < 0
                mono = -p if neg else p
                body = basis if mono == 1 else f"{mono.to_text()}·{basis}"
            else:
                neg = False
                body = f"({p.to_text()})·{basis}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"SkeinElement({self.to_text()!r}, variable={self._variable!r})"

    def to_json(self) -> dict:
        """``{"k": polynomial-json}``; each coefficient carries its own variable tag."""
        return {str(k): p.to_json() for k, p in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping, variable: str = "A") -> "SkeinElement":
        terms = {int(k): LaurentPolynomial.from_json(v) for k, v in data.items()}
        if terms:
            variable = next(iter(terms.values())).variable
        return cls(terms, variable)


def skein_mul(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    return x * y


def geometric_degree(x: SkeinElement) -> int:
    return x.geometric_degree()


def substitute_basis(x: SkeinElement, f) -> LaurentPolynomial:
    return x.substitute_basis(f)


def embed_to_s3(x: SkeinElement) -> LaurentPolynomial:
    return x.embed_to_s3()
