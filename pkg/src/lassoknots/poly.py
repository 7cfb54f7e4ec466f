"""Exact Laurent polynomials with integer coefficients in a single tagged variable.

Three variables appear across the package:

``A``
    the Kauffman bracket variable,
``u``
    the square root of the Jones variable (``u = t^{1/2} = A^{-2}``),
``t``
    the Alexander variable.

Values are immutable and canonical: zero coefficients are never stored, so two
equal polynomials always carry identical term maps.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

__all__ = [
    "VARIABLES",
    "PolynomialError",
    "VariableMismatchError",
    "NotDivisibleError",
    "OddExponentError",
    "ZeroPolynomialError",
    "LaurentPolynomial",
    "framing_factor",
    "delta",
]

VARIABLES = ("A", "u", "t")


class PolynomialError(ValueError):
    """Base class for polynomial failures."""


class VariableMismatchError(PolynomialError, TypeError):
    pass


class NotDivisibleError(PolynomialError, ArithmeticError):
    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"({dividend}) is not divisible by ({divisor}); remainder {remainder}")


class OddExponentError(PolynomialError):
    pass


class ZeroPolynomialError(PolynomialError):
    pass


Scalar = int
PolyLike = Union["LaurentPolynomial", int]


class LaurentPolynomial:
    __slots__ = ("_terms", "_variable", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), variable: str = "A"):
        if variable not in VARIABLES:
            raise ValueError(f"unknown variable {variable!r}; expected one of {VARIABLES}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items(), reverse=True) if c}
        self._variable = variable
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int], variable: str) -> "LaurentPolynomial":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items(), reverse=True))
        obj._variable = variable
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, variable: str = "A") -> "LaurentPolynomial":
        return cls({exponent: coefficient}, variable)

    @classmethod
    def constant(cls, c: int, variable: str = "A") -> "LaurentPolynomial":
        return cls({0: c}, variable)

    @classmethod
    def zero(cls, variable: str = "A") -> "LaurentPolynomial":
        return cls._raw({}, variable)

    @classmethod
    def one(cls, variable: str = "A") -> "LaurentPolynomial":
        return cls._raw({0: 1}, variable)

    # -- accessors ----------------------------------------------------------

    @property
    def variable(self) -> str:
        return self._variable

    @property
    def terms(self) -> Mapping[int, int]:
        """Read-only view of ``{exponent: coefficient}``, descending exponents."""
        return MappingProxyType(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return next(iter(self._terms))

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return next(reversed(self._terms))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other._variable != self._variable:
                raise VariableMismatchError(
                    f"cannot combine polynomials in {self._variable} and {other._variable}"
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self._variable)
        return NotImplemented

    def __add__(self, other: PolyLike) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPolynomial._raw(acc, self._variable)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()}, self._variable)

    def __sub__(self, other: PolyLike) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: PolyLike) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in acc.items() if c}, self._variable)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise PolynomialError("only unit monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPolynomial._raw({e * n: c ** (-n)}, self._variable)
        result = LaurentPolynomial.one(self._variable)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``x^k``."""
        return LaurentPolynomial._raw({e + k: c for e, c in self._terms.items()}, self._variable)

    def scale(self, c: int) -> "LaurentPolynomial":
        if c == 0:
            return LaurentPolynomial.zero(self._variable)
        return LaurentPolynomial._raw({e: c * v for e, v in self._terms.items()}, self._variable)

    def exact_divide(self, divisor: PolyLike) -> "LaurentPolynomial":
        """Return ``q`` with ``q * divisor == self``; raise if no such integral ``q`` exists."""
        divisor = self._coerce(divisor)
        if divisor is NotImplemented:
            raise TypeError("divisor must be a LaurentPolynomial or int")
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self._variable)
        var = self._variable
        # Work with ordinary polynomials: x is a unit, so clearing the low
        # exponents changes nothing about divisibility.
        lo_p, lo_q = self.min_degree(), divisor.min_degree()
        rem = {e - lo_p: c for e, c in self._terms.items()}
        q = {e - lo_q: c for e, c in divisor._terms.items()}
        dq = max(q)
        lead = q[dq]
        quot: dict[int, int] = {}
        while rem:
            dr = max(rem)
            if dr < dq:
                break
            c, r = divmod(rem[dr], lead)
            if r:
                break
            k = dr - dq
            quot[k] = c
            for e, v in q.items():
                s = rem.get(e + k, 0) - c * v
                if s:
                    rem[e + k] = s
                else:
                    rem.pop(e + k, None)
        if rem:
            remainder = LaurentPolynomial(rem, var).shift(lo_p)
            raise NotDivisibleError(self, divisor, remainder)
        return LaurentPolynomial._raw(quot, var).shift(lo_p - lo_q)

    # -- substitutions ------------------------------------------------------

    def substitute_power(self, d: int) -> "LaurentPolynomial":
        """Substitute ``x -> x^d`` (``d >= 0``); ``d = 0`` evaluates at 1."""
        if d < 0:
            raise ValueError("substitute_power expects d >= 0; use mirror() for inversion")
        return LaurentPolynomial([(e * d, c) for e, c in self._terms.items()], self._variable)

    def mirror(self) -> "LaurentPolynomial":
        """Substitute ``x -> x^{-1}``."""
        return LaurentPolynomial._raw({-e: c for e, c in self._terms.items()}, self._variable)

    def to_jones_variable(self) -> "LaurentPolynomial":
        """Rewrite a bracket-variable polynomial in ``u = t^{1/2} = A^{-2}``."""
        if self._variable != "A":
            raise VariableMismatchError(f"expected a polynomial in A, got {self._variable}")
        odd = [e for e in self._terms if e % 2]
        if odd:
            raise OddExponentError(f"odd A-exponents {odd} cannot be written in t^(1/2)")
        return LaurentPolynomial._raw({-e // 2: c for e, c in self._terms.items()}, "u")

    def to_t(self) -> "LaurentPolynomial":
        """Rewrite a ``u`` polynomial with only even exponents as a polynomial in ``t``."""
        if self._variable != "u":
            raise VariableMismatchError(f"expected a polynomial in u, got {self._variable}")
        odd = [e for e in self._terms if e % 2]
        if odd:
            raise OddExponentError(f"half-integer powers of t present: {odd}")
        return LaurentPolynomial._raw({e // 2: c for e, c in self._terms.items()}, "t")

    def to_u(self) -> "LaurentPolynomial":
        if self._variable != "t":
            raise VariableMismatchError(f"expected a polynomial in t, got {self._variable}")
        return LaurentPolynomial._raw({2 * e: c for e, c in self._terms.items()}, "u")

    def evaluate(self, x) -> Fraction | int:
        if x == 0 and self._terms and self.min_degree() < 0:
            raise ZeroDivisionError("negative powers at 0")
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def is_symmetric(self) -> bool:
        return self == self.mirror()

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self._variable)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._variable == other._variable and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._variable, tuple(self._terms.items())))
        return self._hash

    # -- text and JSON ------------------------------------------------------

    def _symbol(self) -> str:
        return "t" if self._variable in ("u", "t") else self._variable

    def _format_exponent(self, e: int) -> str:
        if self._variable == "u":
            if e % 2 == 0:
                e //= 2
            else:
                return f"^{e}/2"
        return "" if e == 1 else f"^{e}"

    def to_text(self) -> str:
        """Canonical text: descending exponents, ``^`` for powers, ``u`` shown as ``t^(e/2)``."""
        if not self._terms:
            return "0"
        sym = self._symbol()
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + sym + self._format_exponent(e)
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()!r}, variable={self._variable!r})"

    _TERM = re.compile(
        r"\s*([+-])?\s*(\d+)?\s*\*?\s*(?:([A-Za-z])(?:\^\(?\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\)?)?)?\s*"
    )

    @classmethod
    def parse(cls, text: str, variable: str = "A") -> "LaurentPolynomial":
        """Parse canonical text; ``t`` exponents like ``-23/2`` require ``variable='u'``."""
        text = text.strip().replace("−", "-")
        if variable not in VARIABLES:
            raise ValueError(f"unknown variable {variable!r}")
        if text in ("", "0"):
            return cls.zero(variable)
        symbol = "t" if variable in ("u", "t") else variable
        acc: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
            sign, coef, sym, num, den = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing operator at position {pos}: {text!r}")
            if coef is None and sym is None:
                raise ValueError(f"empty term at position {pos}: {text!r}")
            c = int(coef) if coef is not None else 1
            if sign == "-":
                c = -c
            if sym is None:
                e2 = 0
            else:
                if sym != symbol:
                    raise VariableMismatchError(f"unexpected symbol {sym!r} in {variable}-polynomial")
                n = int(num) if num is not None else 1
                if den is not None:
                    if den != "2" or variable != "u":
                        raise ValueError(f"fractional exponent {n}/{den} not allowed here")
                    e2 = n
                else:
                    e2 = 2 * n if variable == "u" else n
            acc[e2] = acc.get(e2, 0) + c
            pos = m.end()
            first = False
        return cls(acc, variable)

    def to_json(self) -> dict:
        return {"variable": self._variable, "terms": [[e, str(c)] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPolynomial":
        return cls([(int(e), int(c)) for e, c in data["terms"]], data["variable"])


def framing_factor(n: int, variable: str = "A") -> LaurentPolynomial:
    """``(-A^{-3})^n``, the correction for ``n`` units of writhe."""
    return LaurentPolynomial.monomial(-3 * n, (-1) ** (n % 2), variable)


def delta(variable: str = "A") -> LaurentPolynomial:
    """Value of a trivial loop: ``-A^2 - A^{-2}`` (``-t^{1/2} - t^{-1/2}`` in ``u``)."""
    if variable == "t":
        raise VariableMismatchError("the loop value is not a polynomial in t")
    return LaurentPolynomial({2: -1, -2: -1} if variable == "A" else {1: -1, -1: -1}, variable)
