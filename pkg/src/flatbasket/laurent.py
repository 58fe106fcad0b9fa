"""Exact Laurent polynomials in one formal variable with integer coefficients.

A polynomial is stored as a sorted tuple of (exponent, coefficient) terms with
no zero coefficients, plus a variable tag ("A", "q", "t", ...).  All arithmetic
is exact over the integers; there is no floating point anywhere.

The text form is sparse "coeff*var^exp" terms joined by "+" with exponents
ascending, e.g. "-1*t^-4+1*t^-3+1*t^-1".  The zero polynomial prints as "0".

>>> p = LaurentPolynomial.from_coeffs("t", {-4: -1, -3: 1, -1: 1})
>>> p.text()
'-1*t^-4+1*t^-3+1*t^-1'
>>> (p * LaurentPolynomial.monomial("t", 4)).text()
'-1*t^0+1*t^1+1*t^3'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping


_TERM_RE = re.compile(r"^(-?\d+)\*([A-Za-z]+)\^(-?\d+)$")


@dataclass(frozen=True)
class LaurentPolynomial:
    variable: str
    terms: tuple[tuple[int, int], ...]  # ((exp, coeff), ...) ascending, coeff != 0

    @classmethod
    def from_coeffs(cls, variable: str, coeffs: Mapping[int, int]) -> LaurentPolynomial:
        terms = tuple(sorted((e, c) for e, c in coeffs.items() if c != 0))
        return cls(variable, terms)

    @classmethod
    def zero(cls, variable: str) -> LaurentPolynomial:
        return cls(variable, ())

    @classmethod
    def one(cls, variable: str) -> LaurentPolynomial:
        return cls(variable, ((0, 1),))

    @classmethod
    def monomial(cls, variable: str, exp: int, coeff: int = 1) -> LaurentPolynomial:
        if coeff == 0:
            return cls(variable, ())
        return cls(variable, ((exp, coeff),))

    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[0][0]

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[-1][0]

    def _check_var(self, other: LaurentPolynomial) -> None:
        if self.variable != other.variable:
            raise ValueError(f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        self._check_var(other)
        coeffs = dict(self.terms)
        for e, c in other.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPolynomial.from_coeffs(self.variable, coeffs)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.variable, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial.from_coeffs(
                self.variable, {e: c * other for e, c in self.terms}
            )
        self._check_var(other)
        coeffs: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return LaurentPolynomial.from_coeffs(self.variable, coeffs)

    def __rmul__(self, other: int) -> LaurentPolynomial:
        return self * other

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPolynomial.one(self.variable)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by variable^k."""
        return LaurentPolynomial(self.variable, tuple((e + k, c) for e, c in self.terms))

    def mirror(self) -> LaurentPolynomial:
        """Substitute variable -> variable^-1."""
        return LaurentPolynomial(self.variable, tuple(sorted((-e, c) for e, c in self.terms)))

    def rename(self, variable: str) -> LaurentPolynomial:
        return LaurentPolynomial(variable, self.terms)

    def text(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"{c}*{self.variable}^{e}" for e, c in self.terms)

    @classmethod
    def parse(cls, text: str, variable: str | None = None) -> LaurentPolynomial:
        text = text.strip()
        if text == "0":
            return cls(variable or "t", ())
        # terms are joined by "+"; a negative coefficient keeps its sign inside the term
        pieces = [p for p in text.split("+") if p]
        coeffs: dict[int, int] = {}
        var_seen = None
        for piece in pieces:
            m = _TERM_RE.match(piece)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {piece!r}")
            c, v, e = int(m.group(1)), m.group(2), int(m.group(3))
            if var_seen is None:
                var_seen = v
            elif v != var_seen:
                raise ValueError(f"mixed variables {var_seen!r} and {v!r}")
            coeffs[e] = coeffs.get(e, 0) + c
        if variable is not None and var_seen is not None and var_seen != variable:
            raise ValueError(f"expected variable {variable!r}, found {var_seen!r}")
        return cls.from_coeffs(var_seen or variable or "t", coeffs)

    def __str__(self) -> str:
        return self.text()


def poly_min(polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    """Lexicographically least polynomial by its (exp, coeff) term encoding."""
    best = None
    for p in polys:
        if best is None or p.terms < best.terms:
            best = p
    if best is None:
        raise ValueError("poly_min of empty iterable")
    return best
