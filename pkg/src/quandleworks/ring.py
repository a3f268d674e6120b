"""Exact arithmetic in integer Laurent polynomials and in their quotient by
the principal ideal generated by t^2 + t - 1.

Every residue class in the quotient has a unique representative of the form
n1*t + n2*t^2, so quotient elements are stored as plain integer pairs.
Reduction rewrites t^2 -> 1 - t and t^(-1) -> 1 + t until only the exponents
0 and 1 remain, then converts a + b*t into the canonical pair (a + b, a)
using 1 = t + t^2.  All arithmetic is over arbitrary-precision integers;
coefficients grow Fibonacci-fast under powers of t, so nothing here may
round.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Mapping


class LaurentPoly:
    """Integer Laurent polynomial as an exponent -> coefficient mapping.

    Zero coefficients are never stored; the zero polynomial is the empty
    mapping.  Exponents may be negative.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        table: dict[int, int] = {}
        if coeffs:
            for exp, coeff in coeffs.items():
                if coeff:
                    table[int(exp)] = int(coeff)
        self.coeffs = table

    @classmethod
    def t_power(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # carries a mutable mapping

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        merged = dict(self.coeffs)
        for exp, coeff in other.coeffs.items():
            merged[exp] = merged.get(exp, 0) + coeff
        return LaurentPoly(merged)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exp: -coeff for exp, coeff in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items()))
        return f"LaurentPoly({{{inner}}})"


@dataclass(frozen=True)
class RingElem:
    """Canonical pair (n1, n2) for n1*t + n2*t^2 in the quotient ring."""

    n1: int
    n2: int

    @classmethod
    def from_int(cls, value: int) -> "RingElem":
        # 1 = t + t^2, so the integer c is the pair (c, c)
        return cls(value, value)

    def lift(self) -> LaurentPoly:
        return LaurentPoly({1: self.n1, 2: self.n2})

    def is_zero(self) -> bool:
        return not (self.n1 or self.n2)

    def __add__(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            return NotImplemented
        return RingElem(self.n1 + other.n1, self.n2 + other.n2)

    def __sub__(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            return NotImplemented
        return RingElem(self.n1 - other.n1, self.n2 - other.n2)

    def __neg__(self) -> "RingElem":
        return RingElem(-self.n1, -self.n2)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RingElem.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return reduce(self.lift() * other.lift())

    __rmul__ = __mul__

    def scale_t(self, power: int) -> "RingElem":
        """t^power * self; valid for negative powers since t is a unit."""
        return reduce(LaurentPoly.t_power(power) * self.lift())

    def __str__(self) -> str:
        return render_pair(self)


def reduce(poly: LaurentPoly) -> RingElem:
    """Canonical pair of a Laurent polynomial modulo t^2 + t - 1.

    Top exponents rewrite through t^e = t^(e-2) - t^(e-1) and bottom ones
    through t^e = t^(e+1) + t^(e+2); both strictly shrink the support range,
    so the loop terminates with support inside {0, 1}.
    """
    coeffs = dict(poly.coeffs)

    def bump(exp: int, delta: int) -> None:
        value = coeffs.get(exp, 0) + delta
        if value:
            coeffs[exp] = value
        else:
            coeffs.pop(exp, None)

    while coeffs:
        top = max(coeffs)
        if top >= 2:
            value = coeffs.pop(top)
            bump(top - 2, value)
            bump(top - 1, -value)
            continue
        bottom = min(coeffs)
        if bottom <= -1:
            value = coeffs.pop(bottom)
            bump(bottom + 1, value)
            bump(bottom + 2, value)
            continue
        break
    a = coeffs.get(0, 0)
    b = coeffs.get(1, 0)
    return RingElem(a + b, a)


ZERO = RingElem(0, 0)
ONE = RingElem(1, 1)
T = RingElem(1, 0)
T_SQ = RingElem(0, 1)
T_INV = RingElem(2, 1)

_PAIR_RE = re.compile(r"^\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)$")
_POLY_RE = re.compile(r"^([+-]?\d+)\*t([+-]\d+)\*t\^2$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def render_elem(elem: RingElem) -> str:
    """Explicit-sign polynomial text, e.g. (2, 1) -> '+2*t+1*t^2'."""
    return f"{elem.n1:+d}*t{elem.n2:+d}*t^2"


def render_pair(elem: RingElem) -> str:
    return f"({elem.n1},{elem.n2})"


def parse_elem(text: str) -> RingElem:
    """Parse 'n1*t+n2*t^2', the pair form '(n1,n2)', or a bare integer."""
    s = text.strip()
    m = _PAIR_RE.match(s)
    if m:
        return RingElem(int(m.group(1)), int(m.group(2)))
    m = _POLY_RE.match(s)
    if m:
        return RingElem(int(m.group(1)), int(m.group(2)))
    if _INT_RE.match(s):
        return RingElem.from_int(int(s))
    raise ValueError(f"cannot parse ring element {text!r}")


def random_elem(rng: random.Random, bound: int = 50) -> RingElem:
    return RingElem(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_poly(rng: random.Random, max_terms: int = 6, exp_bound: int = 6,
                coeff_bound: int = 9) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-exp_bound, exp_bound)] = rng.randint(-coeff_bound, coeff_bound)
    return LaurentPoly(terms)
