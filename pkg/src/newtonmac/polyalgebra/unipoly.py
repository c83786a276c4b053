"""Dense univariate polynomials over Q and Sturm-chain root counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..errors import ModeError, PreconditionError
from ..symcore import format_scalar


def _rational(c) -> Fraction:
    if isinstance(c, float):
        raise ModeError("polynomial algebra is exact-only; got a float coefficient")
    return Fraction(c)


@dataclass(frozen=True)
class UniPoly:
    """Coefficients constant-term first; trailing zeros are stripped."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-_rational(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = _rational(other)
            return UniPoly(tuple(c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lc
        for shift in range(dq, -1, -1):
            q = rem[shift + other.degree] / lc
            quot[shift] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= q * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem[: other.degree]))

    def primitive(self) -> "UniPoly":
        """Positive rescaling to coprime integer coefficients (sign preserved)."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return UniPoly(tuple(Fraction(v // g) for v in ints))

    def monic(self) -> "UniPoly":
        return self * (1 / self.lc) if self.coeffs else self

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor (Euclid over Q with content stripping)."""
    while not q.is_zero():
        p, q = q, p.divmod(q)[1].primitive()
    return p.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    g = poly_gcd(p, p.derivative())
    quot, rem = p.divmod(g)
    assert rem.is_zero()
    return quot.primitive()


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """p, p', then negated remainders; each term rescaled by a positive constant."""
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero():
        rem = chain[-2].divmod(chain[-1])[1]
        chain.append((-rem).primitive())
    chain.pop()
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(p: UniPoly) -> int:
    chain = sturm_chain(p)
    at_pos = [1 if q.lc > 0 else -1 for q in chain]
    at_neg = [s * (-1) ** q.degree for s, q in zip(at_pos, chain)]
    return _variations(at_neg) - _variations(at_pos)


@dataclass(frozen=True)
class RootCount:
    distinct_real: int
    all_roots_real: bool

    def to_json(self) -> dict:
        return {"distinct_real": self.distinct_real, "all_roots_real": self.all_roots_real}


def sturm_real_roots(p: UniPoly) -> RootCount:
    """Count distinct real roots and decide whether every root is real."""
    if not isinstance(p, UniPoly):
        p = UniPoly(tuple(p))
    if p.is_zero():
        raise PreconditionError("Sturm counting is undefined for the zero polynomial")
    distinct = count_distinct_real_roots(p)
    sqf = squarefree_part(p)
    return RootCount(distinct, count_distinct_real_roots(sqf) == sqf.degree)
