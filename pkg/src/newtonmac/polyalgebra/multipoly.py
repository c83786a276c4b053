"""Sparse multivariate polynomials over Q in canonical form.

A polynomial is a map from exponent tuples to non-zero Fractions over a fixed
ordered variable list.  Because zero coefficients are never stored, two
polynomials are equal exactly when their term maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import ModeError, PreconditionError
from ..symcore import format_scalar


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(vars)
        clean = {}
        for exps, c in (terms or {}).items():
            if isinstance(c, float):
                raise ModeError("MultiPoly coefficients must be exact")
            if len(exps) != len(self.vars):
                raise PreconditionError("exponent vector length does not match variables")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.vars, p.terms = vars, terms
        return p

    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        exps = tuple(1 if v == name else 0 for v in vars)
        if sum(exps) != 1:
            raise PreconditionError(f"unknown variable {name!r}")
        return cls(vars, {exps: 1})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise PreconditionError(f"variable lists differ: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(other, self.vars)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise PreconditionError("negative powers are not polynomials")
        result, base = MultiPoly.const(1, self.vars), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values) -> Fraction:
        """Value at a point given as a sequence (variable order) or a name map."""
        if isinstance(values, Mapping):
            values = [values[v] for v in self.vars]
        values = [Fraction(v) for v in values]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lex order: total degree descending, then lex descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "coefficient": format_scalar(c)}
            for e, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def mp_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mp_sub(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p - q


def mp_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def mp_pow(p: MultiPoly, k: int) -> MultiPoly:
    return p**k
