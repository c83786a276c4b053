"""Scalars, argument vectors and elementary symmetric function kernels.

Exact scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator); float scalars are Python ``float``.  A computation is
either entirely exact or entirely float: mixing the two raises
:class:`~newtonmac.errors.ModeError` instead of silently coercing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import ModeError, PreconditionError

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

Scalar = Union[Fraction, float]

ORACLE_MAX_N = 20


def mode_of(value) -> str | None:
    """Numeric mode of a single value; ``None`` for plain ints (mode-neutral)."""
    if isinstance(value, bool):
        raise PreconditionError("booleans are not scalars")
    if isinstance(value, Fraction):
        return EXACT
    if isinstance(value, float):
        return FLOAT
    if isinstance(value, int):
        return None
    raise PreconditionError(f"unsupported scalar type {type(value).__name__}")


def parse_scalar(text: str, mode: str = EXACT) -> Scalar:
    """Parse ``"p/q"`` (exact) or a decimal literal (float mode only)."""
    s = text.strip().replace("−", "-")
    if not s:
        raise PreconditionError("empty scalar")
    if mode == EXACT:
        if any(ch in s for ch in ".eE"):
            raise PreconditionError(f"decimal {text!r} not accepted in exact mode; use p/q")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"malformed rational {text!r}") from exc
    if mode == FLOAT:
        try:
            if "/" in s:
                num, den = s.split("/")
                return int(num) / int(den)
            return float(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"malformed number {text!r}") from exc
    raise PreconditionError(f"unknown mode {mode!r}")


def to_scalar(value, mode: str) -> Scalar:
    """Convert ``value`` into a scalar of ``mode``; never crosses modes."""
    if isinstance(value, str):
        return parse_scalar(value, mode)
    m = mode_of(value)
    if m is not None and m != mode:
        raise ModeError(f"{m} value {value!r} used in {mode} computation")
    if mode == EXACT:
        return Fraction(value)
    return float(value)


def common_mode(*values, default: str = EXACT) -> str:
    """The single mode shared by ``values``; ints adopt the others' mode."""
    found = {m for m in map(mode_of, values) if m is not None}
    if len(found) > 1:
        raise ModeError("exact and float scalars mixed")
    return found.pop() if found else default


def format_scalar(value: Scalar) -> str:
    """Serialise a scalar: ``"p/q"`` for rationals (``"p"`` when q = 1)."""
    if isinstance(value, float):
        return repr(value)
    return str(Fraction(value))


@dataclass(frozen=True)
class SymPoint:
    """An argument vector ``x`` of n >= 1 scalars sharing one numeric mode."""

    entries: tuple
    mode: str = EXACT

    def __post_init__(self):
        if self.mode not in MODES:
            raise PreconditionError(f"unknown mode {self.mode!r}")
        entries = tuple(to_scalar(v, self.mode) for v in self.entries)
        if not entries:
            raise PreconditionError("a point needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, values: Iterable, mode: str | None = None) -> "SymPoint":
        values = tuple(values)
        if mode is None:
            mode = common_mode(*(v for v in values if not isinstance(v, str)))
        return cls(values, mode)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def scalar(self, value) -> Scalar:
        """Coerce ``value`` into this point's mode (rejecting mixed modes)."""
        return to_scalar(value, self.mode)

    def to_json(self) -> list[str]:
        return [format_scalar(v) for v in self.entries]


def as_point(x) -> SymPoint:
    return x if isinstance(x, SymPoint) else SymPoint.of(x)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise PreconditionError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class SigmaTable:
    """sigma_0..sigma_n and the normalised means E_k = sigma_k / C(n, k)."""

    n: int
    sigma: tuple
    e: tuple
    mode: str = EXACT

    def sigma_at(self, k: int) -> Scalar:
        if 0 <= k <= self.n:
            return self.sigma[k]
        return self._zero()

    def e_at(self, k: int) -> Scalar:
        if 0 <= k <= self.n:
            return self.e[k]
        return self._zero()

    def _zero(self) -> Scalar:
        return 0.0 if self.mode == FLOAT else Fraction(0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": [format_scalar(v) for v in self.sigma],
            "e": [format_scalar(v) for v in self.e],
        }


def _elementary(values: Sequence, one) -> list:
    # e_j <- e_j + x_i * e_{j-1}, j descending, so each x_i is used once.
    e = [one] + [one * 0] * len(values)
    for i, xi in enumerate(values, start=1):
        for j in range(i, 0, -1):
            e[j] = e[j] + xi * e[j - 1]
    return e


def sigma_all(x) -> SigmaTable:
    """All elementary symmetric functions of ``x`` in O(n^2) multiplications."""
    x = as_point(x)
    one = 1.0 if x.mode == FLOAT else Fraction(1)
    sigma = _elementary(x.entries, one)
    n = x.n
    e = [s / math.comb(n, k) for k, s in enumerate(sigma)]
    return SigmaTable(n, tuple(sigma), tuple(e), x.mode)


def sigma_oracle(x, k: int) -> Scalar:
    """sigma_k by explicit enumeration of every k-subset (test oracle)."""
    x = as_point(x)
    if x.n > ORACLE_MAX_N:
        raise PreconditionError(f"enumeration oracle limited to n <= {ORACLE_MAX_N}")
    if k < 0 or k > x.n:
        return x.scalar(0)
    if x.mode == FLOAT:
        return float(sum(map(math.prod, combinations(x.entries, k))))
    # over a common denominator D: sigma_k(p/D) = sigma_k(p) / D^k, all-integer enumeration
    den = math.lcm(*(v.denominator for v in x.entries))
    nums = [v.numerator * (den // v.denominator) for v in x.entries]
    return Fraction(sum(map(math.prod, combinations(nums, k))), den**k)


def sigma_split(x, k: int) -> Scalar:
    """sigma_k(x) recomputed by splitting off the first two coordinates.

    sigma_k(x) = x1*x2*sigma_{k-2}(x') + (x1 + x2)*sigma_{k-1}(x') + sigma_k(x')
    where x' = (x3, ..., xn).
    """
    x = as_point(x)
    if x.n < 3:
        raise PreconditionError("sigma_split needs n >= 3")
    x1, x2 = x.entries[0], x.entries[1]
    rest = sigma_all(SymPoint(x.entries[2:], x.mode))
    return (
        x1 * x2 * rest.sigma_at(k - 2)
        + (x1 + x2) * rest.sigma_at(k - 1)
        + rest.sigma_at(k)
    )


def garding_member(x, k: int) -> bool:
    """True iff sigma_1(x), ..., sigma_k(x) are all strictly positive."""
    x = as_point(x)
    if not 1 <= k <= x.n:
        raise PreconditionError(f"cone index k={k} outside 1..{x.n}")
    table = sigma_all(x)
    return all(table.sigma[m] > 0 for m in range(1, k + 1))


def shift_vector(x, t) -> SymPoint:
    """x + t*(1, ..., 1)."""
    x = as_point(x)
    t = x.scalar(t)
    return SymPoint(tuple(v + t for v in x.entries), x.mode)
