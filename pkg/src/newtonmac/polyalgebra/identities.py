"""Exact verification of the polynomial identities behind the gap theorems.

Each identity has two independent evaluation routes:

* ``symbolic(k)`` expands both sides into canonical :class:`MultiPoly` form,
  so equality is a proof for that ``k``;
* ``numeric(values, k)`` evaluates both sides at a rational point, the left
  side through the operator evaluators and the right side from its closed
  formula.  :func:`identity_sample` uses this route for ``k`` beyond the
  symbolic bounds; a disagreement refutes, agreement is strong evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Callable

from ..errors import PreconditionError
from ..operators import eval_S, eval_S_ks
from ..rng import SplitMix64, stream_id
from ..symcore import SymPoint, binomial, shift_vector, sigma_all
from .multipoly import MultiPoly

SAMPLE_NUM_BOUND = 10**6
SAMPLE_DEN_MAX = 100

EQ32_BOUND = 6
EQ33_BOUND = 5
SHIFT_BOUND = 6


def _zvars(n: int) -> list[str]:
    return [f"z{i}" for i in range(1, n + 1)]


def symbolic_means(entries: list[MultiPoly]) -> list[MultiPoly]:
    """E_0..E_n of symbolic entries via the descending one-pass recurrence."""
    vars = entries[0].vars
    n = len(entries)
    sig = [MultiPoly.const(1, vars)] + [MultiPoly(vars)] * n
    for i, x in enumerate(entries, start=1):
        for j in range(i, 0, -1):
            sig[j] = sig[j] + x * sig[j - 1]
    return [s * Fraction(1, comb(n, k)) for k, s in enumerate(sig)]


def _at(E: list, j: int, vars) -> MultiPoly:
    return E[j] if 0 <= j < len(E) else MultiPoly(vars)


def _newton_gap(E: list, k: int, vars) -> MultiPoly:
    return _at(E, k, vars) ** 2 - _at(E, k - 1, vars) * _at(E, k + 1, vars)


def _combo(E: list, weights: list[MultiPoly], k: int, vars) -> MultiPoly:
    total = MultiPoly(vars)
    for i, w in enumerate(weights):
        total = total + w * _at(E, k - i, vars)
    return total


def _gap_of(op: Callable[[int], MultiPoly], k: int) -> MultiPoly:
    return op(k) ** 2 - op(k - 1) * op(k + 1)


def _binomial_weights(alpha: MultiPoly, s: int) -> list[MultiPoly]:
    return [binomial(s, i) * alpha**i for i in range(s + 1)]


# -- lemma21: 576 (S_3^2 - S_2 S_4) over four variables ---------------------

_PAIRS4 = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)),
           ((1, 2), (0, 3)), ((1, 3), (0, 2)), ((2, 3), (0, 1))]
_PAIRINGS4 = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]


def _lemma21_rhs(z, al, be):
    first = sum(
        ((z[i] - z[j]) * (z[p] + al) * (z[q] + be) + (z[i] - z[j]) * (z[q] + al) * (z[p] + be)) ** 2
        for (i, j), (p, q) in _PAIRS4
    )
    second = sum(((z[i] - z[j]) * (z[p] - z[q]) * (al - be)) ** 2 for (i, j), (p, q) in _PAIRINGS4)
    return 3 * first + 2 * second


def _lemma21_symbolic(k: int):
    vars = _zvars(4) + ["alpha", "beta"]
    z = [MultiPoly.var(v, vars) for v in vars[:4]]
    al, be = MultiPoly.var("alpha", vars), MultiPoly.var("beta", vars)
    E = symbolic_means(z)
    S = lambda m: _combo(E, [MultiPoly.const(1, vars), al + be, al * be], m, vars)
    return 576 * _gap_of(S, 3), _lemma21_rhs(z, al, be)


def _lemma21_numeric(values, k: int):
    z, al, be = values[:4], values[4], values[5]
    S = lambda m: eval_S(z, al, be, m)
    return 576 * (S(3) ** 2 - S(2) * S(4)), _lemma21_rhs(z, al, be)


# -- sum of squares over pairs: shared by sos5 and eq32 -----------------------


def _pair_sos(z, shift=0):
    n = len(z)
    total = 0
    for i, j in combinations(range(n), 2):
        rest = prod((z[l] + shift) ** 2 for l in range(n) if l not in (i, j))
        total = total + (z[i] - z[j]) ** 2 * rest
    return total


def _sos5_symbolic(k: int):
    vars = _zvars(5) + ["alpha"]
    z = [MultiPoly.var(v, vars) for v in vars[:5]]
    al = MultiPoly.var("alpha", vars)
    E = symbolic_means(z)
    S = lambda m: _combo(E, _binomial_weights(al, 3), m, vars)
    rhs = MultiPoly(vars)
    for i, j in combinations(range(5), 2):
        term = (z[i] - z[j]) ** 2
        for l in range(5):
            if l not in (i, j):
                term = term * (z[l] + al) ** 2
        rhs = rhs + term
    return 100 * _gap_of(S, 4), rhs


def _sos5_numeric(values, k: int):
    z, al = values[:5], values[5]
    S = lambda m: eval_S_ks(z, al, 3, m)
    return 100 * (S(4) ** 2 - S(3) * S(5)), _pair_sos(z, al)


# -- eq32: k n^2 (E_k^2 - E_{k-1} E_{k+1}) with n = k + 1 --------------------


def _eq32_symbolic(k: int):
    n = k + 1
    vars = _zvars(n)
    z = [MultiPoly.var(v, vars) for v in vars]
    E = symbolic_means(z)
    rhs = MultiPoly(vars)
    for i, j in combinations(range(n), 2):
        term = (z[i] - z[j]) ** 2
        for l in range(n):
            if l not in (i, j):
                term = term * z[l] ** 2
        rhs = rhs + term
    return k * n * n * _newton_gap(E, k, vars), rhs


def _eq32_numeric(values, k: int):
    n = k + 1
    t = sigma_all(SymPoint(tuple(values)))
    lhs = k * n * n * (t.e_at(k) ** 2 - t.e_at(k - 1) * t.e_at(k + 1))
    return lhs, _pair_sos(list(values))


# -- eq33: binomial gap with s = k - 1, n = k + 1 equals shifted Newton gap --


def _eq33_symbolic(k: int):
    n, s = k + 1, k - 1
    vars = _zvars(n) + ["alpha"]
    z = [MultiPoly.var(v, vars) for v in vars[:n]]
    al = MultiPoly.var("alpha", vars)
    E = symbolic_means(z)
    S = lambda m: _combo(E, _binomial_weights(al, s), m, vars)
    shifted = symbolic_means([zi + al for zi in z])
    return _gap_of(S, k), _newton_gap(shifted, k, vars)


def _eq33_numeric(values, k: int):
    n, s = k + 1, k - 1
    z, al = list(values[:n]), values[n]
    S = lambda m: eval_S_ks(z, al, s, m)
    t = sigma_all(shift_vector(SymPoint(tuple(z)), al))
    return S(k) ** 2 - S(k - 1) * S(k + 1), t.e_at(k) ** 2 - t.e_at(k - 1) * t.e_at(k + 1)


# -- shift: E_k(z + alpha e) = sum_i C(k, i) alpha^(k-i) E_i(z), n = k + 1 ----


def _shift_symbolic(k: int):
    n = k + 1
    vars = _zvars(n) + ["alpha"]
    z = [MultiPoly.var(v, vars) for v in vars[:n]]
    al = MultiPoly.var("alpha", vars)
    E = symbolic_means(z)
    rhs = MultiPoly(vars)
    for i in range(k + 1):
        rhs = rhs + binomial(k, i) * al ** (k - i) * E[i]
    return symbolic_means([zi + al for zi in z])[k], rhs


def _shift_numeric(values, k: int):
    n = k + 1
    z, al = SymPoint(tuple(values[:n])), values[n]
    t = sigma_all(z)
    rhs = sum(binomial(k, i) * al ** (k - i) * t.e_at(i) for i in range(k + 1))
    return sigma_all(shift_vector(z, al)).e_at(k), rhs


@dataclass(frozen=True)
class Identity:
    name: str
    symbolic: Callable[[int], tuple]
    numeric: Callable[[list, int], tuple]
    nvars: Callable[[int], int]
    min_k: int = 0
    bound: int | None = None

    def check_k(self, k: int) -> None:
        if k < self.min_k:
            raise PreconditionError(f"{self.name} needs k >= {self.min_k}, got {k}")


IDENTITIES: dict[str, Identity] = {
    "lemma21": Identity("lemma21", _lemma21_symbolic, _lemma21_numeric, lambda k: 6),
    "sos5": Identity("sos5", _sos5_symbolic, _sos5_numeric, lambda k: 6),
    "eq32": Identity("eq32", _eq32_symbolic, _eq32_numeric, lambda k: k + 1, 1, EQ32_BOUND),
    "eq33": Identity("eq33", _eq33_symbolic, _eq33_numeric, lambda k: k + 2, 2, EQ33_BOUND),
    "shift": Identity("shift", _shift_symbolic, _shift_numeric, lambda k: k + 2, 0, SHIFT_BOUND),
}


def get_identity(identity) -> Identity:
    if isinstance(identity, Identity):
        return identity
    try:
        return IDENTITIES[identity]
    except KeyError:
        raise PreconditionError(
            f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}"
        ) from None


def identity_sides(identity, k: int = 0, bound: int | None = None) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of an identity, fully expanded in canonical form."""
    ident = get_identity(identity)
    ident.check_k(k)
    limit = bound if bound is not None else ident.bound
    if limit is not None and k > limit:
        raise PreconditionError(
            f"{ident.name} symbolic expansion limited to k <= {limit}; use identity_sample"
        )
    return ident.symbolic(k)


def verify_lemma21() -> bool:
    lhs, rhs = identity_sides("lemma21")
    return lhs == rhs


def verify_sos_n5() -> bool:
    lhs, rhs = identity_sides("sos5")
    return lhs == rhs


def verify_eq32(k: int, bound: int = EQ32_BOUND) -> bool:
    lhs, rhs = identity_sides("eq32", k, bound)
    return lhs == rhs


def verify_eq33(k: int, bound: int = EQ33_BOUND) -> bool:
    lhs, rhs = identity_sides("eq33", k, bound)
    return lhs == rhs


def sample_point(identity, k: int, seed: int, trial: int) -> list[Fraction]:
    """The rational point used by ``trial`` (depends only on its key)."""
    ident = get_identity(identity)
    gen = SplitMix64(seed, stream_id(ident.name), trial)
    return [gen.rational(SAMPLE_NUM_BOUND, SAMPLE_DEN_MAX) for _ in range(ident.nvars(k))]


def identity_sample(identity, k: int, trials: int, seed: int = 0) -> bool:
    """Randomised exact check of an identity at ``trials`` seeded points."""
    ident = get_identity(identity)
    ident.check_k(k)
    if trials < 1:
        raise PreconditionError("identity sampling needs trials >= 1")
    for trial in range(trials):
        lhs, rhs = ident.numeric(sample_point(ident, k, seed, trial), k)
        if lhs != rhs:
            return False
    return True
