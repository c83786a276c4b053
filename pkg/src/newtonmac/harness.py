"""Seeded randomised checks of the main theorems (exact mode only).

Each trial draws its inputs from ``SplitMix64(seed, stream_id(suite), trial)``
so results do not depend on evaluation order.  Rationals have numerators
uniform in [-1000, 1000] and denominators uniform in [1, 20].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import PreconditionError
from .inequalities import gap_low_k, maclaurin_chain, newton_gap
from .operators import Binomial, TwoShift
from .polyalgebra import quartic_reduction, sturm_real_roots, truncation_reduction
from .rng import GENERATOR_ID, SplitMix64, stream_id
from .symcore import SymPoint, format_scalar

NUM_BOUND = 1000
DEN_MAX = 20
SUITES = ("theorem11", "theorem14", "chain", "lemma22")


def _fmt(values) -> list[str]:
    return [format_scalar(v) for v in values]


def _point(gen: SplitMix64, n: int, positive: bool = False) -> SymPoint:
    if positive:
        return SymPoint(tuple(Fraction(gen.randint(1, NUM_BOUND), gen.randint(1, DEN_MAX))
                              for _ in range(n)))
    return SymPoint(tuple(gen.rational(NUM_BOUND, DEN_MAX) for _ in range(n)))


def _nonneg_scalar(gen: SplitMix64) -> Fraction:
    return Fraction(gen.randint(0, NUM_BOUND), gen.randint(1, DEN_MAX))


def trial_theorem11(gen: SplitMix64, n_max: int) -> Optional[dict]:
    n = gen.randint(4, n_max)
    x = _point(gen, n)
    alpha, beta = gen.rational(), gen.rational()
    spec = TwoShift(alpha, beta)
    for k in range(3, n):
        gap = newton_gap(x, spec, k).gap
        if gap < 0:
            return {"x": x.to_json(), "operator": spec.to_json(), "k": k, "gap": format_scalar(gap)}
    return None


def trial_theorem14(gen: SplitMix64, n_max: int) -> Optional[dict]:
    s = gen.randint(1, min(4, n_max - 2))
    n = gen.randint(s + 2, n_max)
    x = _point(gen, n)
    spec = Binomial(gen.rational(), s)
    for k in range(s + 1, n):
        gap = newton_gap(x, spec, k).gap
        if gap < 0:
            return {"x": x.to_json(), "operator": spec.to_json(), "k": k, "gap": format_scalar(gap)}
    return None


def trial_chain(gen: SplitMix64, n_max: int) -> Optional[dict]:
    n = gen.randint(2, n_max)
    x = _point(gen, n, positive=True)
    s = gen.randint(1, 4)
    specs = [TwoShift(_nonneg_scalar(gen), _nonneg_scalar(gen)), Binomial(_nonneg_scalar(gen), s)]
    for spec in specs:
        chain = maclaurin_chain(x, spec, n)
        if chain.hypothesis_failures or not chain.monotone:
            return {"x": x.to_json(), "operator": spec.to_json(), "chain": chain.to_json()}
        low = (1, 2) if isinstance(spec, TwoShift) else range(1, spec.s + 1)
        for k in low:
            report = gap_low_k(x, spec, k)
            if report.hypothesis_failures or report.gap < 0:
                return {"x": x.to_json(), "operator": spec.to_json(), "low_gap": report.to_json()}
    return None


def trial_lemma22(gen: SplitMix64, n_max: int) -> Optional[dict]:
    n = gen.randint(2, n_max)
    x = _point(gen, n)
    reductions = [("truncation", k, truncation_reduction) for k in range(1, n)]
    reductions += [("quartic", k, quartic_reduction) for k in range(3, n)]
    for name, k, build in reductions:
        poly = build(x, k)
        if poly.is_zero():
            continue
        if not sturm_real_roots(poly).all_roots_real:
            return {"x": x.to_json(), "reduction": name, "k": k, "poly": poly.to_json()}
    return None


TRIALS: dict[str, Callable[[SplitMix64, int], Optional[dict]]] = {
    "theorem11": trial_theorem11,
    "theorem14": trial_theorem14,
    "chain": trial_chain,
    "lemma22": trial_lemma22,
}

MIN_N_MAX = {"theorem11": 4, "theorem14": 3, "chain": 2, "lemma22": 2}


@dataclass
class SuiteSummary:
    suite: str
    trials: int
    failures: int = 0
    first_failure: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "passed": self.trials - self.failures,
            "failures": self.failures,
            "first_failure": self.first_failure,
        }


def run_suite(suite: str, n_max: int, trials: int, seed: int) -> SuiteSummary:
    if suite not in TRIALS:
        raise PreconditionError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    if n_max < MIN_N_MAX[suite]:
        raise PreconditionError(f"suite {suite} needs n_max >= {MIN_N_MAX[suite]}")
    if trials < 0:
        raise PreconditionError("trials must be >= 0")
    summary = SuiteSummary(suite, trials)
    sid = stream_id(suite)
    for t in range(trials):
        failure = TRIALS[suite](SplitMix64(seed, sid, t), n_max)
        if failure is not None:
            summary.failures += 1
            if summary.first_failure is None:
                summary.first_failure = {"trial": t, **failure}
    return summary


@dataclass
class RandomTestReport:
    seed: int
    n_max: int
    suites: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(s.failures for s in self.suites)

    def to_json(self) -> dict:
        return {
            "generator": GENERATOR_ID,
            "rational_law": f"numerator U[-{NUM_BOUND},{NUM_BOUND}], denominator U[1,{DEN_MAX}]",
            "seed": self.seed,
            "n_max": self.n_max,
            "suites": [s.to_json() for s in self.suites],
            "failures": self.failures,
        }


def randomtest(suite: str, n_max: int, trials: int, seed: int) -> RandomTestReport:
    names = SUITES if suite == "all" else (suite,)
    report = RandomTestReport(seed, n_max)
    for name in names:
        report.suites.append(run_suite(name, n_max, trials, seed))
    return report
