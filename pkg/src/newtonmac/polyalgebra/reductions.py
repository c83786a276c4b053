"""Characteristic polynomials of a point and their derivative reductions.

For real x, P(t) = prod (t - x_i) is real-rooted, and so is every polynomial
obtained from its homogenisation by partial differentiation.  These helpers
build those reduced polynomials directly from the symmetric means of x.
"""

from __future__ import annotations

from ..errors import ModeError, PreconditionError
from ..symcore import EXACT, SymPoint, as_point, binomial, sigma_all
from .unipoly import UniPoly


def _exact(x) -> SymPoint:
    x = as_point(x)
    if x.mode != EXACT:
        raise ModeError("polynomial reductions require exact mode")
    return x


def poly_from_roots(x) -> UniPoly:
    """prod (t - x_i), built from sigma_j as sum (-1)^j sigma_j t^(n-j)."""
    x = _exact(x)
    sigma = sigma_all(x).sigma
    n = x.n
    return UniPoly(tuple((-1) ** (n - i) * sigma[n - i] for i in range(n + 1)))


def quartic_reduction(x, k: int) -> UniPoly:
    """E_{k-3} t^4 - 4E_{k-2} t^3 + 6E_{k-1} t^2 - 4E_k t + E_{k+1}."""
    x = _exact(x)
    if not 3 <= k <= x.n - 1:
        raise PreconditionError(f"quartic reduction needs 3 <= k <= {x.n - 1}, got {k}")
    E = sigma_all(x).e_at
    return UniPoly((E(k + 1), -4 * E(k), 6 * E(k - 1), -4 * E(k - 2), E(k - 3)))


def truncation_reduction(x, k: int) -> UniPoly:
    """sum_j (-1)^j C(k+1, j) E_j t^(k+1-j), the (n-1-k)-th t-derivative up to scale."""
    x = _exact(x)
    if not 1 <= k <= x.n - 1:
        raise PreconditionError(f"truncation reduction needs 1 <= k <= {x.n - 1}, got {k}")
    E = sigma_all(x).e_at
    m = k + 1
    return UniPoly(tuple((-1) ** (m - i) * binomial(m, m - i) * E(m - i) for i in range(m + 1)))


def epsilon_perturb(y, eps) -> SymPoint:
    """Add ``eps`` to the leading run of zero entries of ``y``.

    ``y`` must list its zero entries first.
    """
    y = _exact(y)
    eps = y.scalar(eps)
    if eps <= 0:
        raise PreconditionError("perturbation size must be positive")
    r = 0
    while r < y.n and y[r] == 0:
        r += 1
    if any(v == 0 for v in y.entries[r:]):
        raise PreconditionError("zero entries must come first")
    return SymPoint(tuple(v + eps for v in y.entries[:r]) + y.entries[r:], y.mode)
