"""Univariate/multivariate polynomial algebra and identity certification."""

from .identities import (
    IDENTITIES,
    Identity,
    identity_sample,
    identity_sides,
    verify_eq32,
    verify_eq33,
    verify_lemma21,
    verify_sos_n5,
)
from .multipoly import MultiPoly, mp_add, mp_mul, mp_pow, mp_sub
from .reductions import epsilon_perturb, poly_from_roots, quartic_reduction, truncation_reduction
from .unipoly import RootCount, UniPoly, sturm_real_roots

__all__ = [
    "IDENTITIES", "Identity", "MultiPoly", "RootCount", "UniPoly",
    "epsilon_perturb", "identity_sample", "identity_sides", "mp_add", "mp_mul",
    "mp_pow", "mp_sub", "poly_from_roots", "quartic_reduction", "sturm_real_roots",
    "truncation_reduction", "verify_eq32", "verify_eq33", "verify_lemma21", "verify_sos_n5",
]
