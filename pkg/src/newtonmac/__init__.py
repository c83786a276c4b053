"""Exact verification engine for Newton-Maclaurin type inequalities.

Covers elementary symmetric means, the two-shift / quadratic-coefficient /
binomial operator families built from them, gap and chain checks with
equality-case classification, Sturm-based real-rootedness certificates,
symbolic identity expansion, and complex-root counterexamples.
"""

__version__ = "0.1.0"
