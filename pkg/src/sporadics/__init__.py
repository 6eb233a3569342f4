"""Exact-arithmetic toolkit for Molien series of finite (cover) groups.

Computes Molien coefficient sequences from character-table data, cross-checks
them against a brute-force matrix-group oracle, and validates the
invariant-degree plans and dimension bounds shipped in the group metadata.
"""

from sporadics.cyclo import Cyclotomic, NotRationalError

__all__ = ["Cyclotomic", "NotRationalError"]

__version__ = "0.1.0"
