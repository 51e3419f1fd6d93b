"""Spin Hurwitz - exact spin Hurwitz numbers with completed cycles.

Character sums over the Sergeev group, neutral fermion expectations, closed formulas,
topological recursion on the spin spectral curve and the spin ELSV formula, cross-checked
against each other.
"""

from spin_hurwitz.models import HurwitzQuery, HurwitzValue, Partition, ResultRecord, ScopeError
from spin_hurwitz.services import connected, disconnected, evaluate, spin_elsv

__version__ = "1.0.0"

__all__ = [
    # Records
    "HurwitzQuery",
    "HurwitzValue",
    "Partition",
    "ResultRecord",
    "ScopeError",
    # Routes
    "connected",
    "disconnected",
    "evaluate",
    "spin_elsv",
]
