"""Computation routes for spin Hurwitz numbers and their verification."""

from .cohft_elsv import spin_elsv, spin_elsv_double_hodge
from .crosscheck import run_crosscheck
from .golden import load_golden, regenerate_table
from .hurwitz_numbers import connected, disconnected
from .partitions import enumerate_partitions
from .qschur import character, schur_q
from .routes import ROUTES, evaluate
from .tr_engine import TopologicalRecursion, check_conjecture, correlator

__all__ = [
    "ROUTES",
    "TopologicalRecursion",
    "character",
    "check_conjecture",
    "connected",
    "correlator",
    "disconnected",
    "enumerate_partitions",
    "evaluate",
    "load_golden",
    "regenerate_table",
    "run_crosscheck",
    "schur_q",
    "spin_elsv",
    "spin_elsv_double_hodge",
]
