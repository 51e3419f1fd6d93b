"""Value types: partitions, series, Fock states, algebraic scalars, graphs and records."""

from .algebraic import AlgebraicScalar, LocalSeries, ScalarRing, TruncationError
from .clifford import CliffordState, OperatorKind, QuadraticOperator
from .correlator import Correlator
from .gamma import GammaElement
from .generating import GeneratingSeries
from .golden import GoldenCell, GoldenData, GoldenDiff, GoldenTable
from .graphs import SpinWeighting, StableGraph
from .hurwitz import HurwitzQuery, HurwitzStatus, HurwitzValue, ResultRecord, ScopeError
from .partition import Partition, PartitionClass
from .reports import (
    ChamberFit,
    ConjectureReport,
    CrosscheckReport,
    FitReport,
    PiecewisePolynomialityReport,
    QuasiPolynomialityReport,
    SuiteResult,
)
from .series import SparseSeries, TruncatedSeries
from .tautological import TautExpression

__all__ = [
    "AlgebraicScalar",
    "ChamberFit",
    "CliffordState",
    "ConjectureReport",
    "Correlator",
    "CrosscheckReport",
    "FitReport",
    "GammaElement",
    "GeneratingSeries",
    "GoldenCell",
    "GoldenData",
    "GoldenDiff",
    "GoldenTable",
    "HurwitzQuery",
    "HurwitzStatus",
    "HurwitzValue",
    "LocalSeries",
    "OperatorKind",
    "Partition",
    "PartitionClass",
    "PiecewisePolynomialityReport",
    "QuadraticOperator",
    "QuasiPolynomialityReport",
    "ResultRecord",
    "ScalarRing",
    "ScopeError",
    "SparseSeries",
    "SpinWeighting",
    "StableGraph",
    "SuiteResult",
    "TautExpression",
    "TruncatedSeries",
    "TruncationError",
]
