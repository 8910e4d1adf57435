"""Exact computational Lie theory: root categories, Chevalley groups,
compact real forms, highest-weight modules, and Peter-Weyl analysis."""

from .rootdata import build_cartan, root_system, parse_type
from .rootcat import root_category, RootCategory, RootCatObject
from .liealg import lie_algebra, LieAlgebraZ
from .chevgroup import ChevalleyGroup
from .compactform import CompactForm
from .hwmodules import build_irrep, weyl_dim, WeightModule, ModuleGenerators
from .peterweyl import (MatrixCoefficient, OElement, SU2Quadrature, SU2Rep,
                        integral_lattice_report)

__all__ = [
    "build_cartan", "root_system", "parse_type",
    "root_category", "RootCategory", "RootCatObject",
    "lie_algebra", "LieAlgebraZ",
    "ChevalleyGroup", "CompactForm",
    "build_irrep", "weyl_dim", "WeightModule", "ModuleGenerators",
    "MatrixCoefficient", "OElement", "SU2Quadrature", "SU2Rep",
    "integral_lattice_report",
]
