"""Exact Poincare series, free-module bases and generator catalogs for the
spaces of commuting elements in the classical Lie groups U(n), SU(n), Sp(n),
cross-checked against independent brute-force and conjugacy-class oracles.
"""

__version__ = "0.1.0"

from .poincare import (
    GeneratorCatalog,
    GroupSpec,
    bcom_series,
    bg_series,
    ecom_numerator,
    generator_catalog,
    stable_bcom,
)
from .coinvariants import oracle_bcom, oracle_ecom
from .qseries import QPoly, RationalSeries, TruncatedSeries, product_series
from .weylcomb import (
    CycleData,
    GroupSizeError,
    Permutation,
    SignedPermutation,
    elements,
    group_order,
)

__all__ = [
    "__version__",
    "CycleData",
    "GeneratorCatalog",
    "GroupSizeError",
    "GroupSpec",
    "Permutation",
    "QPoly",
    "RationalSeries",
    "SignedPermutation",
    "TruncatedSeries",
    "bcom_series",
    "bg_series",
    "ecom_numerator",
    "elements",
    "generator_catalog",
    "group_order",
    "oracle_bcom",
    "oracle_ecom",
    "product_series",
    "stable_bcom",
]
