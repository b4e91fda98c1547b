"""Zero-full laws for well-approximable sets inside generalized Cantor sets.

Exact geometry of ball/Cantor-set intersections, series verdicts for the
Hausdorff f-measure of W_t(psi) cap C(b, D), dimension predictions and
desk-scale counting experiments.
"""

from zerofull.errors import (
    DegenerateFitError,
    DomainError,
    PreconditionError,
    ResourceError,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateFitError",
    "DomainError",
    "PreconditionError",
    "ResourceError",
    "__version__",
]
