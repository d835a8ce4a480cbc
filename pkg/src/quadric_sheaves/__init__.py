"""Vector bundles on the smooth quadric surface P1 x P1.

Exact cohomology of line bundles and cokernel presentations, Chern data,
global generation certificates, point configurations and the classification
of indecomposable globally generated bundles with small first Chern class.
"""

from .cox import BiForm, h_line
from .sheaf import Presentation, chern, cohomology, dual, hom_cohomology
from .points import PointSet, ideal_cohomology, is_gg_ideal
from .classifier import verify_classification

__all__ = ["BiForm", "h_line", "Presentation", "chern", "cohomology", "dual",
           "hom_cohomology", "PointSet", "ideal_cohomology", "is_gg_ideal",
           "verify_classification"]
__version__ = "0.1.0"
