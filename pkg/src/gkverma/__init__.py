"""GK dimensions of simple highest weight modules of classical Lie algebras
and reducibility of scalar generalized Verma modules for maximal parabolics."""

from .closedform import (
    HalfLattice,
    Lattice,
    ReducibilitySet,
    first_reducible_point,
    first_reducible_point_searched,
    gkdim_closed_form,
    is_reducible,
    reducibility_set,
    wallach_annotation,
)
from .errors import ClassError, DomainError, IntegralityError, ParabolicError, ParseError, RankError, WeightError
from .gkdim import decompose_classes, gkdim_general, gkdim_integral, gkdim_scalar, tilde_normalize
from .rootdata import LieAlgebra, LieType, ParabolicChoice, dim_nilradical, fundamental_weight, rho, scalar_weight
from .tableaux import Partition, dual_partition, f_a, g_ev, g_odd, row_parity_counts, rs_shape

__version__ = "0.1.0"
