"""Exact character-level computations for noncommutative virtual structure sheaves.

The package evaluates truncated NC virtual classes from obstruction-theory
characters and checks the algebra behind them: Schur functors of super
spaces, free Lie superalgebras, the commutator filtration of free algebras,
an explicit noncommutative dg-algebra, and quivers with relations.
"""

from .charring import (Character, GradedClass, RationalCharacter, SuperChar, adams, ext_power,
                       k_class, power_sum, rational_mul, schur_super, sym_power)
from .errors import BudgetExceededError, ExponentBudgetError, SchemaError
from .freealg import (FiltrationReport, FreeAlgebraElement, GradedGenSet, nc_filtration_dims,
                      poisson_envelope_dims, super_commutator)
from .freelie import LieCharTable, lie_bracket_span_oracle, lie_char, lie_char_table
from .ncdgq import NcdgData, build_q, check_q_squared, euler_char_xn, h0_ideal_generators
from .ncvirt import ObstructionTheory, ncvir_class, s_l_plus_truncated
from .partition import Partition, conjugate, lr_coeff, partitions_of
from .quiver import (GradedAlgebraPresentation, LElement, Quiver, Rep, build_quiver, mc_residual,
                     satisfies_relations, thin_stability)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "Character", "ExponentBudgetError", "FiltrationReport",
    "FreeAlgebraElement", "GradedAlgebraPresentation", "GradedClass", "GradedGenSet",
    "LElement", "LieCharTable", "NcdgData", "ObstructionTheory", "Partition", "Quiver",
    "RationalCharacter", "Rep", "SchemaError", "SuperChar", "adams", "build_q", "build_quiver",
    "check_q_squared", "conjugate", "euler_char_xn", "ext_power", "h0_ideal_generators",
    "k_class", "lie_bracket_span_oracle", "lie_char", "lie_char_table", "lr_coeff",
    "mc_residual", "nc_filtration_dims", "ncvir_class", "partitions_of",
    "poisson_envelope_dims", "power_sum", "rational_mul", "s_l_plus_truncated",
    "satisfies_relations", "schur_super", "super_commutator", "sym_power", "thin_stability",
]
