"""Exact-arithmetic slopes, canonical forms, filtration lattices and
critical-level annihilation bounds for connections on the punctured formal
disk.

Everything is computed over exact rationals: Laurent series carry explicit
precision certificates, Lie algebras are given by validated structure
constants, and the enveloping-algebra calculus truncates only at certified
cutoffs.
"""

from .errors import (BoundViolation, CyclicVectorFailure, MismatchedAlgebra,
                     NonUnit, NotNilpotent, NotReduced, OperslopeError,
                     PrecisionExhausted, RamificationMismatch, SchemaError,
                     ZeroSeries)
from .series import LaurentScalar
from .liealg import BasisInfo, LieElement, SimpleLieAlgebra, build_type_A, \
    get_type_A
from .connection import (Connection, GaugeWord, LoopElement, TorusChar,
                         UnipExp, cocharacter, gauge_apply, is_reduced,
                         order_and_polar, ramify_connection,
                         slope_from_reduced)
from .oper import (OperCanonical, OperGeneral, ReducedFormInfo,
                   as_oper_general, canonicalize, in_Op_r,
                   reduced_form_via_oper, slope_of_oper, to_connection,
                   typeA_newton_slope)
from .moyprasad import (ApartmentPoint, CocycleReport, MPLattice,
                        cocycle_split_check, contains_stratum, jumps,
                        lattice, member)
from .kacmoody import (CRITICAL, InducedModuleSpec, Level, act,
                       induced_module, km_bracket, normal_order, u_add,
                       u_gen, u_mul, u_scalar, u_scale, vacuum_vector)
from .sugawara import (AnnihilationReport, SSReport, annihilation_check,
                       fourier_apply, mode_commutator, mode_kill_bound,
                       monomial_bound, quadratic_sugawara,
                       sharp_bound_applicable, validate_ss_vector)

__version__ = "1.0.0"
