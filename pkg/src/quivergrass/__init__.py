"""Exact combinatorics of quiver Grassmannians over the equioriented A_n quiver.

Given a catenoid representation M (a multiset of interval modules whose
distinct summands form a chain) and a dimension vector e, this package
decides whether Gr_e(M) is empty or irreducible, enumerates its torus
fixed points and irreducible components as Schubert data, and computes
its Poincare polynomial by two independent methods that must agree.
"""

from .reps import (
    DimVector,
    EmptyInstanceError,
    Interval,
    NotCatenoidError,
    Representation,
    catenoid_chain,
    catenoid_witness,
    decompose_simple,
    dimension_vector,
    euler_form,
    ext_dim,
    hom_dim,
    interval_dimension,
    interval_leq,
    is_catenoid,
    is_nonempty,
    is_simple,
    minimal_resolution,
)
from .schubert import (
    DEFAULT_GUARD,
    Chain,
    GuardExceededError,
    NotIrreducibleError,
    NotSimpleError,
    ResolutionFrame,
    bruhat_leq,
    build_frame,
    cell_dimension,
    chain_of_permutation,
    components,
    enumerate_fixed_points,
    exists_P_I,
    hom_criterion,
    inversions,
    is_irreducible,
    iter_fixed_points,
    minimum_chain,
    parabolic_blocks,
    permutation_from_word,
    subrep_type,
    weyl_word,
)
from .poincare import (
    QPolynomial,
    euler_characteristic,
    fiber_dim,
    poincare_cells,
    poincare_formula,
    q_binomial,
    q_multinomial,
    strata,
    stratum_of_chain,
)
from .families import (
    FAMILIES,
    complexes_chain_string,
    complexes_instance,
    degflag_instance,
)
from .verify import VerifyReport, verify_corpus

__version__ = "0.1.0"
