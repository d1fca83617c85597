"""Exact numerical-semigroup computations around the second Feng-Rao number.

The brute-force routines in :mod:`fengrao.semigroup` count straight from
membership; :mod:`fengrao.inductive`, :mod:`fengrao.tower` and
:mod:`fengrao.codes` hold the closed forms checked against them.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .semigroup import (  # noqa: F401
    NATURALS,
    AperySet,
    NumericalSemigroup,
    apery_set,
    contains,
    divisors,
    feng_rao_distance,
    feng_rao_number_2_bruteforce,
    from_generators,
    from_small_elements,
    generalized_feng_rao_distance,
    nu,
    rho,
)
from .inductive import (  # noqa: F401
    InductiveDescriptor,
    Partition,
    apery_cardinalities_closed,
    apery_closed,
    build,
    e2_closed,
    genus_closed,
    is_inductive,
    is_inductive_naive,
    multiple_of,
    partition,
    quotient_by,
)
from .tower import (  # noqa: F401
    TowerParams,
    reduction_candidates,
    tower_apery_cards,
    tower_descriptor,
    tower_e2_closed,
)
from .codes import (  # noqa: F401
    BoundsRow,
    BoundsTable,
    bounds_table,
    d2_lower_bound,
    delta_arf_closed,
    generic_dr_bound,
    griesmer_order_bound,
)
from .patterns import Pattern, admits_pattern, is_arf, is_saturated  # noqa: F401
