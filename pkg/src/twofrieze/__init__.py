"""Exact integer arithmetic for closed 2-frieze patterns.

The package constructs, verifies, enumerates, and transforms the
periodic arrays of positive integers in which every entry equals the
determinant of its four diagonal neighbours, together with the quiver
mutation machinery that produces them by evaluating cluster variables.
"""

from .errors import (
    CapExceeded,
    ConditionViolated,
    DivisionByZero,
    FriezeError,
    IndexOutOfStripe,
    InternalContradiction,
    MonodromyNotIdentity,
    NonIntegral,
    NonPositive,
    NotBipartite,
    NotClosed,
    NotDivisible,
    NotUnimodular,
    PairMismatch,
)
from .exact import LaurentPoly, parse_poly
from .frieze import (
    Fragment,
    SymbolicFragment,
    check_local_rule,
    complete_from_columns,
    complete_symbolic,
    entry_at,
    from_json,
    from_text,
    minimal_period,
    propagate,
    seed_zigzag,
    to_json,
    to_text,
)
from .symmetry import DihedralElement, canonical_form, orbit, sigma, tau
from .cluster import (
    Quiver,
    Seed,
    cluster_equivalent,
    enumerate_clusters,
    eval_ev,
    ev_point,
    initial_seed,
    mu_minus,
    mu_plus,
    quiver_qm,
    reachable_value_multisets,
)
from .surgery import CutSite, cut_above, find_pair, glue_over_ones, glue_over_pair
from .geometry import (
    Polygon,
    apply_sl3,
    check_normalization,
    lift_to_polygon,
    polygon_to_fragment,
    transition_matrix,
)
from .search import (
    OrbitClass,
    SearchConfig,
    UnitaryReport,
    classify_unitary,
    count_orbits,
    enumerate_fragments,
    sample_unitary_fragments,
)
from ._kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
