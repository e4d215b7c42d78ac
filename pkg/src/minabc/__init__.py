"""minabc: exact minimal-ABC tree parameters and transformation verification.

The atom-bond-connectivity (ABC) index of a tree sums
sqrt((d(u) + d(v) - 2) / (d(u) d(v))) over its edges.  For every order
the trees minimizing it belong to a narrow parametrized family; this
package computes the optimal parameters exactly for any order, builds
the explicit trees, and numerically re-derives the transformation
bounds that pin the family down -- plus small-order brute force as an
independent oracle.
"""

from .family import (
    FamilyParams,
    InvalidParamsError,
    StructureSummary,
    closed_form_abc,
    closed_form_abc_hp,
    materialize,
    order_of,
    root_degree,
    summarize,
    validate,
)
from .oracle import (
    BruteResult,
    OrderCapExceeded,
    brute_min_abc,
    enumerate_trees,
    family_exhaustive,
    free_tree_count,
)
from .scans import (
    ScanReport,
    check_monotonicity,
    check_surrogate_dominance,
    check_surrogate_monotonicity,
    scan_negativity,
    verify,
)
from .solver import (
    InfeasibleOrderError,
    SolveOutcome,
    SolveResult,
    enumerate_feasible,
    solve,
    solve_range,
)
from .tables import BoundRow, BoundTable, builtin_tables
from .trees import (
    DomainError,
    SwitchRejected,
    Tree,
    TreeStructureError,
    abc_index,
    abc_index_hp,
    apply_switch,
    edge_weight,
    path_tree,
    star_tree,
    tree_from_edges,
)
from .transforms import (
    TRANSFORM_IDS,
    MissingFieldError,
    NegativeCountError,
    TransformParams,
    UnknownFormError,
    delta_abc,
    solve_branch_counts,
)

__version__ = "0.1.0"
