"""kempelab: Kempe changes, frozen colourings and clique-minor bounds on
random paired graphs.

The package builds seed-determined instances on vertex groups {a_i, b_i},
verifies their frozen canonical colouring and quasi-clique-minor, finds the
rotated recolouring that witnesses Kempe non-equivalence, and checks the
minor-exclusion story both analytically (log-space bounds with exact
rational oracles) and empirically (a reproducible Monte Carlo harness plus
exhaustive searches at desk scale).
"""

from kempelab._version import __version__
from kempelab.errors import BudgetExceededError, CapExceededError
from kempelab.graph import (
    BagFamily,
    Colouring,
    ColourPartition,
    Graph,
    contract_edge,
    induced_subgraph,
    is_connected,
    is_proper,
    make_graph,
    partition_of,
)
from kempelab.construction import (
    ExclusionChoice,
    LvmInstance,
    Quadruple,
    alternative_colouring,
    canonical_bags,
    canonical_colouring,
    find_quadruple,
    from_exclusions,
    generate,
)
from kempelab.kempe import (
    KempeChain,
    KempeClassReport,
    apply_kempe_change,
    enumerate_proper_colourings,
    frozen_class_check,
    is_frozen,
    kempe_chain,
    kempe_classes,
)
from kempelab.minors import (
    MinorWitness,
    decompose_minor,
    find_double_minor,
    find_triple_minor,
    greedy_independent_pairs,
    has_kt_minor_exact,
    max_clique,
    triple_minor_cap,
    verify_minor_model,
    verify_quasi_minor,
)
from kempelab.bounds import (
    BoundReport,
    CombinedBound,
    combined_minor_bound,
    double_minor_bound,
    double_minor_bound_exact,
    expected_clique_count,
    expected_quadruple_count,
    no_edge_between_pairs_prob,
    simple_minor_bound,
    simple_minor_bound_exact,
)
from kempelab.montecarlo import EstimateReport, mc_estimate

__all__ = [
    "__version__",
    "BagFamily",
    "BoundReport",
    "BudgetExceededError",
    "CapExceededError",
    "Colouring",
    "ColourPartition",
    "CombinedBound",
    "EstimateReport",
    "ExclusionChoice",
    "Graph",
    "KempeChain",
    "KempeClassReport",
    "LvmInstance",
    "MinorWitness",
    "Quadruple",
    "alternative_colouring",
    "apply_kempe_change",
    "canonical_bags",
    "canonical_colouring",
    "combined_minor_bound",
    "contract_edge",
    "decompose_minor",
    "double_minor_bound",
    "double_minor_bound_exact",
    "enumerate_proper_colourings",
    "expected_clique_count",
    "expected_quadruple_count",
    "find_double_minor",
    "find_quadruple",
    "find_triple_minor",
    "from_exclusions",
    "frozen_class_check",
    "generate",
    "greedy_independent_pairs",
    "has_kt_minor_exact",
    "induced_subgraph",
    "is_connected",
    "is_frozen",
    "is_proper",
    "kempe_chain",
    "kempe_classes",
    "make_graph",
    "max_clique",
    "mc_estimate",
    "no_edge_between_pairs_prob",
    "partition_of",
    "simple_minor_bound",
    "simple_minor_bound_exact",
    "triple_minor_cap",
    "verify_minor_model",
    "verify_quasi_minor",
]
