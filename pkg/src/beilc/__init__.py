"""Local cohomology of binomial edge ideals of graph complements.

The pipeline: cut sets of a graph index the minimal primes of its binomial
edge ideal; closing the primes under sums gives a finite poset; reduced
cohomology of open intervals in its order complex gives the multiplicities
of a direct-sum decomposition of each local cohomology module; depth,
dimension, Cohen-Macaulayness, regularity, and characteristic-p invariants
all read off from there.  For complements of graphs of girth at least 5
everything also has a closed form, cross-checked against the generic engine.
"""

from .graphs import (
    AssumptionError,
    CutSet,
    Graph,
    INFINITE_GIRTH,
    ParseError,
    SubsetBoundError,
    complement,
    complement_cut_sets,
    complete_graph,
    connected_components,
    core_subgraph,
    cut_sets,
    cycle_graph,
    disjoint_union,
    empty_graph,
    free_edges,
    girth,
    graph,
    parse_graph,
    path_graph,
    star_graph,
    to_graph6,
)
from .ideals import (
    IdealPoset,
    PosetExplosionError,
    PrimeIdeal,
    associated_primes,
    build_poset,
    contains,
    dimension,
    maximal_ideal,
    prime_from_cut_set,
    regularity,
    sum_decompose,
)
from .topology import (
    CohomologyProfile,
    SimplicialComplex,
    SubPoset,
    interval_profile,
    multiplicity,
    open_interval,
    order_complex,
    reduced_cohomology,
)
from .cohomology import (
    HomologicalReport,
    LCDecomposition,
    Summand,
    decompose,
    decomposition_from_profiles,
    poset_profiles,
    report,
)
from .girth5 import (
    EquivalenceAudit,
    EquivalenceVerdict,
    Girth5Input,
    classify,
    closed_form_decompose,
    closed_form_elements,
    closed_form_poset,
    closed_form_report,
    equivalence_audit,
    symbolic_tags,
    trivial_report,
    verify_equivalence,
)
from .corpus import girth5_classes, random_girth5, sweep
from .varieties import check_sum_decomposition, variety_mask

__version__ = "0.1.0"
