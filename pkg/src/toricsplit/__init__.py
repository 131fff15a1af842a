"""Exact tools for toric ideals: Markov and Graver bases, circuits, Gamma_A,
{0,1}-matchings, and splittings into sums of proper toric ideals."""

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .exactla import IntMatrix, integer_kernel_basis, rank, rational_kernel_basis
from .families import (
    FamilyInstance,
    catalogued_example,
    cyclic_configuration,
    lawrence_lifting,
    lawrence_of_symmetric_curve,
    symmetric_curve,
)
from .graphs import (
    BipartiteGraph,
    chordless_even_cycles,
    cycle_generators,
    graph_split_numbers,
    incidence_configuration,
    kmn_split,
)
from .splitting import (
    SplitCertificate,
    build_subconfigurations,
    classify_sufficient_conditions,
    find_cover,
    min_cover,
    split_numbers,
    verify_certificate,
)
from .supports import bar_bounds, circuits, cmin, delta01, gamma_graph
from .toric import (
    Configuration,
    GeneratorSet,
    LatticeVector,
    NotPointedError,
    fiber,
    graver_basis,
    minimal_markov,
    mu,
)

__version__ = "0.1.0"
