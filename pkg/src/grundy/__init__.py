"""Grundy numbers of graphs: exact solver, witnesses, product constructions and atom generation."""

__version__ = "0.1.0"

from .atoms import Atom, AtomSet, generate_atoms, is_edge_critical
from .canon import are_isomorphic, canonical_form
from .coloring import (
    Coloring,
    VerificationReport,
    Violation,
    extend_proper,
    greedy_color,
    is_grundy,
    is_proper,
    order_from_coloring,
)
from .constructions import (
    ConstructionOutcome,
    bipartite_times_path_or_cycle,
    complete_times_any,
    complete_times_bipartite,
    even_torus_coloring,
    grid_family_value,
    mesh_coloring,
    ng_counterexample,
    nonbipartite_times_path_or_cycle,
    odd_torus_value,
)
from .errors import BudgetExhausted, ColoringError, DomainError, GraphError, GrundyError, SizeLimitError
from .graph import (
    Bipartition,
    Graph,
    ProductCoords,
    bipartition,
    cartesian_product,
    complement,
    components,
    induced_subgraph,
    make_family,
    merge_vertices,
    product_of,
    remove_edge,
)
from .io import dump_coloring, emit_dot, emit_graph, load_coloring, parse_graph
from .solver import (
    GrundyResult,
    NGReport,
    SearchBudget,
    UpperBounds,
    chromatic_number,
    degree_bound,
    grundy_exact,
    grundy_oracle,
    grundy_witness,
    independence_number,
    ng_check,
    oracle_lexmin_witness,
    upper_bounds,
)
