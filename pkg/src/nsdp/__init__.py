"""Variable elimination for sparse discrete optimization, with pluggable
elimination orderings and a benchmark harness."""

from .bench import BenchRecord, WinTable, emit_report, run_benchmark, summarize_wins
from .generator import (
    GeneratorConfig,
    Hypergraph,
    chain,
    generate_instance,
    grid,
    parse_hypergraph,
    random_k_uniform,
    synth_family,
)
from .graph import (
    EliminationTrace,
    InteractionGraph,
    build_interaction_graph,
    eliminate_vertex,
    induced_width,
    neighborhood,
    run_elimination_game,
)
from .model import (
    NEG_INF,
    DopInstance,
    LinearComponent,
    LinearConstraint,
    Relation,
    TabularComponent,
    check_feasible,
    evaluate_objective,
    format_instance,
    parse_instance,
    validate_instance,
)
from .orderings import (
    Heuristic,
    compute_ordering,
    is_perfect_elimination_ordering,
    order_lex_bfs,
    order_mcs,
    order_min_degree,
    order_min_fill,
    order_nested_dissection,
)
from .solver import (
    LocalTable,
    SolveResult,
    Status,
    WidthExceeded,
    brute_force_solve,
    eliminate_variable,
    init_state,
    solve,
)

__version__ = "0.1.0"
