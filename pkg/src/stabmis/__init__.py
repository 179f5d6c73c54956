"""stabmis: self-stabilizing maximal-independent-set algorithms, simulated
under central and distributed unfair schedulers, with generators, exact
small-instance oracles, verifiers, and a benchmark harness.
"""

from .bench import (
    ExperimentSpec,
    ResultRow,
    ResultsTable,
    ScalingPoint,
    VerificationError,
    emit,
    emit_scaling_csv,
    emit_scaling_series,
    results_from_json,
    run_experiment,
    sign_test_pvalue,
)
from .engine import (
    Trace,
    default_move_cap,
    derive_seed,
    extract_sets,
    initial_domain,
    random_initial,
    run,
    step_central,
    step_distributed,
)
from .generators import (
    GRAPH_CLASSES,
    GenSpec,
    GeneratorError,
    gen_bipartite,
    gen_connected,
    gen_tree,
    gen_unit_disk,
    generate,
)
from .graph import EdgeListError, Graph, GraphError, read_edge_list, write_edge_list
from .oracle import (
    ExactBounds,
    MAX_ORACLE_NODES,
    OracleError,
    approximation_ratio_check,
    enumerate_maximal_independent_sets,
    exact_bounds,
)
from .rules import (
    ALGORITHMS,
    ALGORITHM_ORDER,
    Algorithm,
    Rule,
    WAIT,
    color,
    eligible_rules,
    get_algorithm,
    swn,
)
from .verify import (
    BoundStatus,
    Verdict,
    audit_terminal_rules,
    check_move_bound,
    is_dominating,
    is_independent,
    is_maximal_independent,
    move_bound,
    verify_two_layer,
)

__version__ = "0.1.0"
