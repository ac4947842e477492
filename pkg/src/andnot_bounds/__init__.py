"""Structural bounds on the number of asynchronous attractors of AND-NOT
Boolean networks, with an exhaustive attractor oracle to check them."""

from .covers import (
    DOMINATING,
    EVEN_FVS,
    STRONG_EVEN_HIT,
    ConstraintFamily,
    WitnessSet,
    build_constraints,
    min_hitting_set,
)
from .cycles import (
    CycleClassification,
    CycleRecord,
    DelocalizingTriple,
    InconsistencyWitness,
    SignedCycle,
    classify_cycles,
    cycle_parity,
    delocalizing_triples,
    enumerate_cycles,
    inconsistency_witnesses,
    is_local_cycle,
)
from .dynamics import (
    AttractorSet,
    StateTransitionGraph,
    attractors,
    attractors_restricted,
    attractors_scc,
    attractors_trapset_oracle,
    build_astg,
    digraph_attractors,
    fixed_points,
)
from .errors import (
    AndNotError,
    CycleBudgetExceeded,
    DuplicateLiteralError,
    DuplicateTargetError,
    EmptyNetworkError,
    ExactBudgetExceeded,
    InvalidConfig,
    NetworkFormatError,
    NetworkSyntaxError,
    PathBudgetExceeded,
    StateSpaceTooLarge,
    UnknownVariableError,
)
from .influence import (
    NEG,
    POS,
    SignedArc,
    SignedDigraph,
    bruteforce_global_ig,
    induced_subgraph,
    local_ig,
    structural_global_ig,
)
from .network import (
    BooleanNetwork,
    UpdateFunction,
    Variable,
    make_source,
    parse_network,
    percolate_full,
    percolate_one_step,
    pin_assignment,
    read_network,
    serialize_network,
    state_to_str,
    str_to_state,
)
from .report import (
    AnalyzeOptions,
    BoundReport,
    CampaignSummary,
    GeneratorConfig,
    analyze,
    generate_random,
    verify_campaign,
)

__version__ = "0.1.0"
