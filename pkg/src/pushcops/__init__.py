"""Exact engine for cops-and-robber games on oriented graphs where cops may
push vertices (reverse every arc at a vertex).

Highlights:
- orientations addressed by push parity, so a push class is one bit vector;
- an exhaustive backward-induction solver over the full game arena;
- constructive cop strategies (push to a DAG and chase; the 4-regular case
  machine; shortest-path capture of a trapped robber);
- graph family generators, batch sweeps, and named verification suites.
"""

from .engine import (
    Game,
    GameState,
    GameVariant,
    MoveTo,
    PlaceCops,
    PlaceRobber,
    Push,
    PushAbility,
    Stay,
    Trace,
    Turn,
    play_match,
)
from .errors import PushcopsError
from .four_regular import FourRegularStrategy, four_regular_strategy
from .graph import (
    OrientedGraph,
    PushClass,
    UnderlyingGraph,
    is_dag,
    is_trapped,
    parse_arcs,
    push_class,
    reachable_from,
    serialize_arcs,
    validate_graph,
)
from .pushdag import (
    dag_push_target,
    extend_reachability,
    find_dag_push_set,
    normalize_single_source,
    single_source,
)
from .solver import (
    Arena,
    SolveResult,
    build_arena,
    cop_number,
    optimal_cop,
    optimal_robber,
    solve,
    solve_game,
)
from .strategies import (
    DagChaseStrategy,
    OracleCopStrategy,
    RandomRobber,
    StayRobber,
    Strategy,
    StrongPushDagStrategy,
    TrapCaptureStrategy,
    dag_chase,
    oracle_strategy,
    strong_push_dag_strategy,
    trap_capture,
)

__all__ = [
    "Arena",
    "DagChaseStrategy",
    "FourRegularStrategy",
    "Game",
    "GameState",
    "GameVariant",
    "MoveTo",
    "OracleCopStrategy",
    "OrientedGraph",
    "PlaceCops",
    "PlaceRobber",
    "Push",
    "PushAbility",
    "PushClass",
    "PushcopsError",
    "RandomRobber",
    "SolveResult",
    "Stay",
    "StayRobber",
    "Strategy",
    "StrongPushDagStrategy",
    "Trace",
    "TrapCaptureStrategy",
    "Turn",
    "UnderlyingGraph",
    "build_arena",
    "cop_number",
    "dag_chase",
    "dag_push_target",
    "extend_reachability",
    "find_dag_push_set",
    "four_regular_strategy",
    "is_dag",
    "is_trapped",
    "normalize_single_source",
    "optimal_cop",
    "optimal_robber",
    "oracle_strategy",
    "parse_arcs",
    "play_match",
    "push_class",
    "reachable_from",
    "serialize_arcs",
    "single_source",
    "solve",
    "solve_game",
    "strong_push_dag_strategy",
    "trap_capture",
    "validate_graph",
]

__version__ = "0.1.0"
