"""Named verification suites behind `verify` and the acceptance tests.

Each suite re-checks one of the package's headline guarantees by exhaustive
desk-scale enumeration, returning a structured report with a minimal failing
instance when anything goes wrong.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .engine import GameVariant, PushAbility, play_match
from .four_regular import FourRegularStrategy
from .generators import (
    circulant,
    complete,
    cycle,
    enumerate_connected_graphs,
    enumerate_orientations,
    is_k_degenerate,
    octahedron,
)
from .graph import (
    OrientedGraph,
    UnderlyingGraph,
    is_dag,
    reachable_from,
    serialize_arcs,
    validate_graph,
)
from .pushdag import find_dag_push_set, reachability_partition
from .solver import SolveResult, optimal_robber, solve_game
from .strategies import StayRobber, StrongPushDagStrategy, TrapCaptureStrategy


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    repro: OrientedGraph | None = None

    def fail(self, message: str, og: OrientedGraph | None = None) -> None:
        self.passed = False
        self.failures.append(message)
        if self.repro is None and og is not None:
            self.repro = og

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} ({self.checked} checks)"]
        lines.extend(f"  failure: {m}" for m in self.failures[:20])
        lines.extend(f"  finding: {m}" for m in self.findings)
        return "\n".join(lines)


def _connected_graphs(max_n: int, max_degree: int | None = None):
    for n in range(1, max_n + 1):
        yield from enumerate_connected_graphs(n, max_degree)


def _solve_class(rep: OrientedGraph, push: PushAbility, cops: int = 1) -> SolveResult:
    return solve_game(rep, GameVariant(push, cops))


def suite_theorem_dag(max_n: int = 5) -> SuiteResult:
    """Pushable-to-DAG orientations are one-cop-win with strong push, and the
    constructive push-then-chase strategy beats the optimal robber."""
    res = SuiteResult("theorem-dag")
    for g in _connected_graphs(max_n):
        for rep in enumerate_orientations(g, per_class=True):
            pushable = find_dag_push_set(rep) is not None
            if not pushable:
                continue
            result = _solve_class(rep, PushAbility.STRONG)
            for member in (rep.with_parity(p) for p in range(1 << max(g.n - 1, 0))):
                res.checked += 1
                if not result.member_win(member.parity):
                    res.fail(f"solver says robber-win on a DAG-pushable orientation", member)
                    continue
                # the class arena covers every member parity, so one solve
                # also powers the optimal robber for all 2^(n-1) members
                trace = play_match(
                    member,
                    StrongPushDagStrategy(member),
                    optimal_robber(result),
                    GameVariant(PushAbility.STRONG),
                )
                if trace.outcome["type"] != "captured":
                    res.fail("push-then-chase strategy failed to capture", member)
    return res


def _suite_c1_by_class(name: str, graphs) -> SuiteResult:
    res = SuiteResult(name)
    for g in graphs:
        for rep in enumerate_orientations(g, per_class=True):
            res.checked += 1
            result = _solve_class(rep, PushAbility.STRONG)
            if not result.root_win:
                res.fail("strong-push cop number exceeds 1", rep)
    return res


def suite_theorem_3degen(max_n: int = 5) -> SuiteResult:
    """3-degenerate graphs: one strong-push cop wins every orientation."""
    graphs = (g for g in _connected_graphs(max_n) if is_k_degenerate(g, 3)[0])
    return _suite_c1_by_class("theorem-3degen", graphs)


def suite_theorem_maxdeg4(max_n: int = 5) -> SuiteResult:
    """Max degree <= 4: one strong-push cop wins every orientation."""
    graphs = _connected_graphs(max_n, max_degree=4)
    return _suite_c1_by_class("theorem-maxdeg4", graphs)


def four_regular_families() -> list[tuple[str, UnderlyingGraph]]:
    return [
        ("K5", complete(5)),
        ("octahedron", octahedron()),
        ("C8(1,2)", circulant(8, (1, 2))),
    ]


def suite_strategy_4regular(families=None) -> SuiteResult:
    """The scripted 4-regular strategy beats the optimal robber on every push
    class, with the visited-out-degree dichotomy audited after every move."""
    res = SuiteResult("strategy-4regular")
    for name, g in families or four_regular_families():
        for rep in enumerate_orientations(g, per_class=True):
            res.checked += 1
            result = _solve_class(rep, PushAbility.STRONG)
            if not result.root_win:
                res.fail(f"{name}: solver says one strong-push cop loses", rep)
                continue
            strategy = FourRegularStrategy(rep)
            trace = play_match(
                rep, strategy, optimal_robber(result), GameVariant(PushAbility.STRONG)
            )
            if trace.outcome["type"] != "captured":
                res.fail(f"{name}: scripted strategy failed to capture", rep)
            bad = [e for e in strategy.audit_log if e["mode"] == "invariant" and not e["invariant"]]
            if bad:
                res.fail(f"{name}: dichotomy audit failed on {len(bad)} moves", rep)
    return res


def suite_pushdag_props(max_n: int = 5) -> SuiteResult:
    """On every DAG orientation: one reachability-growth round keeps the DAG
    and its source, loses no reachable vertex, and absorbs the whole boundary;
    full normalization needs at most n-1 rounds."""
    res = SuiteResult("pushdag-props")
    for g in _connected_graphs(max_n):
        for og in enumerate_orientations(g):
            if not is_dag(og)[0]:
                continue
            res.checked += 1
            u = min(v for v in range(g.n) if og.in_degree(v) == 0)
            current = og
            rounds = 0
            while True:
                part = reachability_partition(current, u)
                if not part.unreachable:
                    break
                rounds += 1
                if rounds > g.n - 1:
                    res.fail("normalization exceeded n-1 growth rounds", og)
                    break
                nxt = current.push_many(sorted(part.unreachable))
                ok, _ = is_dag(nxt)
                if not ok:
                    res.fail("growth round broke acyclicity", og)
                    break
                if nxt.in_degree(u) != 0:
                    res.fail("growth round destroyed the source", og)
                    break
                reach = reachable_from(nxt, u)
                if not part.reachable <= reach:
                    res.fail("growth round lost a reachable vertex", og)
                    break
                if not part.boundary <= reach:
                    res.fail("growth round missed a boundary vertex", og)
                    break
                current = nxt
    return res


def random_trapped_instance(rng: random.Random, n: int):
    """Random connected oriented graph with every arc at the robber inward."""
    robber = rng.randrange(n)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extras = rng.randrange(0, n)
    for _ in range(extras):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    arcs = []
    for u, v in sorted(edges):
        if v == robber or (u != robber and rng.random() < 0.5):
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    og = validate_graph(n, arcs)
    cop = rng.choice([v for v in range(n) if v != robber])
    return og, cop, robber


def suite_trap(instances: int = 1000, seed: int = 20260823, max_n: int = 12) -> SuiteResult:
    """Trapped robbers are captured within twice the cop's distance, with no
    push ever landing next to the robber."""
    res = SuiteResult("trap")
    rng = random.Random(seed)
    for _ in range(instances):
        n = rng.randrange(2, max_n + 1)
        og, cop, robber = random_trapped_instance(rng, n)
        res.checked += 1
        strategy = TrapCaptureStrategy(og, cop, robber)
        trace = play_match(og, strategy, StayRobber(robber), GameVariant(PushAbility.WEAK))
        if trace.outcome["type"] != "captured":
            res.fail(f"trap capture did not finish (cop {cop}, robber {robber})", og)
            continue
        bound = 2 * og.graph.distance(cop, robber)
        if trace.outcome["round"] > bound:
            res.fail(
                f"capture took {trace.outcome['round']} rounds, bound {bound}"
                f" (cop {cop}, robber {robber})",
                og,
            )
    return res


def suite_monotonic(max_n: int = 5, k_max: int = 3) -> SuiteResult:
    """More push power never hurts: strong <= weak <= no-push cop numbers."""
    res = SuiteResult("monotonic")
    for g in _connected_graphs(max_n):
        for rep in enumerate_orientations(g, per_class=True):
            weak: dict[int, SolveResult] = {}
            strong: dict[int, SolveResult] = {}

            def class_win(cache, push, k, parity):
                if k not in cache:
                    cache[k] = _solve_class(rep, push, k)
                return cache[k].member_win(parity)

            for p in range(1 << max(g.n - 1, 0)):
                member = rep.with_parity(p)
                res.checked += 1
                c = next(
                    (
                        k
                        for k in range(1, k_max + 1)
                        if solve_game(member, GameVariant(PushAbility.NONE, k)).root_win
                    ),
                    None,
                )
                c_wp = next(
                    (
                        k
                        for k in range(1, k_max + 1)
                        if class_win(weak, PushAbility.WEAK, k, p)
                    ),
                    None,
                )
                c_sp = next(
                    (
                        k
                        for k in range(1, k_max + 1)
                        if class_win(strong, PushAbility.STRONG, k, p)
                    ),
                    None,
                )
                if c is not None and (c_wp is None or c_wp > c):
                    res.fail(f"c_wp={c_wp} exceeds c={c}", member)
                if c_wp is not None and (c_sp is None or c_sp > c_wp):
                    res.fail(f"c_sp={c_sp} exceeds c_wp={c_wp}", member)
    return res


# additional acceptance checks (not named verify suites)

def check_directed_cycles(n_range=range(3, 9)) -> SuiteResult:
    """Consistently oriented cycles: classical cop number 2, but one cop with
    strong push wins."""
    res = SuiteResult("directed-cycles")
    for n in n_range:
        og = validate_graph(n, [(i, (i + 1) % n) for i in range(n)])
        res.checked += 1
        if solve_game(og, GameVariant(PushAbility.NONE, 1)).root_win:
            res.fail(f"n={n}: one pushless cop should lose on a directed cycle", og)
        if not solve_game(og, GameVariant(PushAbility.NONE, 2)).root_win:
            res.fail(f"n={n}: two pushless cops should win on a directed cycle", og)
        if not solve_game(og, GameVariant(PushAbility.STRONG, 1)).root_win:
            res.fail(f"n={n}: one strong-push cop should win on a directed cycle", og)
        if find_dag_push_set(og) is None:
            res.fail(f"n={n}: directed cycle class should contain a DAG", og)
    return res


def k4_class_partition() -> tuple[list[int], list[int]]:
    """Push classes of K4 split by whether the class contains a DAG.

    Returns (pushable class ids, non-pushable class ids) under the spanning
    tree representative numbering.
    """
    pushable, blocked = [], []
    for i, rep in enumerate(enumerate_orientations(complete(4), per_class=True)):
        (pushable if find_dag_push_set(rep) is not None else blocked).append(i)
    return pushable, blocked


def check_k4_obstruction() -> SuiteResult:
    res = SuiteResult("k4-obstruction")
    pushable, blocked = k4_class_partition()
    res.checked = len(pushable) + len(blocked)
    res.findings.append(
        f"K4 has {len(pushable)} DAG-pushable and {len(blocked)} non-pushable push classes"
    )
    if res.checked != 8:
        res.fail(f"K4 should have exactly 8 push classes, found {res.checked}")
    return res


def open_problem_sweep(max_n: int = 5) -> SuiteResult:
    """Search for any push class needing more than one strong-push cop."""
    res = SuiteResult("open-problem-sweep")
    hard: list[OrientedGraph] = []
    for g in _connected_graphs(max_n):
        for rep in enumerate_orientations(g, per_class=True):
            res.checked += 1
            if not _solve_class(rep, PushAbility.STRONG).root_win:
                hard.append(rep)
    if hard:
        res.findings.append(
            f"found {len(hard)} push classes with strong-push cop number > 1"
        )
        res.findings.extend(serialize_arcs(og).replace("\n", "; ") for og in hard[:5])
        res.repro = hard[0]
    else:
        res.findings.append("no push class with strong-push cop number > 1")
    return res


SUITES = {
    "theorem-dag": suite_theorem_dag,
    "theorem-3degen": suite_theorem_3degen,
    "theorem-maxdeg4": suite_theorem_maxdeg4,
    "strategy-4regular": suite_strategy_4regular,
    "pushdag-props": suite_pushdag_props,
    "trap": suite_trap,
    "monotonic": suite_monotonic,
}
