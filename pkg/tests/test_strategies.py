import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pushcops.engine import GameVariant, PushAbility, play_match
from pushcops.errors import NotSingleSourceDagError, RobberNotTrappedError
from pushcops.graph import is_dag, validate_graph
from pushcops.pushdag import dag_push_target, normalize_single_source, single_source
from pushcops.solver import optimal_robber, solve_game
from pushcops.strategies import (
    DagChaseStrategy,
    StayRobber,
    StrongPushDagStrategy,
    TrapCaptureStrategy,
)
from pushcops.verify import random_trapped_instance

from conftest import random_oriented


def triangle():
    return validate_graph(3, [(0, 1), (1, 2), (2, 0)])


class TestTrapCapture:
    def test_rejects_untrapped_robber(self):
        with pytest.raises(RobberNotTrappedError):
            TrapCaptureStrategy(triangle(), 0, 1)  # 1 has arc 1->2

    @given(st.integers(0, 50_000), st.integers(3, 10))
    @settings(max_examples=60, deadline=None)
    def test_capture_within_twice_distance(self, seed, n):
        rng = random.Random(seed)
        og, cop, robber = random_trapped_instance(rng, n)
        strategy = TrapCaptureStrategy(og, cop, robber)
        trace = play_match(og, strategy, StayRobber(robber), GameVariant(PushAbility.WEAK, 1))
        assert trace.outcome["type"] == "captured"
        dist = og.graph.distance(cop, robber)
        assert trace.outcome["round"] <= 2 * dist
        assert strategy.pushes <= dist  # at most one push per path edge


class TestDagChase:
    def setup_method(self):
        # single-source DAG: 0 -> {1,2}, 1 -> 3, 2 -> 3
        self.og = validate_graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_rejects_non_source_start(self):
        with pytest.raises(NotSingleSourceDagError):
            DagChaseStrategy(self.og, 1)

    def test_rejects_cycles(self):
        with pytest.raises(NotSingleSourceDagError):
            DagChaseStrategy(triangle(), 0)

    def test_chase_shrinks_reach_every_move(self):
        result = solve_game(self.og, GameVariant(PushAbility.NONE, 1))
        strategy = DagChaseStrategy(self.og, 0)
        trace = play_match(
            self.og, strategy, optimal_robber(result), GameVariant(PushAbility.NONE, 1)
        )
        assert trace.outcome["type"] == "captured"
        assert all(a > b for a, b in zip(strategy.potentials, strategy.potentials[1:]))
        assert trace.outcome["round"] <= self.og.n - 1


class TestStrongPushDag:
    @given(st.integers(0, 50_000), st.integers(3, 6))
    @settings(max_examples=40, deadline=None)
    def test_captures_with_move_budget(self, seed, n):
        og = random_oriented(random.Random(seed), n)
        try:
            target = dag_push_target(og)
        except Exception:
            return  # class has no acyclic member
        result = solve_game(og, GameVariant(PushAbility.STRONG, 1))
        assert result.root_win
        strategy = StrongPushDagStrategy(og)
        trace = play_match(
            og, strategy, optimal_robber(result), GameVariant(PushAbility.STRONG, 1)
        )
        assert trace.outcome["type"] == "captured"
        budget = strategy.push_budget + (n - 1) + 2 * (n - 1)
        assert trace.outcome["round"] <= budget
        # the strategy's chosen target is the normalized acyclic class member
        dag, _ = normalize_single_source(target)
        assert is_dag(strategy.target)[0]
        assert single_source(strategy.target) == strategy.source == single_source(dag)
