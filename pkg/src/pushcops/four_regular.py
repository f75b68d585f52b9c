"""One strong-push cop against any orientation of a 4-regular graph.

The cop keeps every robber-visited vertex at out-degree <= 1.  When that
invariant cannot be maintained, one of a family of short scripted trap
endgames fires; the scripts re-read the live orientation at every step and
treat any robber deviation from a forced move as an immediate trap.  One
endgame requires the cop to physically walk toward a 17-vertex gadget around
the robber's camp before springing the trap.

Vertex labels can coincide in dense graphs, which can make a scripted line
inapplicable even though trapping is still forced.  In that case the strategy
re-derives the endgame from the live orientation: it runs an exact
backward-induction check over (orientation, robber) pairs restricted to
push-only cop actions, and follows the resulting forced-trap policy.  If no
forced trap exists there either, the strategy raises loudly instead of
guessing.
"""

from __future__ import annotations

from collections import deque

from .errors import InternalInvariantViolation, NotFourRegularError
from .engine import Game, GameState, MoveTo, PlaceCops, Push, Stay, Turn
from .graph import OrientedGraph, UnderlyingGraph, is_trapped, push_parity
from .strategies import Strategy, TrapCaptureStrategy


class _ScriptMismatch(Exception):
    """A scripted endgame met a state its case analysis does not cover."""


def _bfs_path_to_set(graph: UnderlyingGraph, start: int, targets: set[int]) -> list[int]:
    if start in targets:
        return [start]
    prev = {start: start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for b in graph.adj[a]:
                if b not in prev:
                    prev[b] = a
                    if b in targets:
                        path = [b]
                        while path[-1] != start:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(b)
        frontier = nxt
    raise AssertionError("connected graph: some target must be reachable")


def push_trap_policy(graph: UnderlyingGraph, ref_bits: int):
    """Exact solve of the push-only trapping game, ignoring the cop's position.

    States are (parity, robber vertex, mover).  The cop may pass or push any
    vertex; the robber may stay or move.  Target: robber trapped on the cop's
    turn.  Returns (levels, policy) where policy maps winning cop states to
    the vertex to push (None = pass).
    """
    n = graph.n
    parities = range(1 << max(n - 1, 0))
    out = {
        p: tuple(OrientedGraph(graph, ref_bits, p).out_neighbors(v) for v in range(n))
        for p in parities
    }

    def succs(p, r, t):
        if t == 0:
            yield (p, r, 1)
            for v in range(n):
                yield (push_parity(p, v, n), r, 1)
        else:
            yield (p, r, 0)
            for w in out[p][r]:
                yield (p, w, 0)

    level: dict[tuple[int, int, int], int] = {}
    preds: dict[tuple[int, int, int], list[tuple[int, int, int]]] = {}
    count: dict[tuple[int, int, int], int] = {}
    queue: deque = deque()
    for p in parities:
        for r in range(n):
            for t in (0, 1):
                s = (p, r, t)
                if t == 0 and not out[p][r]:
                    level[s] = 0
                    queue.append(s)
                    continue
                ss = set(succs(p, r, t))
                count[s] = len(ss)
                for q in ss:
                    preds.setdefault(q, []).append(s)
    while queue:
        q = queue.popleft()
        for s in preds.get(q, []):
            if s in level:
                continue
            if s[2] == 0:
                level[s] = level[q] + 1
                queue.append(s)
            else:
                count[s] -= 1
                if count[s] == 0:
                    level[s] = level[q] + 1
                    queue.append(s)
    policy: dict[tuple[int, int, int], int | None] = {}
    for s, lv in level.items():
        if s[2] != 0 or lv == 0:
            continue
        p, r, _ = s
        if level.get((p, r, 1)) == lv - 1:
            policy[s] = None  # pass
        else:
            policy[s] = next(
                v for v in range(n) if level.get((push_parity(p, v, n), r, 1)) == lv - 1
            )
    return level, policy


class FourRegularStrategy(Strategy):
    """Case machine keeping every robber-visited vertex at out-degree <= 1."""

    def __init__(self, og: OrientedGraph, start: int = 0):
        for v in range(og.n):
            if og.graph.degree(v) != 4:
                raise NotFourRegularError(f"vertex {v} has degree {og.graph.degree(v)}")
        self.start = start
        self.visited: set[int] = set()
        self.mode = "invariant"  # invariant | endgame | fallback | trap
        self.script = None
        self.trap: TrapCaptureStrategy | None = None
        self._fallback = None
        self.endgame_moves = 0
        self.audit_log: list[dict] = []
        # live view refreshed on every cop turn, read by the script generators
        self.cur_og: OrientedGraph | None = None
        self.cur_robber: int | None = None
        self.cur_cop: int | None = None

    # framework -----------------------------------------------------------

    def __call__(self, game: Game, state: GameState):
        if state.turn is Turn.COP_PLACEMENT:
            return PlaceCops((self.start,) * game.variant.cops)
        og = game.orientation(state)
        r = state.robber
        self.visited.add(r)
        self.cur_og, self.cur_robber, self.cur_cop = og, r, state.cops[0]
        if self.trap is not None:
            return self.trap(game, state)
        if is_trapped(og, r):
            self.mode = "trap"
            self.script = None
            self.trap = TrapCaptureStrategy(og, state.cops[0], r)
            return self.trap(game, state)
        if og.out_degree(r) == 1:
            # a push on the unique escape hatch traps the robber outright
            self.script = None
            self._note_endgame()
            agent = Push(og.out_neighbors(r)[0])
        elif self.script is not None:
            agent = self._advance_script()
        elif self.mode == "fallback":
            agent = self._fallback_action()
        else:
            agent = self._dispatch(og, r)
        self._audit(og, agent)
        return (agent,) + (Stay(),) * (game.variant.cops - 1)

    def _note_endgame(self):
        if self.mode == "invariant":
            self.endgame_moves = 0
        if self.mode not in ("fallback", "trap"):
            self.mode = "endgame"

    def _audit(self, og: OrientedGraph, agent):
        after = og.push(agent.vertex) if isinstance(agent, Push) else og
        ok = all(after.out_degree(w) <= 1 for w in self.visited)
        self.audit_log.append({"mode": self.mode, "invariant": ok})
        if self.mode == "invariant":
            if not ok:
                raise InternalInvariantViolation(
                    "visited-vertex out-degree invariant broken outside an endgame"
                )
        else:
            self.endgame_moves += 1
            if self.endgame_moves > 6 * og.n + 30:
                raise InternalInvariantViolation("trap endgame exceeded its move budget")

    def _start_script(self, gen):
        self.script = gen
        self._note_endgame()

    def _advance_script(self):
        try:
            return next(self.script)
        except (StopIteration, _ScriptMismatch):
            self.script = None
            return self._enter_fallback()

    # fallback ------------------------------------------------------------

    def _enter_fallback(self):
        self.mode = "fallback"
        if self._fallback is None:
            self._fallback = push_trap_policy(self.cur_og.graph, self.cur_og.ref_bits)
        return self._fallback_action()

    def _fallback_action(self):
        levels, policy = self._fallback
        key = (self.cur_og.parity, self.cur_robber, 0)
        if key not in levels:
            raise InternalInvariantViolation(
                "no scripted case applies and push-only trapping is not forced"
            )
        choice = policy.get(key)
        return Stay() if choice is None else Push(choice)

    # invariant-maintenance dispatch --------------------------------------

    def _dispatch(self, og: OrientedGraph, u: int):
        d = og.out_degree(u)
        if d == 4:
            self._note_endgame()
            return Push(u)
        if d == 3:
            # base case restores the invariant; the induction case corners the
            # robber between u and its now-trapped predecessor
            if all(og.push(u).out_degree(w) <= 1 for w in self.visited):
                self.mode = "invariant"
            else:
                self._note_endgame()
            return Push(u)
        x, y = sorted(og.out_neighbors(u))
        if og.graph.has_edge(x, y):
            if og.has_arc(y, x):
                x, y = y, x  # relabel so the arc runs x -> y
            self._start_script(self._claim_edge(u, x, y))
            return self._advance_script()
        if og.out_degree(x) != 2 or og.out_degree(y) != 2:
            if og.out_degree(x) == 2:
                x, y = y, x  # x takes the off-degree role
            self._start_script(self._claim_neighbor_visited(u, x, y))
            return self._advance_script()
        visx = [w for w in og.out_neighbors(x) if w in self.visited]
        visy = [w for w in og.out_neighbors(y) if w in self.visited]
        if not visx:
            self.mode = "invariant"
            return Push(x)
        if not visy:
            self.mode = "invariant"
            return Push(y)
        common = sorted(set(visx) & set(visy))
        if common:
            x1 = y1 = common[0]
        else:
            x1, y1 = min(visx), min(visy)
        x2 = next(w for w in og.out_neighbors(x) if w != x1)
        y2 = next(w for w in og.out_neighbors(y) if w != y1)
        if og.graph.has_edge(x1, x2) or og.graph.has_edge(y1, y2):
            if not og.graph.has_edge(x1, x2):
                x, y, x1, x2, y1, y2 = y, x, y1, y2, x1, x2
            self._start_script(self._nonedge_case1(u, x, y, x1, x2, y1, y2))
        else:
            self._start_script(self._nonedge_case2(u, x, y, x1, x2, y1, y2))
        return self._advance_script()

    # scripted endgames.  Each generator reads the live view between yields
    # and treats anything outside its case analysis as a mismatch.

    def _expect_robber(self, v: int):
        if self.cur_robber != v:
            raise _ScriptMismatch(f"robber expected at {v}, found at {self.cur_robber}")

    def _claim_edge(self, u, x, y):
        og = self.cur_og
        dx, dy = og.out_degree(x), og.out_degree(y)
        if dx <= 2:
            yield Push(y)
            # robber forced to x with out-degree <= 1; the trap fires generically
            raise _ScriptMismatch("robber survived the one-push edge trap")
        if dy <= 1:
            yield Push(x)
            self._expect_robber(y)
            outy = self.cur_og.out_neighbors(y)
            if len(outy) != 2 or x not in outy:
                raise _ScriptMismatch("expected the pushed x back among y's exits")
            w = next(q for q in outy if q != x)
            yield Push(w)
            self._expect_robber(x)
            if set(self.cur_og.out_neighbors(x)) != {u, w}:
                raise _ScriptMismatch("x's exits differ from {u, w}")
            yield Push(w)
            return  # robber forced back to u with a single exit
        # dx == 3, dy == 2
        yield Push(x)
        self._expect_robber(y)
        if self.cur_og.out_degree(y) != 3:
            raise _ScriptMismatch("y should have gained the flipped x arc")
        yield Push(y)
        return  # robber forced back to the now-sealed u

    def _claim_neighbor_visited(self, u, x, y):
        # x's out-degree differs from 2 and the x-y edge is absent
        yield Push(y)
        self._expect_robber(x)
        if self.cur_og.out_degree(x) != 3:
            raise _ScriptMismatch("off-degree exit should be 3 when not trapped outright")
        yield Push(x)
        return  # robber forced to u, where both exits are spent

    def _nonedge_case1(self, u, x, y, x1, x2, y1, y2):
        og = self.cur_og
        if og.has_arc(x1, x2):
            yield Push(y)
            self._expect_robber(x)
            yield Push(x2)
            return  # robber forced to x1, back to out-degree <= 1
        # the x1-x2 edge points x2 -> x1
        d1 = og.out_degree(x1)
        if x1 == y1:
            if d1 == 1:
                yield Push(y)
                self._expect_robber(x)
                yield Push(x2)
                self._expect_robber(x1)
                yield Push(x1)
                return  # robber forced to x, where both exits are spent
            if d1 == 0:
                yield Push(y)
                self._expect_robber(x)
                yield Push(y)
                r = self.cur_robber
                if r == x:
                    yield Push(x2)
                    return
                if r == x2:
                    d2 = self.cur_og.out_degree(x2)
                    if d2 == 2:
                        outs = self.cur_og.out_neighbors(x2)
                        if x1 not in outs:
                            raise _ScriptMismatch("x1 should still be an exit of x2")
                        yield Push(next(q for q in outs if q != x1))
                        return
                    if d2 == 3:
                        yield Push(x2)
                        return
                raise _ScriptMismatch("unexpected robber position after the double push")
            raise _ScriptMismatch("visited x1 should have out-degree <= 1")
        # x1 != y1
        if d1 == 0:
            yield Push(y)
            self._expect_robber(x)
            yield Push(x2)
            return  # robber forced to x1 with at most one exit
        w1 = og.out_neighbors(x1)[0]
        d2 = og.out_degree(x2)
        if d2 == 1:
            yield Push(y)
            self._expect_robber(x)
            yield Push(y)
            if self.cur_robber == x:
                yield Push(x1)
                return  # robber forced to x2, whose lone exit was spent
            raise _ScriptMismatch("x1/x2 moves should have been trapped generically")
        if d2 == 2:
            yield Push(y)
            self._expect_robber(x)
            if self.cur_og.out_degree(x2) == 3:
                yield Push(x2)
                self._expect_robber(x1)
                yield Push(w1)
                self._expect_robber(x2)
                outs = self.cur_og.out_neighbors(x2)
                if len(outs) != 2 or x not in outs:
                    raise _ScriptMismatch("x should be among x2's two exits")
                yield Push(next(q for q in outs if q != x))
                return  # robber forced back to x, nearly sealed
            yield Push(x1)
            return  # robber forced to x2 with at most one exit
        # d2 == 3
        yield Push(y)
        self._expect_robber(x)
        yield Push(x1)
        return  # robber forced to x2; any leftover exits trigger the fallback

    def _nonedge_case2(self, u, x, y, x1, x2, y1, y2):
        og = self.cur_og
        if self.cur_robber != u:
            raise _ScriptMismatch("case 2 script must start at the robber's vertex")
        if x1 != y1:
            # x1 is not among y's exits, so neither push can raise its out-degree
            yield Push(y)
            self._expect_robber(x)
            yield Push(x2)
            return
        d2, dy2 = og.out_degree(x2), og.out_degree(y2)
        if d2 != 2 or dy2 != 2:
            if d2 == 2:
                x, y, x2, y2 = y, x, y2, x2
            yield Push(y)
            self._expect_robber(x)
            yield Push(y)
            r = self.cur_robber
            if r == x:
                yield Push(x2)
                return
            if r == x2:
                if self.cur_og.out_degree(x2) == 3:
                    yield Push(x2)
                    return  # robber forced back to x with one spent exit
            raise _ScriptMismatch("unexpected robber position after the double push")
        if x2 == y2:
            yield Push(y)
            self._expect_robber(x)
            yield Push(x1)
            self._expect_robber(x2)
            yield Push(x2)
            return  # robber forced to x, where both exits are spent
        if og.graph.has_edge(y, x2):
            # the edge must run x2 -> y, so pushing y spends one of x2's exits
            yield Push(y)
            self._expect_robber(x)
            yield Push(x1)
            return  # robber forced to x2 with at most one exit
        if og.out_degree(x1) == 0:
            yield Push(y)
            self._expect_robber(x)
            yield Push(x2)
            return
        yield from self._walk_to_gadget(u, x, y, x1, x2, y2)

    def _walk_to_gadget(self, u, x, y, x1, x2, y2):
        og = self.cur_og
        g = og.graph
        v_in = og.in_neighbors(u)
        x_in = [w for w in og.in_neighbors(x) if w != u]
        y_in = [w for w in og.in_neighbors(y) if w != u]
        outs_x1 = og.out_neighbors(x1)
        if len(v_in) != 2 or len(x_in) != 1 or len(y_in) != 1 or len(outs_x1) != 1:
            raise _ScriptMismatch("gadget cast does not have the expected degrees")
        xp, yp = x_in[0], y_in[0]
        w4 = outs_x1[0]
        rest = [w for w in g.adj[x1] if w not in (x, y, w4)]
        if len(rest) != 1:
            raise _ScriptMismatch("x1's fourth neighbor is not unique")
        w5 = rest[0]
        w1s = [w for w in og.in_neighbors(x2) if w != x]
        w8s = [w for w in og.in_neighbors(y2) if w != y]
        if len(w1s) != 1 or len(w8s) != 1:
            raise _ScriptMismatch("x2/y2 in-neighborhoods do not match the gadget")
        w1, w8 = w1s[0], w8s[0]
        w2, w3 = sorted(og.out_neighbors(x2))
        w6, w7 = sorted(og.out_neighbors(y2))
        gadget = {v_in[0], v_in[1], u, xp, x, yp, y, x1, x2, y2, w1, w2, w3, w4, w5, w6, w7, w8}

        while self.cur_robber == u:
            z = self.cur_cop
            if z in gadget:
                yield from self._gadget_arrival(
                    z, u, x, y, x1, x2, y2, v_in, xp, yp, w1, w2, w3, w4, w5, w6, w7, w8
                )
                return
            nxt = _bfs_path_to_set(g, z, gadget)[1]
            if self.cur_og.has_arc(z, nxt):
                yield MoveTo(nxt)
            else:
                yield Push(z)
        # the robber left its camp while no gadget vertex was pushed
        r = self.cur_robber
        if r == x:
            yield Push(x2)
            return  # robber forced to x1, whose lone exit w4 is next
        if r == y:
            yield Push(y2)
            return  # robber forced to x1 likewise
        raise _ScriptMismatch("robber left the camp through an unexpected exit")

    def _gadget_arrival(self, t, u, x, y, x1, x2, y2, v_in, xp, yp, w1, w2, w3, w4, w5, w6, w7, w8):
        def check_arc(a, b):
            if not self.cur_og.has_arc(a, b):
                raise _ScriptMismatch(f"expected arc {a}->{b} for the arrival endgame")

        if t in v_in:
            check_arc(t, u)
            yield MoveTo(u)  # capture
            raise _ScriptMismatch("capture move did not end the match")
        if t == x or t == xp or t == x1 or t == x2 or t in (w5, w1, w4, w2, w3):
            yield Push(y)
            if t == x:
                raise _ScriptMismatch("robber should have run onto the cop at x")
            self._expect_robber(x)
            if t == xp:
                check_arc(t, x)
                yield MoveTo(x)  # capture
                raise _ScriptMismatch("capture move did not end the match")
            if t in (x1, w5, w4):
                yield Push(x2)
                if t == x1:
                    return  # robber forced onto the cop or trapped generically
                self._expect_robber(x1)
                if t == w5:
                    check_arc(t, x1)
                    yield MoveTo(x1)  # capture
                    raise _ScriptMismatch("capture move did not end the match")
                yield Push(y)  # t == w4: restores x1's lone exit toward the cop
                return
            # t in (x2, w1, w2, w3)
            yield Push(x1)
            if t == x2:
                return
            self._expect_robber(x2)
            if t == w1:
                check_arc(t, x2)
                yield MoveTo(x2)  # capture
                raise _ScriptMismatch("capture move did not end the match")
            yield Push(w3 if t == w2 else w2)
            return  # robber forced onto the cop or trapped generically
        if t == y or t == yp or t == y2 or t in (w8, w6, w7):
            yield Push(x)
            if t == y:
                raise _ScriptMismatch("robber should have run onto the cop at y")
            self._expect_robber(y)
            if t == yp:
                check_arc(t, y)
                yield MoveTo(y)  # capture
                raise _ScriptMismatch("capture move did not end the match")
            yield Push(x1)
            if t == y2:
                return
            self._expect_robber(y2)
            if t == w8:
                check_arc(t, y2)
                yield MoveTo(y2)  # capture
                raise _ScriptMismatch("capture move did not end the match")
            yield Push(w7 if t == w6 else w6)
            return
        raise _ScriptMismatch(f"arrival vertex {t} has no scripted role")


def four_regular_strategy(og: OrientedGraph, start: int = 0) -> FourRegularStrategy:
    return FourRegularStrategy(og, start)
