"""Exact minimum-move search and the greedy upper-bound strategy.

min_moves_exact runs A* over canonically keyed contracted states.  A state
is the tuple of (component name, colour, sorted neighbour names) sorted by
name, where names are minimum original vertex ids; when the query targets a
proper vertex subset the key also records which component holds each target
vertex (states with identical quotients but different target placement play
differently).  The heuristic is the colour lower bound: one fewer than the
number of distinct colours on components meeting the target, plus one if a
required final colour is absent; it never overestimates, so the first goal
popped is optimal.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from typing import Optional

from .core import Certificate, ColouredGraph, FloodState, Move
from .errors import BudgetExceeded, InvalidParams

DEFAULT_BUDGET = 10_000_000
DEFAULT_TIME_LIMIT = None  # seconds; None = unlimited


@dataclass
class SolveQuery:
    graph: ColouredGraph
    target_set: Optional[frozenset[int]] = None
    target_colour: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    time_limit: Optional[float] = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        g = self.graph
        if self.target_set is not None:
            ts = frozenset(self.target_set)
            if not ts:
                raise InvalidParams("empty target set")
            if any(not 0 <= v < g.n for v in ts):
                raise InvalidParams("target set outside vertex range")
            self.target_set = ts if len(ts) < g.n else None
        if self.target_colour is not None and not 0 <= self.target_colour < g.c:
            raise InvalidParams(
                f"target colour {self.target_colour} outside palette {g.c}")


@dataclass
class SolveResult:
    moves: int
    certificate: Certificate
    explored_states: int


# results memoised by (contracted state, target placement, target colour);
# grows unboundedly within a process, clear_cache() resets it
_cache: dict = {}


def clear_cache() -> None:
    _cache.clear()


def _initial_state(g: ColouredGraph):
    st = FloodState.from_graph(g)
    comps = st.canonical_key()
    return st, comps


def _successor(comps, idx, d, alocs):
    """Apply (component idx -> colour d); returns (new comps, new alocs)."""
    name, _, _ = comps[idx]
    colour_of = {nm: col for nm, col, _ in comps}
    nbrs_of = {nm: nb for nm, _, nb in comps}
    merged = {name}
    for x in nbrs_of[name]:
        if colour_of[x] == d:
            merged.add(x)
    new_name = min(merged)
    new_nbrs = set()
    for m in merged:
        new_nbrs.update(nbrs_of[m])
    new_nbrs -= merged

    out = []
    for nm, col, nb in comps:
        if nm in merged:
            continue
        if any(x in merged for x in nb):
            nb = tuple(sorted((set(nb) - merged) | {new_name}))
        out.append((nm, col, nb))
    out.append((new_name, d, tuple(sorted(new_nbrs))))
    out.sort()
    new_comps = tuple(out)
    if alocs is None:
        return new_comps, None
    return new_comps, tuple(new_name if a in merged else a for a in alocs)


def _heuristic(comps, alocs, d):
    if alocs is None:
        cols = {col for _, col, _ in comps}
        multi = len(comps) > 1
    else:
        names = set(alocs)
        cols = {col for nm, col, _ in comps if nm in names}
        multi = len(names) > 1
    h = len(cols) - 1
    if d is not None and d not in cols:
        h += 1
    if multi and h < 1:
        h = 1
    return h


def _is_goal(comps, alocs, d):
    if alocs is None:
        if len(comps) > 1:
            return False
        return d is None or comps[0][1] == d
    names = set(alocs)
    if len(names) > 1:
        return False
    if d is None:
        return True
    nm = next(iter(names))
    for cand, col, _ in comps:
        if cand == nm:
            return col == d
    return False


def min_moves_exact(query: SolveQuery,
                    upper_bound: Optional[int] = None) -> SolveResult:
    """Exact minimum moves with an optimal certificate.

    ``upper_bound``, when given, must be the length of a replay-validated
    certificate for the same query; it is used only to prune.  Raises
    BudgetExceeded (carrying the best known bound) past the state budget.
    """
    g = query.graph
    d = query.target_colour
    st, comps = _initial_state(g)
    alocs = None
    if query.target_set is not None:
        alocs = tuple(sorted({st.find(v) for v in query.target_set}))

    def package(moves, explored):
        return SolveResult(len(moves),
                           Certificate(list(moves), final_colour=d,
                                       target=query.target_set),
                           explored)

    key = (comps, alocs, d)
    hit = _cache.get(key)
    if hit is not None:
        cert_moves, explored = hit
        return package(cert_moves, explored)

    greedy = _greedy_certificate(g, d)
    ub = len(greedy.moves)
    if upper_bound is not None and upper_bound < ub:
        ub = upper_bound

    if _is_goal(comps, alocs, d):
        _cache[key] = ((), 1)
        return package((), 1)

    colour_range = range(g.c)
    start_h = _heuristic(comps, alocs, d)
    heap = [(start_h, start_h, 0, comps, alocs)]
    best_g = {(comps, alocs): 0}
    parents = {(comps, alocs): None}
    explored = 0
    budget = query.budget
    deadline = (time.monotonic() + query.time_limit
                if query.time_limit is not None else None)

    while heap:
        f, h, gval, comps_c, alocs_c = heapq.heappop(heap)
        skey = (comps_c, alocs_c)
        if gval > best_g.get(skey, 1 << 60):
            continue
        explored += 1
        if explored > budget:
            raise BudgetExceeded(
                f"state budget {budget} exceeded", upper_bound=ub,
                certificate=greedy, explored=explored)
        if deadline is not None and explored % 256 == 0 \
                and time.monotonic() > deadline:
            raise BudgetExceeded(
                f"time limit {query.time_limit}s exceeded", upper_bound=ub,
                certificate=greedy, explored=explored)
        for idx, (name, col, _) in enumerate(comps_c):
            for dd in colour_range:
                if dd == col:
                    continue
                nxt, nlocs = _successor(comps_c, idx, dd, alocs_c)
                ng = gval + 1
                nkey = (nxt, nlocs)
                if ng >= best_g.get(nkey, 1 << 60):
                    continue
                nh = _heuristic(nxt, nlocs, d)
                if ng + nh > ub:
                    continue
                best_g[nkey] = ng
                parents[nkey] = (skey, Move(name, dd))
                if _is_goal(nxt, nlocs, d):
                    moves = _walk_back(parents, nkey)
                    assert len(moves) == ng
                    _cache[key] = (tuple(moves), explored)
                    return package(moves, explored)
                heapq.heappush(heap, (ng + nh, nh, ng, nxt, nlocs))

    # a drained queue is only reachable when the supplied bound pruned the
    # greedy path, i.e. it was below the true optimum
    raise InvalidParams(
        "search exhausted without reaching the goal; supplied upper_bound "
        "was below the true optimum")


def _walk_back(parents, key) -> list[Move]:
    moves = []
    while parents[key] is not None:
        key, mv = parents[key]
        moves.append(mv)
    moves.reverse()
    return moves


def _greedy_certificate(g: ColouredGraph, d: Optional[int]) -> Certificate:
    """Replay-validated upper bound: greedy flood toward d (or the most
    frequent colour)."""
    if d is None:
        best = max(range(g.c), key=lambda x: (g.colour_count(x), -x))
        cert = greedy_upper_bound(g, _target=best)
    else:
        cert = greedy_upper_bound(g, _target=d)
    return cert


def greedy_upper_bound(g: ColouredGraph, _target: Optional[int] = None) -> Certificate:
    """Flood everything toward one colour, largest component first.

    Picks d maximising N_d (unless given), then repeatedly recolours a
    non-d component adjacent to the largest d-coloured component.  The
    certificate length is at most n - max_d N_d.
    """
    if _target is None:
        d = max(range(g.c), key=lambda x: (g.colour_count(x), -x))
    else:
        d = _target
    st = FloodState.from_graph(g)
    moves: list[Move] = []
    while st.num_components > 1 or st.comp_colour[st.find(0)] != d:
        d_comps = [nm for nm, col in st.comp_colour.items() if col == d]
        if not d_comps:
            # no component has the target colour yet: seed the largest one
            seed = max(st.comp_colour, key=lambda nm: (st.comp_size[nm], -nm))
            moves.append(Move(seed, d))
            st.apply_move(moves[-1])
            continue
        big = max(d_comps, key=lambda nm: (st.comp_size[nm], -nm))
        nbrs = st.comp_adj[big]
        if not nbrs:
            break
        pick = min(nbrs)
        moves.append(Move(pick, d))
        st.apply_move(moves[-1])
    return Certificate(moves=moves, final_colour=d)
