"""Certificate-emitting strategies for the constructive flooding arguments.

Every strategy simulates its own moves on a FloodState while emitting them,
reading colours back from the engine rather than trusting derived state, so
certificates are validated by construction and again by replay in tests.
Moves always reference original vertex ids.

The blow-up strategies work on "slots": ordered lists of original vertices.
Initially slots are the blow-up classes; merged regions become single-
component slots.  Consecutive slots are always mutually adjacent (a class is
completely joined to its neighbour classes, and a merged region contains a
full boundary class), which is the only structural fact the flooding
arguments use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Certificate, ColouredGraph, FloodState, Move,
                   eccentricity_centre)
from .errors import (NotAPathColouring, NotATransversal, PreconditionViolated)
from .generators import BlowupStructure, is_shifted_rainbow

__all__ = [
    "BlowupStructure",
    "GrdDecomposition",
    "arbitrary_blowup_strategy",
    "dominating_path_strategy",
    "grd_decompose",
    "path_colouring_strategy",
    "radius_strategy",
    "rainbow_blowup_strategy",
    "theta",
    "transversal",
]


@dataclass
class GrdDecomposition:
    """Greedy rainbow decomposition of a class colour sequence.

    ``segments`` is a list of (start, length) pairs over 0-based class
    positions; ``witnesses`` holds, for each non-final segment i, the
    position x_i inside it with f(x_i) = f(start of segment i+1) and
    max(s_i, s_{i+1}-c+1) <= x_i <= s_{i+1}-1.
    """

    segments: list[tuple[int, int]]
    witnesses: list[int]


class _Emitter:
    """Applies moves to the state as they are recorded, skipping no-ops."""

    def __init__(self, state: FloodState):
        self.state = state
        self.moves: list[Move] = []

    def __call__(self, vertex: int, colour: int) -> None:
        if self.state.colour_of(vertex) != colour:
            self.moves.append(Move(vertex, colour))
            self.state.apply_move(self.moves[-1])


def _finish(state: FloodState, emitter: _Emitter) -> Certificate:
    if not state.is_flooded:
        raise AssertionError("strategy failed to flood; engine disagrees")
    final = next(iter(state.comp_colour.values()))
    return Certificate(moves=emitter.moves, final_colour=final)


# ------------------------------------------------------------------ radius

def radius_strategy(g: ColouredGraph) -> Certificate:
    """Flood from an eccentricity centre, layer by layer.

    For each BFS layer, cycle the centre's component through the colours
    still present in that layer; vertices whose colour matches the current
    component are already attached.  At most c-1 moves per layer, so the
    certificate length is at most (c-1) * radius(g).
    """
    centre, r, dist = eccentricity_centre(g)
    state = FloodState.from_graph(g)
    emit = _Emitter(state)
    layers: dict[int, list[int]] = {}
    for v in range(g.n):
        layers.setdefault(dist[v], []).append(v)
    for i in range(1, r + 1):
        root = state.find(centre)
        pending = {state.colour_of(v) for v in layers.get(i, ())
                   if state.find(v) != root}
        pending.discard(state.comp_colour[root])
        for d in sorted(pending):
            emit(centre, d)
        root = state.find(centre)
        assert all(state.find(v) == root for v in layers.get(i, ()))
    return _finish(state, emit)


# -------------------------------------------------------- slot plumbing

def _class_colour_sequence(g: ColouredGraph, b: BlowupStructure) -> list[int]:
    f = []
    for cls in b.classes:
        cols = {g.colours[v] for v in cls}
        if len(cols) != 1:
            raise NotAPathColouring(
                f"class {cls} carries colours {sorted(cols)}")
        f.append(cols.pop())
    return f


def _slot_colours(state: FloodState, slot: list[int]) -> set[int]:
    return {state.colour_of(v) for v in slot}


def _normalize_slots(state: FloodState, slots: list[list[int]]) -> list[list[int]]:
    """Merge consecutive slots whose component sets intersect (the engine
    already merged them into one region)."""
    out = [list(slots[0])]
    prev = {state.find(v) for v in slots[0]}
    for slot in slots[1:]:
        cur = {state.find(v) for v in slot}
        if cur & prev:
            out[-1].extend(slot)
            prev |= cur
        else:
            out.append(list(slot))
            prev = cur
    return out


def transversal(b: BlowupStructure) -> list[int]:
    """Lowest-id vertex of each class: a path meeting every class once."""
    return [cls[0] for cls in b.classes]


def _cycle_remaining(state: FloodState, anchor: int, emit: _Emitter) -> None:
    """Cycle the anchor's component through every colour still present
    outside it; in a blow-up every outside component is adjacent, so each
    colour visit absorbs all of its holders."""
    root = state.find(anchor)
    outside = sorted({col for name, col in state.comp_colour.items()
                      if name != root})
    for d in outside:
        emit(anchor, d)


def _consecutive_runs(state: FloodState, q: list[int]) -> list[tuple[int, int]]:
    """Group consecutive q-vertices by component: (representative, colour)
    per run.  Adjacent runs always differ in colour (equal-coloured adjacent
    components are already contracted), so the run colours are exactly the
    contracted colour sequence of q as a standalone path."""
    runs: list[tuple[int, int]] = []
    prev = -1
    for v in q:
        root = state.find(v)
        if root != prev:
            runs.append((v, state.comp_colour[root]))
            prev = root
    return runs


def _greedy_runs_flood(state: FloodState, q: list[int], emit: _Emitter,
                       target: int | None = None) -> None:
    """Make all of q one colour: recolour every run of q not already the
    target (default: the most frequent run colour)."""
    runs = _consecutive_runs(state, q)
    if target is None:
        counts: dict[int, int] = {}
        for _, col in runs:
            counts[col] = counts.get(col, 0) + 1
        target = max(counts, key=lambda d: (counts[d], -d))
    for v, _ in runs:
        emit(v, target)


def _transversal_cycle_finish(state: FloodState, slots: list[list[int]],
                              emit: _Emitter,
                              target: int | None = None) -> None:
    q = [slot[0] for slot in slots]
    _greedy_runs_flood(state, q, emit, target)
    _cycle_remaining(state, q[0], emit)


# ------------------------------------------------- rainbow blow-up flood

def _check_rainbow_slots(f: list[int], c: int) -> None:
    if not is_shifted_rainbow(f, c, shift=0):
        raise PreconditionViolated("class colours are not a rainbow sequence")


def _rainbow_flood(state: FloodState, slots: list[list[int]], c: int,
                   emit: _Emitter) -> None:
    """Flood a rainbow-coloured slot path with t - ceil(t/c) moves.

    Peels 2c slots with 2c-2 moves while t >= 3c+2, then plays the matching
    base case.  Move colours are the slot colours at fixed offsets, so any
    palette permutation is handled uniformly.
    """
    while True:
        f = [state.colour_of(s[0]) for s in slots]
        t = len(slots)
        if t >= 3 * c + 2:
            v = slots[c][0]
            seq = ([f[j] for j in range(c + 1, 2 * c)]
                   + [f[j] for j in range(c - 2, 0, -1)]
                   + [f[0]])
            for d in seq:
                emit(v, d)
            merged = [x for s in slots[:2 * c + 1] for x in s]
            slots = [merged] + slots[2 * c + 1:]
            continue
        if c + 2 <= t <= 2 * c:
            v = slots[1][0]
            seq = ([f[j] for j in range(2, c + 1)]
                   + [f[j] for j in range(c + 1, t)])
        elif 2 * c + 1 <= t <= 3 * c:
            v = slots[c][0]
            seq = ([f[j] for j in range(c + 1, 2 * c)]
                   + [f[j] for j in range(c - 2, 0, -1)]
                   + [f[0]]
                   + [f[j] for j in range(2 * c + 1, t)])
        elif t == 3 * c + 1:
            v = slots[c + 1][0]
            seq = ([f[j] for j in range(c + 2, 2 * c + 1)]
                   + [f[j] for j in range(c - 1, 0, -1)]
                   + [f[j] for j in range(2 * c + 2, 3 * c + 1)])
        else:
            raise AssertionError(f"uncovered window t={t}")
        for d in seq:
            emit(v, d)
        return


def rainbow_blowup_strategy(g: ColouredGraph, b: BlowupStructure) -> Certificate:
    """The explicit rainbow flooding sequence; length <= t - ceil(t/c)."""
    if b.base != "path":
        raise PreconditionViolated("rainbow strategy needs a path blow-up")
    c = g.c
    f = _class_colour_sequence(g, b)
    if b.t < c + 2:
        raise PreconditionViolated(f"needs t >= c+2, got t={b.t}, c={c}")
    _check_rainbow_slots(f, c)
    state = FloodState.from_graph(g)
    emit = _Emitter(state)
    _rainbow_flood(state, [list(cls) for cls in b.classes], c, emit)
    return _finish(state, emit)


# ------------------------------------------- greedy rainbow decomposition

def _grd(f: list[int], c: int) -> tuple[list[tuple[int, int]], list[int]]:
    segments: list[tuple[int, int]] = []
    witnesses: list[int] = []
    t = len(f)
    i = 0
    while i < t:
        start = i
        seen: set[int] = set()
        j = i
        while j < t:
            if j - start < c:
                if f[j] in seen:
                    break
                seen.add(f[j])
            elif f[j] != f[j - c]:
                break
            j += 1
        segments.append((start, j - start))
        if j < t:
            lo = max(start, j - c + 1)
            for x in range(j - 1, lo - 1, -1):
                if f[x] == f[j]:
                    witnesses.append(x)
                    break
            else:
                raise AssertionError("greedy maximality guarantees a witness")
        i = j
    return segments, witnesses


def grd_decompose(g: ColouredGraph, b: BlowupStructure) -> GrdDecomposition:
    """Greedy maximal rainbow segments of the class colour sequence."""
    f = _class_colour_sequence(g, b)
    for a, bb in zip(f, f[1:]):
        if a == bb:
            raise NotAPathColouring(
                "consecutive classes share a colour; contract first")
    segments, witnesses = _grd(f, g.c)
    return GrdDecomposition(segments, witnesses)


def theta(g: ColouredGraph, b: BlowupStructure) -> int:
    """Number of classes the colouring is not constant on."""
    count = 0
    for cls in b.classes:
        if len({g.colours[v] for v in cls}) > 1:
            count += 1
    return count


# --------------------------------------------------- dominating path

def dominating_path_strategy(g: ColouredGraph, b: BlowupStructure,
                             q: list[int]) -> Certificate:
    """Flood the transversal path optimally, then cycle the remaining
    colours; length <= m(Q) + (c-1)."""
    from . import pathdp

    if len(q) != b.t:
        raise NotATransversal("need exactly one vertex per class")
    for v, cls in zip(q, b.classes):
        if v not in cls:
            raise NotATransversal(f"vertex {v} not in its class")
    state = FloodState.from_graph(g)
    emit = _Emitter(state)
    guard = 0
    while True:
        runs = _consecutive_runs(state, q)
        if len({state.find(v) for v, _ in runs}) == 1:
            break
        colours = [col for _, col in runs]
        for pos, d in pathdp.sequence_certificate(colours, g.c):
            emit(runs[pos][0], d)
        guard += 1
        assert guard <= g.n, "transversal flood failed to converge"
    _cycle_remaining(state, q[0], emit)
    return _finish(state, emit)


# ------------------------------------------------ path colouring flood

def _pick_repair_segment(segments, witnesses, c: int):
    """Longest non-final segment of length >= 2c (lowest start on ties)."""
    best = None
    for i in range(len(segments) - 1):
        start, length = segments[i]
        if length >= 2 * c:
            if best is None or length > segments[best][1]:
                best = i
    return best


def _boundary_repair(state: FloodState, slots: list[list[int]],
                     f: list[int], segments, witnesses, i: int, c: int,
                     emit: _Emitter) -> list[list[int]]:
    """Flood the window around one greedy-decomposition boundary.

    The witness x has f(x) = f(b) for the boundary b, and f(x-c) = f(x)
    inside the rainbow segment; flooding slots x-c..b to colour f(x) costs
    (b - x + c) - 2 moves and removes b - x + c slots.
    """
    start, length = segments[i]
    b = segments[i + 1][0]
    x = witnesses[i]
    assert f[x] == f[b] and x - c >= start and x <= b - 2
    v = slots[x][0]
    for j in range(x - 1, x - c, -1):
        emit(v, f[j])
    for j in range(x + 2, b + 1):
        emit(v, f[j])
    merged = [u for s in slots[x - c:b + 1] for u in s]
    return slots[:x - c] + [merged] + slots[b + 1:]


def _many_segment_finish(state: FloodState, slots: list[list[int]],
                         f: list[int], segments, witnesses, c: int,
                         emit: _Emitter) -> None:
    """Cheaply flood alternating boundary windows, then flood the whole
    transversal greedily and cycle the leftovers.

    Windows are processed right to left: a window flood can spill one
    position leftward only onto same-coloured material, so unprocessed
    anchors keep their colours.
    """
    q = [slot[0] for slot in slots]
    chosen = [i for i in range(0, len(segments) - 1, 2)]
    for i in reversed(chosen):
        target = f[witnesses[i]]
        for j in range(witnesses[i], segments[i + 1][0] + 1):
            emit(q[j], target)
    _greedy_runs_flood(state, q, emit)
    _cycle_remaining(state, q[0], emit)


def _flood_path_coloured_slots(state: FloodState, slots: list[list[int]],
                               c: int, emit: _Emitter) -> None:
    """Flood a path-coloured slot sequence; the certificate stays within
    t - ceil(t/c) moves whenever t >= 2c^2(c-1)^3 (and never exceeds it by
    more than the tiny-rainbow corner allows).

    Loop: recompute the greedy rainbow decomposition from live colours;
    one segment means rainbow (explicit flood); many segments means the
    dominating-path finish is affordable; otherwise repair one boundary
    (each repair costs 2 moves less than the slots it removes, which is
    exactly what pays for the finish after c(c-1) of them).
    """
    repairs = 0
    while True:
        slots = _normalize_slots(state, slots)
        t = len(slots)
        if state.num_components == 1:
            return
        f = []
        for s in slots:
            cols = _slot_colours(state, s)
            assert len(cols) == 1, "slot lost colour constancy"
            f.append(cols.pop())
        segments, witnesses = _grd(f, c)
        r = len(segments)
        if r == 1:
            if t >= c + 2:
                _rainbow_flood(state, slots, c, emit)
            else:
                _transversal_cycle_finish(state, slots, emit)
            return
        if r > 2 * c * (c - 1):
            _many_segment_finish(state, slots, f, segments, witnesses, c, emit)
            return
        if repairs >= c * (c - 1):
            _transversal_cycle_finish(state, slots, emit)
            return
        pick = _pick_repair_segment(segments, witnesses, c)
        if pick is None:
            slots = slots[::-1]
            f = f[::-1]
            segments, witnesses = _grd(f, c)
            pick = _pick_repair_segment(segments, witnesses, c)
            if pick is None:
                _transversal_cycle_finish(state, slots, emit)
                return
        slots = _boundary_repair(state, slots, f, segments, witnesses,
                                 pick, c, emit)
        repairs += 1


def path_colouring_strategy(g: ColouredGraph, b: BlowupStructure) -> Certificate:
    """Flooding certificate for any path colouring of a long path blow-up;
    length <= t - ceil(t/c) for t >= 2c^2(c-1)^3, c >= 3."""
    c = g.c
    if c < 3:
        raise PreconditionViolated("needs c >= 3")
    if b.base != "path":
        raise PreconditionViolated("needs a path blow-up")
    if b.t < 2 * c * c * (c - 1) ** 3:
        raise PreconditionViolated(
            f"needs t >= 2c^2(c-1)^3 = {2 * c * c * (c - 1) ** 3}, got {b.t}")
    _class_colour_sequence(g, b)  # raises NotAPathColouring if not constant
    state = FloodState.from_graph(g)
    emit = _Emitter(state)
    _flood_path_coloured_slots(state, [list(cls) for cls in b.classes], c, emit)
    return _finish(state, emit)


# ------------------------------------------------ arbitrary colourings

def _right_nodes(state: FloodState, slots: list[list[int]], i: int,
                 want: int) -> list[int]:
    """Representatives of the first ``want`` distinct components right of
    slot i, in order of first appearance."""
    reps: list[int] = []
    seen: set[int] = set()
    for slot in slots[i + 1:]:
        for v in slot:
            root = state.find(v)
            if root not in seen:
                seen.add(root)
                reps.append(v)
                if len(reps) == want:
                    return reps
    return reps


def _theta_dominating_finish(state: FloodState, classes, emit: _Emitter) -> None:
    """When many classes are non-constant, some colour hits enough classes
    that a class transversal preferring it floods within budget.

    The transversal runs over the original classes (one vertex each), so
    consecutive picks are always adjacent regardless of how components have
    merged."""
    counts: dict[int, int] = {}
    for cls in classes:
        for col in _slot_colours(state, list(cls)):
            counts[col] = counts.get(col, 0) + 1
    target = max(counts, key=lambda d: (counts[d], -d))
    q = []
    for cls in classes:
        pick = next((v for v in cls if state.colour_of(v) == target), cls[0])
        q.append(pick)
    _greedy_runs_flood(state, q, emit, target)
    _cycle_remaining(state, q[0], emit)


def _class_transversal_finish(state: FloodState, classes, emit: _Emitter) -> None:
    q = [cls[0] for cls in classes]
    _greedy_runs_flood(state, q, emit)
    _cycle_remaining(state, q[0], emit)


def _pick_theta_slot(colour_sets: list[set[int]], need: int):
    """A non-constant slot with ``need`` constant slots directly on one
    side; returns (index, reversed?) or None."""
    t = len(colour_sets)
    const = [len(s) == 1 for s in colour_sets]
    run = [0] * (t + 1)
    for j in range(t - 1, -1, -1):
        run[j] = run[j + 1] + 1 if const[j] else 0
    for i in range(t):
        if not const[i] and run[i + 1] >= need:
            return i, False
    run_left = 0
    best = None
    for i in range(t):
        if const[i]:
            run_left += 1
        else:
            if run_left >= need and best is None:
                best = i
            run_left = 0
    if best is not None:
        return best, True
    return None


def _flood_arbitrary_slots(state: FloodState, classes, c: int,
                           emit: _Emitter) -> None:
    """Reduce the number of non-constant classes one at a time.

    Each round floods a run of blocks beside a non-constant class into
    single components, then repeatedly performs efficient flooding
    sequences on the c components to its right until every colour on the
    class appears there, at which point c-1 moves absorb the whole class.
    Transversal finishes run over the original classes.
    """
    block_len = 2 * c ** 5 + 1
    n_blocks = c * c * (c - 1) + 1
    need = block_len * n_blocks
    slots = [list(cls) for cls in classes]
    prev_sig = None
    while True:
        slots = _normalize_slots(state, slots)
        if state.num_components == 1:
            return
        if len(slots) == 1:
            # one region by adjacency, but stray components remain inside it
            _class_transversal_finish(state, classes, emit)
            return
        theta_now = sum(
            1 for cls in classes
            if len({state.colour_of(v) for v in cls}) > 1)
        if theta_now == 0:
            _flood_path_coloured_slots(state, slots, c, emit)
            return
        if theta_now >= c * (c - 1):
            _theta_dominating_finish(state, classes, emit)
            return
        sig = (theta_now, state.num_components)
        if prev_sig is not None and sig >= prev_sig:
            _theta_dominating_finish(state, classes, emit)
            return
        prev_sig = sig
        colour_sets = [_slot_colours(state, s) for s in slots]
        picked = _pick_theta_slot(colour_sets, need)
        if picked is None:
            # below the proven threshold: flood best-effort
            _theta_dominating_finish(state, classes, emit)
            return
        i, flip = picked
        if flip:
            slots = slots[::-1]
            i = len(slots) - 1 - i
        # flood each block (planned against live colours) to one component
        flooded_reps: list[int] = []
        for k in range(n_blocks):
            lo = i + 1 + k * block_len
            hi = lo + block_len
            prev = {state.find(v) for v in flooded_reps}
            sub: list[list[int]] = []
            for slot in slots[lo:hi]:
                rest = [v for v in slot if state.find(v) not in prev]
                if rest:
                    sub.append(rest)
            if not sub:
                continue
            sub = _normalize_slots(state, sub)
            _flood_path_coloured_slots(state, sub, c, emit)
            flooded_reps.append(sub[0][0])
        # efficient flooding sequences at slot i
        floods = 0
        while True:
            own = {state.find(v) for v in slots[i]}
            r_set = {state.comp_colour[root] for root in own}
            if len(r_set) <= 1:
                break
            nodes = _right_nodes(state, slots, i, c)
            if len(nodes) < c:
                _theta_dominating_finish(state, classes, emit)
                return
            node_cols = [state.colour_of(v) for v in nodes]
            if r_set <= set(node_cols):
                v0 = nodes[0]
                for nd in nodes[1:]:
                    emit(v0, state.colour_of(nd))
                break
            repeat = next(d for d in sorted(set(node_cols))
                          if node_cols.count(d) >= 2)
            for nd in nodes:
                emit(nd, repeat)
            floods += 1
            if floods >= c * (c - 1):
                _class_transversal_finish(state, classes, emit)
                return
        # theta dropped; go round again


def arbitrary_blowup_strategy(g: ColouredGraph, b: BlowupStructure) -> Certificate:
    """Flooding certificate for any colouring of a path or cycle blow-up.

    Guaranteed length <= t - ceil(t/c) when t >= 2c^10 (for cycles, via a
    spanning path blow-up); below the threshold the certificate still
    floods, best-effort.
    """
    c = g.c
    state = FloodState.from_graph(g)
    emit = _Emitter(state)
    if c < 3:
        _class_transversal_finish(state, b.classes, emit)
        return _finish(state, emit)
    _flood_arbitrary_slots(state, b.classes, c, emit)
    return _finish(state, emit)
