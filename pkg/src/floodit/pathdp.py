"""Polynomial solvers for paths and cycles.

The path solver is an interval DP over the contracted colour sequence:

    f(i,i,d) = [colour(i) != d]
    f(i,j,d) = min( min_{d' != d} f(i,j,d') + 1,
                    min_{i <= k < j} f(i,k,d) + f(k+1,j,d) )

Only two values per interval matter: g(i,j) = min_d f(i,j,d) and the set
D(i,j) of colours attaining it (f is g or g+1 for every other colour, since
one extra recolouring always converts).  The tables store g and D as an int
and a bitmask.  This recurrence is not spelled out in full anywhere we could
copy it from, so it is gated by an exhaustive equivalence test against the
breadth-first exact solver on all short contracted sequences.

The cycle solver takes the minimum of the path solver over all single edge
deletions (every spanning tree of a cycle is a path).
"""

from __future__ import annotations

import numpy as np

from .core import Certificate, ColouredGraph, Move, contract
from .errors import InvalidParams, NotACycle, NotAPath

try:
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def _njit(*a, **k):
        def deco(fn):
            return fn
        return deco


@_njit(cache=True)
def _dp_tables_kernel(seq, g, d):
    n = seq.shape[0]
    for i in range(n):
        d[i, i] = 1 << seq[i]
    for span in range(1, n):
        for i in range(0, n - span):
            j = i + span
            gbest = np.int64(1) << 60
            mask = np.int64(0)
            for k in range(i, j):
                base = g[i, k] + g[k + 1, j]
                inter = d[i, k] & d[k + 1, j]
                if inter != 0:
                    cand = base
                    contrib = inter
                else:
                    cand = base + 1
                    contrib = d[i, k] | d[k + 1, j]
                if cand < gbest:
                    gbest = cand
                    mask = contrib
                elif cand == gbest:
                    mask |= contrib
            g[i, j] = gbest
            d[i, j] = mask


def _dp_tables_python(seq, g, d):
    n = len(seq)
    for i in range(n):
        d[i, i] = 1 << seq[i]
    for span in range(1, n):
        for i in range(0, n - span):
            j = i + span
            gbest = 1 << 60
            mask = 0
            for k in range(i, j):
                base = g[i, k] + g[k + 1, j]
                inter = d[i, k] & d[k + 1, j]
                if inter:
                    cand = base
                    contrib = inter
                else:
                    cand = base + 1
                    contrib = d[i, k] | d[k + 1, j]
                if cand < gbest:
                    gbest = cand
                    mask = contrib
                elif cand == gbest:
                    mask |= contrib
            g[i, j] = gbest
            d[i, j] = mask


def solve_sequence(seq: list[int], c: int):
    """DP tables for a contracted colour sequence.

    Returns (g, d) arrays; g[0,n-1] is the free minimum and the mask
    d[0,n-1] holds the colours attaining it.
    """
    n = len(seq)
    if n == 0:
        raise InvalidParams("empty sequence")
    if c > 60:
        raise InvalidParams("palette too large for bitmask tables")
    arr = np.asarray(seq, dtype=np.int64)
    g = np.zeros((n, n), dtype=np.int64)
    d = np.zeros((n, n), dtype=np.int64)
    if _HAVE_NUMBA and n > 12:
        _dp_tables_kernel(arr, g, d)
    else:
        _dp_tables_python(arr, g, d)
    return g, d


def sequence_min_moves(seq: list[int], c: int, colour: int | None = None) -> int:
    g, d = solve_sequence(seq, c)
    n = len(seq)
    base = int(g[0, n - 1])
    if colour is None:
        return base
    if not 0 <= colour < c:
        raise InvalidParams(f"target colour {colour} outside palette {c}")
    return base + (0 if (int(d[0, n - 1]) >> colour) & 1 else 1)


def sequence_certificate(seq: list[int], c: int,
                         colour: int | None = None) -> list[tuple[int, int]]:
    """Optimal move list for the sequence as (position, colour) pairs.

    Positions index the contracted sequence; each listed move recolours the
    run containing that position.  Length equals sequence_min_moves.
    """
    g, d = solve_sequence(seq, c)
    n = len(seq)
    if colour is None:
        colour = _lowest_bit(int(d[0, n - 1]))

    out: list[tuple[int, int]] = []

    def emit(i: int, j: int, dd: int) -> None:
        if i == j:
            if seq[i] != dd:
                out.append((i, dd))
            return
        gij = int(g[i, j])
        if (int(d[i, j]) >> dd) & 1:
            for k in range(i, j):
                fl = int(g[i, k]) + (0 if (int(d[i, k]) >> dd) & 1 else 1)
                fr = int(g[k + 1, j]) + (0 if (int(d[k + 1, j]) >> dd) & 1 else 1)
                if fl + fr == gij:
                    emit(i, k, dd)
                    emit(k + 1, j, dd)
                    return
            raise AssertionError("split realisation missing")
        alt = _lowest_bit(int(d[i, j]))
        emit(i, j, alt)
        out.append((i, dd))

    emit(0, n - 1, colour)
    return out


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def contracted_sequence(seq: list[int]) -> tuple[list[int], list[int]]:
    """Collapse equal consecutive entries; returns (runs, run index of each
    original position)."""
    runs: list[int] = []
    where: list[int] = []
    for x in seq:
        if not runs or runs[-1] != x:
            runs.append(x)
        where.append(len(runs) - 1)
    return runs, where


def path_order(g: ColouredGraph) -> list[int]:
    """Vertex order along a path graph; NotAPath otherwise."""
    if g.n == 1:
        return [0]
    deg = [len(a) for a in g.adj]
    ends = [v for v in range(g.n) if deg[v] == 1]
    if len(ends) != 2 or any(x > 2 for x in deg) or len(g.edges) != g.n - 1:
        raise NotAPath("graph is not a path")
    order = [min(ends)]
    prev = -1
    while len(order) < g.n:
        cur = order[-1]
        nxt = [w for w in g.adj[cur] if w != prev]
        prev = cur
        order.append(nxt[0])
    return order


def cycle_order(g: ColouredGraph) -> list[int]:
    """Vertex order around a cycle graph; NotACycle otherwise."""
    if g.n < 3 or len(g.edges) != g.n or any(len(a) != 2 for a in g.adj):
        raise NotACycle("graph is not a cycle")
    order = [0, g.adj[0][0]]
    while len(order) < g.n:
        cur, prev = order[-1], order[-2]
        nxt = [w for w in g.adj[cur] if w != prev]
        order.append(nxt[0])
    return order


def path_min_moves(p: ColouredGraph, colour: int | None = None) -> int:
    """Exact minimum for a path (input must contract to a path)."""
    q, _ = contract(p)
    order = path_order(q)
    seq = [q.colours[v] for v in order]
    return sequence_min_moves(seq, p.c, colour)


def path_certificate(p: ColouredGraph, colour: int | None = None) -> Certificate:
    """Optimal certificate for a path, with moves at original vertex ids."""
    q, mapping = contract(p)
    order = path_order(q)
    seq = [q.colours[v] for v in order]
    moves_pos = sequence_certificate(seq, p.c, colour)
    # a contracted position is any original vertex mapping into it
    rep: dict[int, int] = {}
    for v in range(p.n):
        rep.setdefault(mapping[v], v)
    pos_to_orig = [rep[order[i]] for i in range(len(order))]
    moves = [Move(pos_to_orig[i], d) for i, d in moves_pos]
    return Certificate(moves=moves, final_colour=colour)


def cycle_min_moves(g: ColouredGraph, colour: int | None = None) -> int:
    """Exact minimum for a cycle: best path solve over all edge deletions.

    A path input is delegated straight to the path solver.
    """
    try:
        order = cycle_order(g)
    except NotACycle:
        try:
            path_order(g)
        except NotAPath:
            raise NotACycle("graph is neither a cycle nor a path") from None
        return path_min_moves(g, colour)
    seq = [g.colours[v] for v in order]
    n = len(seq)
    best = None
    for cut in range(n):
        rotated = seq[cut + 1:] + seq[:cut + 1]
        runs, _ = contracted_sequence(rotated)
        val = sequence_min_moves(runs, g.c, colour)
        if best is None or val < best:
            best = val
    return best
