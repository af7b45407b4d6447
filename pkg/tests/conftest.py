"""Shared helpers: a brute-force flood oracle independent of the solvers."""

from floodit import FloodState, Move, build_coloured_graph


def brute_force_min(g, limit, colour=None, target=None):
    """Exhaustive breadth-first search over raw move sequences.

    Independent of the A* solver and the path DP: no canonical hashing, no
    heuristics, no pruning beyond deduplicating identical engine states.
    Returns the minimum number of moves, or None if above ``limit``.
    """
    def done(st):
        if target is None:
            if not st.is_flooded:
                return False
            return colour is None or next(iter(st.comp_colour.values())) == colour
        roots = {st.find(v) for v in target}
        if len(roots) > 1:
            return False
        return colour is None or st.comp_colour[roots.pop()] == colour

    def keyed(st):
        base = st.canonical_key()
        if target is None:
            return base
        return base, tuple(sorted({st.find(v) for v in target}))

    start = FloodState.from_graph(g)
    if done(start):
        return 0
    seen = {keyed(start)}
    frontier = [start]
    for depth in range(1, limit + 1):
        nxt = []
        for st in frontier:
            for name in list(st.comp_colour):
                for d in range(g.c):
                    if st.comp_colour[name] == d:
                        continue
                    s2 = st.copy()
                    s2.apply_move(Move(name, d))
                    if done(s2):
                        return depth
                    key = keyed(s2)
                    if key not in seen:
                        seen.add(key)
                        nxt.append(s2)
        frontier = nxt
    return None


def dense_graph(n, edges, raw_colours, c=None):
    """Build a graph after relabelling colours into first-occurrence order."""
    mapping = {}
    for x in raw_colours:
        mapping.setdefault(x, len(mapping))
    return build_coloured_graph(n, edges, [mapping[x] for x in raw_colours],
                                c=c)
