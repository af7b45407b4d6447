"""Worst-colouring search M_c(G), closed-form predictions and theorem
verification campaigns.

M_c(G) is the maximum of the free flood number over all surjective
c-colourings.  Enumeration runs over one representative per orbit of
colour permutations (colours in first-occurrence order); this is exact
because flood numbers are invariant under palette bijections, a property
the solver test suite checks independently.  Every campaign seed and
default grid lives in DEFAULT_GRIDS so runs are reproducible.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from math import ceil
from multiprocessing import Pool
from typing import Iterator, Optional

from . import generators as gen
from . import pathdp
from .core import ColouredGraph, build_coloured_graph, play_certificate, radius
from .errors import InvalidParams, TooManyColours, UnknownClaim
from .solvers import SolveQuery, min_moves_exact


@dataclass
class ExtremalResult:
    value: int
    witness_colouring: tuple[int, ...]
    colourings_evaluated: int


@dataclass
class Report:
    claim: str
    params: dict
    instances: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps({
            "claim": self.claim,
            "params": {k: repr(v) if isinstance(v, range) else v
                       for k, v in self.params.items()},
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
        }, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.claim}: {self.instances} instances, "
                f"{len(self.failures)} failures")


def _shape_n(shape) -> int:
    return shape.n


def enumerate_surjective_colourings(shape, c: int) -> Iterator[tuple[int, ...]]:
    """Surjective colourings up to colour permutation.

    Canonical representative: colours appear in first-occurrence order
    0,1,2,... (restricted growth strings whose maximum is exactly c-1).
    Every orbit has size exactly c!, since only the identity permutation
    fixes a surjective colouring.
    """
    n = _shape_n(shape)
    if c > n:
        raise TooManyColours(f"c={c} > n={n}")
    if c < 1:
        raise InvalidParams("need c >= 1")

    def grow(prefix: list[int], mx: int):
        if len(prefix) == n:
            if mx == c - 1:
                yield tuple(prefix)
            return
        # still-needed colours must fit in the remaining positions
        remaining = n - len(prefix)
        for x in range(min(mx + 1, c - 1) + 1):
            new_mx = mx if x <= mx else x
            if (c - 1 - new_mx) <= remaining - 1:
                yield from grow(prefix + [x], new_mx)

    yield from grow([], -1)


def _solve_free(args) -> int:
    n, edges, colours, c, budget, time_limit = args
    g = build_coloured_graph(n, edges, colours, c=c)
    q = SolveQuery(g, time_limit=time_limit)
    if budget is not None:
        q.budget = budget
    return min_moves_exact(q).moves


def max_moves(shape, c: int, workers: int = 1, budget: Optional[int] = None,
              time_limit: Optional[float] = None) -> ExtremalResult:
    """M_c over the canonical surjective colourings of the shape.

    The witness is the lexicographically smallest maximiser (the canonical
    enumeration is lexicographic, so the first maximiser seen is it).
    """
    n, edges = shape.n, shape.edges
    best = -1
    witness: Optional[tuple[int, ...]] = None
    count = 0
    if workers <= 1:
        for cols in enumerate_surjective_colourings(shape, c):
            count += 1
            q = SolveQuery(build_coloured_graph(n, edges, cols, c=c),
                           time_limit=time_limit)
            if budget is not None:
                q.budget = budget
            val = min_moves_exact(q).moves
            if val > best:
                best, witness = val, cols
    else:
        todo = [(n, edges, cols, c, budget, time_limit)
                for cols in enumerate_surjective_colourings(shape, c)]
        count = len(todo)
        with Pool(workers) as pool:
            values = pool.map(_solve_free, todo, chunksize=32)
        for (args, val) in zip(todo, values):
            if val > best:
                best, witness = val, args[2]
    check = min_moves_exact(
        SolveQuery(build_coloured_graph(n, edges, witness, c=c))).moves
    assert check == best
    return ExtremalResult(best, witness, count)


# ------------------------------------------------------------ closed forms

def predicted_value(family: str, **params):
    """Proven closed forms (int) or proven bound pairs (lower, upper).

    Blow-ups below the t >= 2c^10 threshold return the bound pair and need
    the actual vertex count n; the exact value there is conjectured, not
    proven.
    """
    def need(*names):
        missing = [x for x in names if x not in params]
        if missing:
            raise InvalidParams(f"{family} needs parameters {missing}")

    if family == "path":
        need("n", "c")
        n, c = params["n"], params["c"]
        _check_pos(n=n, c=c)
        return n - ceil(n / c)
    if family == "cycle":
        need("n", "c")
        n, c = params["n"], params["c"]
        _check_pos(n=n, c=c)
        if n < 3:
            raise InvalidParams("cycle needs n >= 3")
        return n - ceil(n / c)
    if family in ("blowup_path", "blowup_cycle"):
        need("t", "c")
        t, c = params["t"], params["c"]
        _check_pos(t=t, c=c)
        if t >= 2 * c ** 10:
            return t - ceil(t / c)
        need("n")
        n = params["n"]
        if n < t:
            raise InvalidParams("blow-up has n >= t vertices")
        return (t - ceil(t / c), n - ceil(n / c))
    if family == "tree_Tcr":
        need("c", "r")
        c, r = params["c"], params["r"]
        _check_pos(c=c, r=r)
        if c < 2:
            raise InvalidParams("tree_Tcr needs c >= 2")
        return (c - 1) * r
    if family == "colour_bound":
        need("n", "c")
        return params["n"] - ceil(params["n"] / params["c"])
    if family == "radius_bound":
        need("r", "c")
        return (params["c"] - 1) * params["r"]
    if family == "grid_bounds":
        need("k", "n", "c")
        k, n, c = params["k"], params["n"], params["c"]
        _check_pos(k=k, n=n, c=c)
        lower = n - ceil(n / c)
        return (lower, lower + (c - 1) * ceil((k - 1) / 2))
    raise InvalidParams(f"unknown family {family!r}")


def predicted_value_details(family: str, **params) -> dict:
    """predicted_value plus exactness/conjecture annotations for the CLI."""
    value = predicted_value(family, **params)
    out = {"family": family, "params": params}
    if isinstance(value, tuple):
        out["lower"], out["upper"] = value
        out["exact"] = False
        if family in ("blowup_path", "blowup_cycle"):
            t, c = params["t"], params["c"]
            out["note"] = (f"below the t >= 2c^10 threshold; conjectured "
                           f"exact value {t - ceil(t / c)}")
        else:
            out["note"] = "bound interval only (exact value open)"
    else:
        out["value"] = value
        out["exact"] = True
    return out


def _check_pos(**kw):
    for name, val in kw.items():
        if val < 1:
            raise InvalidParams(f"{name} must be positive")


# ------------------------------------------------------------- campaigns

DEFAULT_GRIDS: dict[str, dict] = {
    "path-result": {"n_range": (2, 8), "colours": (2, 3)},
    "cycle-result": {"n_range": (3, 8), "colours": (2, 3)},
    "colour-bound": {"n_max": 6, "colours": (2, 3)},
    "radius-bound": {"n_max": 6, "colours": (2, 3)},
    "tree-tight": {"pairs": ((2, 1), (2, 2), (3, 1))},
    "blowup-lb": {"t_max": 7, "colours": (2, 3), "samples": 10, "seed": 7101},
    "rainbow-target": {"n_range": (2, 40), "colours": (2, 3, 4, 5, 6)},
    "path-lb": {"n_range": (2, 40), "colours": (2, 3, 4, 5, 6)},
    "cycle-lb": {"n_range": (3, 24), "colours": (2, 3, 4)},
    "c-col": {"instances": 1000, "seed": 1001, "n_max": 7},
    "colour-dif": {"n_range": (2, 60), "colours": (2, 3, 4, 5, 6)},
    "spanning-trees": {"instances": 1000, "seed": 1301, "n_max": 7},
    "subgraph": {"instances": 1000, "seed": 1409, "n_max": 7},
    "basic-monotonicity": {"instances": 1000, "seed": 1511, "n_max": 12},
    "change-colouring": {"instances": 1000, "seed": 1607, "n_max": 7},
    "dominating-path": {"instances": 300, "seed": 1709, "t_max": 6},
    "path-section": {"instances": 400, "seed": 1811, "n_max": 14},
    "not-rainbow-col": {"instances": 1000, "seed": 1913, "t_max": 40},
}


def verify_theorem(name: str, params: Optional[dict] = None) -> Report:
    """Run one named claim over its parameter grid and report failures."""
    if name not in _CLAIMS:
        raise UnknownClaim(
            f"unknown claim {name!r}; known: {', '.join(sorted(_CLAIMS))}")
    merged = dict(DEFAULT_GRIDS.get(name, {}))
    if params:
        merged.update(params)
    return _CLAIMS[name](merged)


def _expand_range(value) -> list[int]:
    if isinstance(value, (tuple, list)) and len(value) == 2:
        lo, hi = value
        return list(range(lo, hi + 1))
    if isinstance(value, range):
        return list(value)
    return list(value)


def _claim_path_result(p) -> Report:
    rep = Report("path-result", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            if c > n:
                continue
            rep.instances += 1
            got = max_moves(gen.path_graph(n), c).value
            want = n - ceil(n / c)
            if got != want:
                rep.failures.append(f"path n={n} c={c}: M_c={got} != {want}")
    return rep


def _claim_cycle_result(p) -> Report:
    rep = Report("cycle-result", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            if c > n:
                continue
            rep.instances += 1
            got = max_moves(gen.cycle_graph(n), c).value
            want = n - ceil(n / c)
            if got != want:
                rep.failures.append(f"cycle n={n} c={c}: M_c={got} != {want}")
    return rep


def _sweep_all_colourings(n_max: int, colours) -> Iterator[tuple[ColouredGraph, int]]:
    for shape in gen.enumerate_small_graphs(n_max):
        for c in colours:
            if c > shape.n:
                continue
            for cols in enumerate_surjective_colourings(shape, c):
                yield build_coloured_graph(shape.n, shape.edges, cols, c=c), c


def _claim_colour_bound(p) -> Report:
    rep = Report("colour-bound", p, 0)
    for g, c in _sweep_all_colourings(p["n_max"], p["colours"]):
        rep.instances += 1
        m = min_moves_exact(SolveQuery(g)).moves
        bound = g.n - ceil(g.n / c)
        if m > bound:
            rep.failures.append(
                f"n={g.n} c={c} colours={g.colours} edges={g.edges}: "
                f"m={m} > {bound}")
    return rep


def _claim_radius_bound(p) -> Report:
    rep = Report("radius-bound", p, 0)
    for g, c in _sweep_all_colourings(p["n_max"], p["colours"]):
        rep.instances += 1
        m = min_moves_exact(SolveQuery(g)).moves
        bound = (c - 1) * radius(g)
        if m > bound:
            rep.failures.append(
                f"n={g.n} c={c} colours={g.colours} edges={g.edges}: "
                f"m={m} > (c-1)r={bound}")
    return rep


def _claim_tree_tight(p) -> Report:
    from .strategies import radius_strategy
    rep = Report("tree-tight", p, 0)
    for c, r in p["pairs"]:
        rep.instances += 1
        shape = gen.tcr_tree(c, r)
        g = shape.coloured(gen.scr_tree_colouring(shape), c=c)
        want = (c - 1) * r
        m = min_moves_exact(SolveQuery(g)).moves
        if m != want:
            rep.failures.append(f"T_{{{c},{r}}}: m={m} != {want}")
            continue
        cert = radius_strategy(g)
        out = play_certificate(g, cert)
        if not out.flooded or out.length != want:
            rep.failures.append(
                f"T_{{{c},{r}}}: radius strategy flooded={out.flooded} "
                f"length={out.length} != {want}")
    return rep


def _blowup_size_vectors(t: int, samples: int, rng: random.Random):
    if t <= 7:
        import itertools
        yield from itertools.product((1, 2), repeat=t)
    else:
        for _ in range(samples):
            yield tuple(rng.randint(1, 2) for _ in range(t))


def _claim_blowup_lb(p) -> Report:
    from .strategies import rainbow_blowup_strategy
    rep = Report("blowup-lb", p, 0)
    rng = random.Random(p["seed"])
    for c in p["colours"]:
        for t in range(max(2, c), p["t_max"] + 1):
            for sizes in _blowup_size_vectors(t, p["samples"], rng):
                rep.instances += 1
                shape = gen.blowup_path_graph(list(sizes))
                cols = gen.path_colouring_of_blowup(
                    shape, gen.rainbow_colouring(t, c))
                g = shape.coloured(cols, c=c)
                want = t - ceil(t / c)
                ub = None
                if t >= c + 2:
                    cert = rainbow_blowup_strategy(g, shape.blowup)
                    if play_certificate(g, cert).flooded:
                        ub = len(cert.moves)
                m = min_moves_exact(SolveQuery(g), upper_bound=ub).moves
                if m < want:
                    rep.failures.append(
                        f"rainbow blow-up t={t} c={c} sizes={sizes}: "
                        f"m={m} < {want}")
    return rep


def _shifted_rainbow_path(n: int, c: int, shift: int) -> ColouredGraph:
    shape = gen.path_graph(n)
    cols = gen.rainbow_colouring(n, c, shift)
    return shape.coloured(cols, c=c)


def _claim_rainbow_target(p) -> Report:
    rep = Report("rainbow-target", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            if c < 2:
                continue
            for shift in range(c):
                g = _shifted_rainbow_path(n, c, shift)
                seq = [g.colours[v] for v in range(n)]
                runs, _ = pathdp.contracted_sequence(seq)
                gt, dt = pathdp.solve_sequence(runs, c)
                top_g = int(gt[0, len(runs) - 1])
                top_d = int(dt[0, len(runs) - 1])
                for d in range(c):
                    rep.instances += 1
                    m = top_g + (0 if (top_d >> d) & 1 else 1)
                    nd = sum(1 for x in seq if x == d)
                    if m < n - nd:
                        rep.failures.append(
                            f"n={n} c={c} shift={shift} d={d}: "
                            f"m={m} < n-N_d={n - nd}")
    return rep


def _claim_path_lb(p) -> Report:
    rep = Report("path-lb", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            if c < 2:
                continue
            for shift in range(c):
                rep.instances += 1
                g = _shifted_rainbow_path(n, c, shift)
                m = pathdp.path_min_moves(g)
                want = n - ceil(n / c)
                if m < want:
                    rep.failures.append(
                        f"n={n} c={c} shift={shift}: m={m} < {want}")
    return rep


def _claim_cycle_lb(p) -> Report:
    rep = Report("cycle-lb", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            if c < 2 or c > n:
                continue
            for shift in range(c):
                rep.instances += 1
                shape = gen.cycle_graph(n)
                g = shape.coloured(gen.rainbow_colouring(n, c, shift), c=c)
                m = pathdp.cycle_min_moves(g)
                want = n - ceil(n / c)
                if m < want:
                    rep.failures.append(
                        f"cycle n={n} c={c} shift={shift}: m={m} < {want}")
    return rep


def _random_dense_coloured(rng: random.Random, n_max: int):
    n = rng.randint(2, n_max)
    shape = gen.random_connected_graph(n, rng.randint(0, 2),
                                       seed=rng.randrange(1 << 30))
    c = rng.randint(2, min(3, n))
    cols, _ = gen.dense_relabel([rng.randrange(c) for _ in range(n)])
    return build_coloured_graph(n, shape.edges, cols)


def _claim_c_col(p) -> Report:
    from .core import FloodState
    rep = Report("c-col", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        g = _random_dense_coloured(rng, p["n_max"])
        c_used = g.c
        m = min_moves_exact(SolveQuery(g)).moves
        if m < c_used - 1:
            rep.failures.append(f"{g.colours} {g.edges}: m={m} < c-1={c_used - 1}")
            continue
        st = FloodState.from_graph(g)
        per_colour: dict[int, int] = {}
        for col in st.comp_colour.values():
            per_colour[col] = per_colour.get(col, 0) + 1
        if all(v >= 2 for v in per_colour.values()) and m < c_used:
            rep.failures.append(
                f"{g.colours} {g.edges}: every colour split but m={m} < {c_used}")
    return rep


def _claim_colour_dif(p) -> Report:
    rep = Report("colour-dif", p, 0)
    for n in _expand_range(p["n_range"]):
        for c in p["colours"]:
            for shift in range(c):
                rep.instances += 1
                cols = gen.rainbow_colouring(n, c, shift)
                counts = [sum(1 for x in cols if x == d) for d in range(c)]
                if max(counts) - min(counts) > 1:
                    rep.failures.append(
                        f"n={n} c={c} shift={shift}: counts {counts}")
                if max(counts) != ceil(n / c):
                    rep.failures.append(
                        f"n={n} c={c} shift={shift}: max {max(counts)} != "
                        f"ceil(n/c)={ceil(n / c)}")
    return rep


def _claim_spanning_trees(p) -> Report:
    rep = Report("spanning-trees", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        g = _random_dense_coloured(rng, p["n_max"])
        d = rng.randrange(g.c)
        whole = min_moves_exact(SolveQuery(g, target_colour=d)).moves
        best = None
        for tree_edges in gen.spanning_trees(g.n, g.edges):
            tg = build_coloured_graph(g.n, tree_edges, g.colours, c=g.c)
            mt = min_moves_exact(SolveQuery(tg, target_colour=d)).moves
            if best is None or mt < best:
                best = mt
        if whole != best:
            rep.failures.append(
                f"{g.colours} {g.edges} d={d}: m(G)={whole} != min_T={best}")
    return rep


def _grow_connected_subset(rng: random.Random, g: ColouredGraph, size: int) -> list[int]:
    start = rng.randrange(g.n)
    chosen = {start}
    frontier = set(g.adj[start])
    while len(chosen) < size and frontier:
        v = rng.choice(sorted(frontier))
        chosen.add(v)
        frontier.update(g.adj[v])
        frontier -= chosen
    return sorted(chosen)


def _claim_subgraph(p) -> Report:
    rep = Report("subgraph", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        g = _random_dense_coloured(rng, p["n_max"])
        if g.n < 3:
            continue
        size = rng.randint(2, g.n - 1)
        keep = _grow_connected_subset(rng, g, size)
        d = rng.randrange(g.c)
        k, sub_edges, remap = gen.induced_subgraph(g.n, g.edges, keep)
        sub_cols_raw = [g.colours[v] for v in sorted(keep)]
        sub_cols, mapping = gen.dense_relabel(sub_cols_raw, extras=[d])
        hg = build_coloured_graph(k, sub_edges, sub_cols, c=len(mapping))
        m_h = min_moves_exact(SolveQuery(hg, target_colour=mapping[d])).moves
        m_g = min_moves_exact(
            SolveQuery(g, target_set=frozenset(keep), target_colour=d)).moves
        if m_g > m_h:
            rep.failures.append(
                f"{g.colours} {g.edges} A={keep} d={d}: m_G={m_g} > m_H={m_h}")
    return rep


def _claim_basic_monotonicity(p) -> Report:
    rep = Report("basic-monotonicity", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        n = rng.randint(3, p["n_max"])
        c = rng.randint(2, min(4, n))
        cols, _ = gen.dense_relabel([rng.randrange(c) for _ in range(n)])
        c_eff = max(cols) + 1
        g = gen.path_graph(n).coloured(cols, c=c_eff)
        drop = rng.randrange(1, n - 1)
        small_cols_raw = cols[:drop] + cols[drop + 1:]
        small_cols, mapping = gen.dense_relabel(
            small_cols_raw, extras=range(c_eff))
        g2 = gen.path_graph(n - 1).coloured(small_cols, c=len(mapping))
        for d in range(c_eff):
            if pathdp.path_min_moves(g2, mapping[d]) > pathdp.path_min_moves(g, d):
                rep.failures.append(f"{cols} drop {drop} d={d}")
        if pathdp.path_min_moves(g2) > pathdp.path_min_moves(g):
            rep.failures.append(f"{cols} drop {drop} free")
    return rep


def _claim_change_colouring(p) -> Report:
    from .core import FloodState
    rep = Report("change-colouring", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        g = _random_dense_coloured(rng, p["n_max"])
        c = g.c
        cols2, _ = gen.dense_relabel([rng.randrange(c) for _ in range(g.n)])
        g2 = build_coloured_graph(g.n, g.edges, cols2, c=c)
        d = rng.randrange(c)
        lhs = min_moves_exact(SolveQuery(g, target_colour=d)).moves
        rhs = min_moves_exact(SolveQuery(g2, target_colour=d)).moves
        for name, members in FloodState.from_graph(g2).components().items():
            c_a = g2.colours[name]
            k, sub_edges, remap = gen.induced_subgraph(g.n, g.edges, members)
            raw = [g.colours[v] for v in sorted(members)]
            dense, mapping = gen.dense_relabel(raw, extras=[c_a])
            ag = build_coloured_graph(k, sub_edges, dense, c=len(mapping))
            rhs += min_moves_exact(
                SolveQuery(ag, target_colour=mapping[c_a])).moves
        if lhs > rhs:
            rep.failures.append(
                f"{g.colours} vs {cols2} on {g.edges} d={d}: {lhs} > {rhs}")
    return rep


def _claim_dominating_path(p) -> Report:
    rep = Report("dominating-path", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        t = rng.randint(2, p["t_max"])
        sizes = [rng.randint(1, 2) for _ in range(t)]
        shape = gen.blowup_path_graph(sizes)
        c = rng.randint(2, 3)
        cols, _ = gen.dense_relabel(
            [rng.randrange(c) for _ in range(shape.n)])
        g = shape.coloured(cols)
        m_g = min_moves_exact(SolveQuery(g)).moves
        q_vertices = [cls[0] for cls in shape.blowup.classes]
        k, sub_edges, _ = gen.induced_subgraph(g.n, g.edges, q_vertices)
        raw = [g.colours[v] for v in sorted(q_vertices)]
        dense, mapping = gen.dense_relabel(raw)
        qg = build_coloured_graph(k, sub_edges, dense)
        m_q = pathdp.path_min_moves(qg)
        if m_g > m_q + (g.c - 1):
            rep.failures.append(
                f"sizes={sizes} colours={cols}: m={m_g} > m(Q)+(c-1)="
                f"{m_q + g.c - 1}")
    return rep


def _claim_path_section(p) -> Report:
    rep = Report("path-section", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        n = rng.randint(4, p["n_max"])
        c = rng.randint(2, min(4, n))
        cols, _ = gen.dense_relabel([rng.randrange(c) for _ in range(n)])
        c_eff = max(cols) + 1
        g = gen.path_graph(n).coloured(cols, c=c_eff)
        # random disjoint subpaths
        cuts = sorted(rng.sample(range(n + 1), k=min(6, n + 1)))
        segments = []
        pos = 0
        while pos + 1 < len(cuts) and len(segments) < 3:
            a, b = cuts[pos], cuts[pos + 1]
            if b - a >= 2:
                segments.append((a, b))
            pos += 2
        if not segments:
            continue
        shrink = sum(b - a - 1 for a, b in segments)
        total = 0
        for a, b in segments:
            dense, _ = gen.dense_relabel(cols[a:b])
            sub = gen.path_graph(b - a).coloured(dense)
            total += pathdp.path_min_moves(sub)
        lhs = pathdp.path_min_moves(g)
        rhs = (n - shrink) - ceil((n - shrink) / c_eff) + total
        if lhs > rhs:
            rep.failures.append(
                f"{cols} segments={segments}: {lhs} > {rhs}")
    return rep


def _claim_not_rainbow_col(p) -> Report:
    rep = Report("not-rainbow-col", p, 0)
    rng = random.Random(p["seed"])
    for _ in range(p["instances"]):
        rep.instances += 1
        t = rng.randint(2, p["t_max"])
        c = rng.randint(2, 5)
        f = [rng.randrange(c)]
        for _ in range(t - 1):
            f.append(rng.choice([x for x in range(c) if x != f[-1]]))
        if gen.is_rainbow(f, c):
            continue
        found = any(f[i] == f[j]
                    for i in range(t) for j in range(i + 1, min(i + c, t)))
        if not found:
            rep.failures.append(f"c={c} f={f}: no close repeat")
    return rep


_CLAIMS = {
    "path-result": _claim_path_result,
    "cycle-result": _claim_cycle_result,
    "colour-bound": _claim_colour_bound,
    "radius-bound": _claim_radius_bound,
    "tree-tight": _claim_tree_tight,
    "blowup-lb": _claim_blowup_lb,
    "rainbow-target": _claim_rainbow_target,
    "path-lb": _claim_path_lb,
    "cycle-lb": _claim_cycle_lb,
    "c-col": _claim_c_col,
    "colour-dif": _claim_colour_dif,
    "spanning-trees": _claim_spanning_trees,
    "subgraph": _claim_subgraph,
    "basic-monotonicity": _claim_basic_monotonicity,
    "change-colouring": _claim_change_colouring,
    "dominating-path": _claim_dominating_path,
    "path-section": _claim_path_section,
    "not-rainbow-col": _claim_not_rainbow_col,
}

CLAIM_NAMES = tuple(sorted(_CLAIMS))
