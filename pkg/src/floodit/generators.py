"""Graph and colouring families used by the solvers, strategies and tests.

Vertex numbering conventions (relied on by the colouring generators):
paths and cycles are numbered along the walk; stars put the centre at 0;
the subdivided-star trees put the centre at 0 and each leg on a consecutive
id range; blow-ups number their classes consecutively in class order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from .core import ColouredGraph, build_coloured_graph
from .errors import IncompatibleSpec, InvalidParams


@dataclass(frozen=True)
class BlowupStructure:
    """Ordered vertex classes witnessing a blow-up of a path or cycle.

    Classes partition the vertex set, every class is independent, and edges
    run exactly between consecutive classes (plus the wrap pair on cycles),
    always as a complete join.
    """

    base: str  # "path" or "cycle"
    classes: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        out = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out


@dataclass
class GraphShape:
    """An uncoloured graph plus the structure its family carries."""

    n: int
    edges: tuple[tuple[int, int], ...]
    kind: str
    order: Optional[tuple[int, ...]] = None  # walk order for paths/cycles
    blowup: Optional[BlowupStructure] = None
    meta: dict = field(default_factory=dict)

    def coloured(self, colours, c: Optional[int] = None) -> ColouredGraph:
        return build_coloured_graph(self.n, self.edges, colours, c=c)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ColouringSpec:
    kind: str
    params: dict = field(default_factory=dict)


# ---------------------------------------------------------------- families

def path_graph(n: int) -> GraphShape:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    edges = tuple((i, i + 1) for i in range(n - 1))
    return GraphShape(n, edges, "path", order=tuple(range(n)))


def cycle_graph(n: int) -> GraphShape:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    return GraphShape(n, edges, "cycle", order=tuple(range(n)))


def star_graph(leaves: int) -> GraphShape:
    if leaves < 1:
        raise InvalidParams("star needs at least one leaf")
    edges = tuple((0, i) for i in range(1, leaves + 1))
    return GraphShape(leaves + 1, edges, "star", meta={"centre": 0})


def tcr_tree(c: int, r: int) -> GraphShape:
    """The star K_{1, r(c-1)^{r+1}} with every edge subdivided r-1 times.

    Each leg is a path of r vertices hanging off the centre, so the
    centre-to-leaf distance (and the radius) is exactly r.  The leg count
    r(c-1)^{r+1} is the star definition; it splits as (c-1)r legs for each
    of the (c-1)^r admissible leg colour sequences.
    """
    if c < 2 or r < 1:
        raise InvalidParams("tree_Tcr needs c >= 2, r >= 1")
    legs = r * (c - 1) ** (r + 1)
    edges = []
    leg_ranges = []
    nxt = 1
    for _ in range(legs):
        start = nxt
        edges.append((0, start))
        for j in range(1, r):
            edges.append((start + j - 1, start + j))
        leg_ranges.append(tuple(range(start, start + r)))
        nxt += r
    return GraphShape(nxt, tuple(edges), "tree_Tcr",
                      meta={"c": c, "r": r, "centre": 0,
                            "legs": tuple(leg_ranges)})


def _blowup_classes(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    classes = []
    nxt = 0
    for s in sizes:
        if s < 1:
            raise InvalidParams("class sizes must be positive")
        classes.append(tuple(range(nxt, nxt + s)))
        nxt += s
    return tuple(classes)


def blowup_path_graph(sizes: Sequence[int]) -> GraphShape:
    if len(sizes) < 1:
        raise InvalidParams("blow-up needs at least one class")
    classes = _blowup_classes(sizes)
    edges = []
    for a, b in zip(classes, classes[1:]):
        edges.extend((u, v) for u in a for v in b)
    structure = BlowupStructure("path", classes)
    return GraphShape(sum(sizes), tuple(edges), "blowup_path", blowup=structure)


def blowup_cycle_graph(sizes: Sequence[int]) -> GraphShape:
    if len(sizes) < 3:
        raise InvalidParams("cycle blow-up needs t >= 3")
    classes = _blowup_classes(sizes)
    edges = []
    for a, b in zip(classes, classes[1:]):
        edges.extend((u, v) for u in a for v in b)
    edges.extend((min(u, v), max(u, v))
                 for u in classes[-1] for v in classes[0])
    structure = BlowupStructure("cycle", classes)
    return GraphShape(sum(sizes), tuple(edges), "blowup_cycle", blowup=structure)


def grid_graph(k: int, n: int) -> GraphShape:
    if k < 1 or n < 1:
        raise InvalidParams("grid needs k, n >= 1")
    edges = []
    for row in range(k):
        for col in range(n):
            v = row * n + col
            if col + 1 < n:
                edges.append((v, v + 1))
            if row + 1 < k:
                edges.append((v, v + n))
    return GraphShape(k * n, tuple(edges), "grid", meta={"k": k, "n": n})


def random_connected_graph(n: int, extra_edges: int = 0,
                           seed: int = 0) -> GraphShape:
    """Random spanning tree by random attachment plus extra random edges."""
    if n < 1:
        raise InvalidParams("need n >= 1")
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)
            if (u, v) not in edges]
    rng.shuffle(pool)
    for e in pool[:max(0, extra_edges)]:
        edges.add(e)
    return GraphShape(n, tuple(sorted(edges)), "random_connected",
                      meta={"seed": seed})


_FAMILY_BUILDERS = {
    "path": lambda p: path_graph(p["n"]),
    "cycle": lambda p: cycle_graph(p["n"]),
    "star": lambda p: star_graph(p["leaves"]),
    "blowup_path": lambda p: blowup_path_graph(p["sizes"]),
    "blowup_cycle": lambda p: blowup_cycle_graph(p["sizes"]),
    "tree_Tcr": lambda p: tcr_tree(p["c"], p["r"]),
    "grid": lambda p: grid_graph(p["k"], p["n"]),
    "random_connected": lambda p: random_connected_graph(
        p["n"], p.get("extra_edges", 0), p.get("seed", 0)),
}


def gen_graph(spec: FamilySpec) -> GraphShape:
    builder = _FAMILY_BUILDERS.get(spec.kind)
    if builder is None:
        raise InvalidParams(f"unknown family {spec.kind!r}")
    try:
        return builder(spec.params)
    except KeyError as e:
        raise InvalidParams(f"family {spec.kind!r} missing parameter {e}") from e


# -------------------------------------------------------------- colourings

def rainbow_colouring(length: int, c: int, shift: int = 0) -> list[int]:
    """Positions 0..length-1 coloured (i - shift) mod c."""
    if c < 2:
        raise InvalidParams("rainbow needs c >= 2")
    return [(i - shift) % c for i in range(length)]


def is_shifted_rainbow(seq: Sequence[int], c: int,
                       shift: Optional[int] = None) -> bool:
    """Independent checker: does some permutation pi of the palette satisfy
    seq[i] == pi((i - shift) mod c) for all i (for the given shift, or any)?"""
    shifts = range(c) if shift is None else [shift % c]
    for r in shifts:
        assign: dict[int, int] = {}
        ok = True
        for i, col in enumerate(seq):
            z = (i - r) % c
            if assign.setdefault(z, col) != col:
                ok = False
                break
        if ok and len(set(assign.values())) == len(assign):
            return True
    return False


def is_rainbow(seq: Sequence[int], c: int) -> bool:
    return is_shifted_rainbow(seq, c, shift=0)


def scr_sequences(c: int, r: int) -> list[tuple[int, ...]]:
    """All leg colour sequences: length r over {0..c-1}, first element not 0
    (the centre colour), no two consecutive equal.  There are (c-1)^r."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...]):
        if len(prefix) == r:
            out.append(prefix)
            return
        last = prefix[-1] if prefix else 0
        for d in range(c):
            if d != last:
                grow(prefix + (d,))

    grow(())
    return out


def scr_tree_colouring(shape: GraphShape) -> list[int]:
    """Adversarial colouring of tree_Tcr: centre 0; every leg sequence is
    used on (c-1)*r legs."""
    if shape.kind != "tree_Tcr":
        raise IncompatibleSpec("Scr colouring needs a tree_Tcr shape")
    c, r = shape.meta["c"], shape.meta["r"]
    legs = shape.meta["legs"]
    seqs = scr_sequences(c, r)
    copies = (c - 1) * r
    assert len(seqs) * copies == len(legs)
    colours = [0] * shape.n
    idx = 0
    for sigma in seqs:
        for _ in range(copies):
            for v, col in zip(legs[idx], sigma):
                colours[v] = col
            idx += 1
    return colours


def remark_bichromatic_colouring(shape: GraphShape, c: int) -> list[int]:
    """Classes of a path blow-up on t = c classes get colours
    {(2i-1) mod c, (2i) mod c} (classes indexed from 1)."""
    if shape.blowup is None or shape.blowup.base != "path":
        raise IncompatibleSpec("needs a path blow-up")
    if shape.blowup.t != c:
        raise IncompatibleSpec("remark colouring needs t == c classes")
    colours = [0] * shape.n
    for i, cls in enumerate(shape.blowup.classes, start=1):
        if len(cls) < 2:
            raise IncompatibleSpec("remark colouring needs class sizes >= 2")
        pair = ((2 * i - 1) % c, (2 * i) % c)
        for j, v in enumerate(cls):
            colours[v] = pair[j % 2]
    return colours


def path_colouring_of_blowup(shape: GraphShape, f: Sequence[int]) -> list[int]:
    if shape.blowup is None:
        raise IncompatibleSpec("needs a blow-up shape")
    if len(f) != shape.blowup.t:
        raise IncompatibleSpec("class colour sequence length mismatch")
    colours = [0] * shape.n
    for cls, col in zip(shape.blowup.classes, f):
        for v in cls:
            colours[v] = col
    return colours


def random_surjective_colouring(n: int, c: int, seed: int = 0) -> list[int]:
    """Uniform over surjective colourings, by rejection."""
    if c > n:
        raise InvalidParams("cannot colour surjectively with c > n")
    rng = random.Random(seed)
    while True:
        cols = [rng.randrange(c) for _ in range(n)]
        if len(set(cols)) == c:
            return cols


def gen_colouring(shape: GraphShape, spec: ColouringSpec) -> list[int]:
    kind, p = spec.kind, spec.params
    if kind in ("rainbow", "shifted_rainbow", "cycle_rainbow"):
        c = p["c"]
        shift = p.get("shift", 0)
        if shape.blowup is not None:
            f = rainbow_colouring(shape.blowup.t, c, shift)
            return path_colouring_of_blowup(shape, f)
        if shape.order is None:
            raise IncompatibleSpec(f"{kind} needs a path/cycle/blow-up shape")
        if kind == "cycle_rainbow" and shape.kind != "cycle":
            raise IncompatibleSpec("cycle_rainbow needs a cycle")
        cols = rainbow_colouring(shape.n, c, shift)
        out = [0] * shape.n
        for pos, v in enumerate(shape.order):
            out[v] = cols[pos]
        return out
    if kind == "path_colouring":
        return path_colouring_of_blowup(shape, p["f"])
    if kind == "Scr_tree":
        return scr_tree_colouring(shape)
    if kind == "remark_bichromatic":
        return remark_bichromatic_colouring(shape, p["c"])
    if kind == "random_surjective":
        return random_surjective_colouring(shape.n, p["c"], p.get("seed", 0))
    raise InvalidParams(f"unknown colouring kind {kind!r}")


# ------------------------------------------------- structure validation

def check_blowup(shape: GraphShape) -> bool:
    """Classes partition the vertices, each class is independent, and the
    edge set is exactly the complete join between consecutive classes."""
    b = shape.blowup
    if b is None:
        return False
    seen: set[int] = set()
    for cls in b.classes:
        if seen & set(cls):
            return False
        seen.update(cls)
    if seen != set(range(shape.n)):
        return False
    expected = set()
    pairs = list(zip(b.classes, b.classes[1:]))
    if b.base == "cycle" and b.t > 2:
        pairs.append((b.classes[-1], b.classes[0]))
    for a, bb in pairs:
        for u in a:
            for v in bb:
                expected.add((u, v) if u < v else (v, u))
    return expected == set(shape.edges)


# ------------------------------------------------- small-graph enumeration

def _canonical_form(n: int, edges: frozenset) -> tuple:
    """Canonical edge tuple: minimum over relabellings that sort vertices by
    a degree-based invariant.  Isomorphism-invariant and collision-free."""
    adjd = {v: set() for v in range(n)}
    for u, v in edges:
        adjd[u].add(v)
        adjd[v].add(u)
    inv = {}
    for v in range(n):
        inv[v] = (len(adjd[v]), tuple(sorted(len(adjd[u]) for u in adjd[v])))
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        groups.setdefault(inv[v], []).append(v)
    ordered_groups = [groups[k] for k in sorted(groups, reverse=True)]

    best = None
    for perm_parts in itertools.product(
            *(itertools.permutations(g) for g in ordered_groups)):
        label = {}
        nxt = 0
        for part in perm_parts:
            for v in part:
                label[v] = nxt
                nxt += 1
        key = tuple(sorted(
            (label[u], label[v]) if label[u] < label[v] else (label[v], label[u])
            for u, v in edges))
        if best is None or key < best:
            best = key
    return (n, best)


@lru_cache(maxsize=None)
def _connected_graphs_exactly(n: int) -> tuple:
    """Canonical edge tuples of all connected graphs on exactly n vertices."""
    if n == 1:
        return ((),)
    smaller = _connected_graphs_exactly(n - 1)
    found: dict[tuple, tuple] = {}
    new_v = n - 1
    for edge_tuple in smaller:
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((u, new_v) for u in range(n - 1) if mask >> u & 1)
            all_edges = frozenset(edge_tuple) | frozenset(extra)
            canon = _canonical_form(n, all_edges)
            if canon not in found:
                found[canon] = tuple(sorted(all_edges))
    return tuple(found[k] for k in sorted(found))


def enumerate_small_graphs(n_max: int) -> Iterator[GraphShape]:
    """All connected graphs with at most n_max vertices, one per
    isomorphism class."""
    if n_max > 7:
        raise InvalidParams("small-graph enumeration supports n_max <= 7")
    for n in range(1, n_max + 1):
        for edges in _connected_graphs_exactly(n):
            yield GraphShape(n, edges, "enumerated")


def spanning_trees(n: int, edges: Sequence[tuple[int, int]]) -> Iterator[tuple]:
    """All spanning trees as edge tuples (combinations filtered by
    connectivity; meant for small graphs)."""
    edges = list(edges)
    if n == 1:
        yield ()
        return
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        if comps == 1:
            yield subset


def count_maps_surjective(n: int, c: int) -> int:
    """Number of surjective maps [n] -> [c] (inclusion-exclusion)."""
    return sum((-1) ** j * comb(c, j) * (c - j) ** n for j in range(c + 1))


def dense_relabel(colours: Sequence[int],
                  extras: Sequence[int] = ()) -> tuple[list[int], dict[int, int]]:
    """Relabel colours into first-occurrence order 0,1,2,...

    ``extras`` are additional colour ids (e.g. a target colour that no
    longer occurs) appended to the mapping after the occurring ones.
    Flood numbers are invariant under colour bijections, so solving a
    relabelled instance answers the original one.
    """
    mapping: dict[int, int] = {}
    for x in colours:
        if x not in mapping:
            mapping[x] = len(mapping)
    for x in extras:
        if x not in mapping:
            mapping[x] = len(mapping)
    return [mapping[x] for x in colours], mapping


def induced_subgraph(n: int, edges: Sequence[tuple[int, int]],
                     keep: Sequence[int]) -> tuple[int, list[tuple[int, int]], dict[int, int]]:
    """Induced subgraph on ``keep`` with vertices renumbered 0..k-1.

    Returns (k, edges, old->new vertex mapping)."""
    keep_sorted = sorted(set(keep))
    remap = {v: i for i, v in enumerate(keep_sorted)}
    sub = [(remap[u], remap[v]) for u, v in edges
           if u in remap and v in remap]
    return len(keep_sorted), sub, remap
