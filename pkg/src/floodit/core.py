"""Coloured graphs, flood moves, contraction and certificate replay.

A move (v, d) recolours the whole monochromatic component containing v with
colour d.  The engine keeps the position fully contracted at all times:
adjacent components never share a colour.  Components are named by the
minimum original vertex id they contain, which makes states deterministic
and certificates replayable after any amount of merging.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .errors import DanglingVertexRef, DisconnectedGraph, InvalidParams, NonDenseColours

Colour = int


class Move(NamedTuple):
    vertex: int
    colour: Colour


@dataclass
class Certificate:
    """A replayable move sequence with an optional claimed outcome.

    ``target`` defaults to all vertices (flood the whole graph); when set,
    the claim is that the target ends up inside a single component, of
    ``final_colour`` if that is also set.
    """

    moves: list[Move] = field(default_factory=list)
    final_colour: Optional[Colour] = None
    target: Optional[frozenset[int]] = None

    def __len__(self) -> int:
        return len(self.moves)


@dataclass
class Outcome:
    flooded: bool
    target_met: bool
    final_colour: Optional[Colour]
    length: int


class ColouredGraph:
    """Immutable connected graph with a vertex colouring.

    ``c`` is the size of the declared colour palette; the colours actually
    used must be exactly {0, ..., k-1} for some k <= c.  ``surjective`` is
    True when k == c, which is what the extremal quantity requires.
    """

    __slots__ = ("n", "edges", "colours", "c", "adj", "surjective")

    def __init__(self, n: int, edges: tuple, colours: tuple, c: int,
                 adj: tuple, surjective: bool):
        self.n = n
        self.edges = edges
        self.colours = colours
        self.c = c
        self.adj = adj
        self.surjective = surjective

    def colour_count(self, d: Colour) -> int:
        """Number of vertices with colour d (N_d)."""
        if not 0 <= d < self.c:
            raise InvalidParams(f"colour {d} outside palette of size {self.c}")
        return sum(1 for x in self.colours if x == d)

    def colours_used(self) -> set[Colour]:
        return set(self.colours)

    def radius(self) -> int:
        return radius(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColouredGraph)
                and self.n == other.n and self.c == other.c
                and self.colours == other.colours and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.c, self.colours, self.edges))

    def __repr__(self) -> str:
        return f"ColouredGraph(n={self.n}, m={len(self.edges)}, c={self.c})"


def build_coloured_graph(n: int, edges: Iterable[tuple[int, int]],
                         colouring, c: Optional[int] = None) -> ColouredGraph:
    """Validate and build a ColouredGraph.

    ``colouring`` is a sequence of length n or a mapping vertex -> colour.
    Rejects disconnected graphs, out-of-range endpoints, self-loops and
    non-dense colour ids.  Duplicate edges are collapsed.
    """
    if n < 1:
        raise InvalidParams("need at least one vertex")
    if hasattr(colouring, "get"):
        try:
            cols = tuple(colouring[v] for v in range(n))
        except KeyError as e:
            raise DanglingVertexRef(f"colouring misses vertex {e}") from e
    else:
        cols = tuple(colouring)
        if len(cols) != n:
            raise DanglingVertexRef(
                f"colouring has {len(cols)} entries for n={n}")

    edge_set = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DanglingVertexRef(f"edge ({u},{v}) outside vertex range")
        if u == v:
            raise InvalidParams(f"self-loop at {u}")
        edge_set.add((u, v) if u < v else (v, u))
    edge_tuple = tuple(sorted(edge_set))

    adj = [[] for _ in range(n)]
    for u, v in edge_tuple:
        adj[u].append(v)
        adj[v].append(u)
    adj_tuple = tuple(tuple(sorted(a)) for a in adj)

    # connectivity
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj_tuple[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    if count != n:
        raise DisconnectedGraph(f"only {count} of {n} vertices reachable")

    used = set(cols)
    if any(x < 0 for x in used):
        raise NonDenseColours("negative colour id")
    k = max(used) + 1
    if c is None:
        # inferred palette: the used ids must be exactly {0..k-1}
        if used != set(range(k)):
            raise NonDenseColours(f"colour ids {sorted(used)} are not dense")
        c = k
    elif c < k:
        raise NonDenseColours(f"palette size {c} smaller than used colours {k}")

    return ColouredGraph(n, edge_tuple, cols, c, adj_tuple,
                         surjective=(used == set(range(c))))


class FloodState:
    """Mutable game position: the fully contracted quotient of a graph.

    Single-owner mutable; use copy() to branch.  Component names are the
    minimum original vertex id in the component, so moves given as original
    vertex ids resolve through the partition at replay time.
    """

    __slots__ = ("n", "c", "parent", "comp_colour", "comp_adj", "comp_size",
                 "num_components")

    def __init__(self, n: int, c: int):
        self.n = n
        self.c = c
        self.parent = list(range(n))
        self.comp_colour: dict[int, int] = {}
        self.comp_adj: dict[int, set[int]] = {}
        self.comp_size: dict[int, int] = {}
        self.num_components = n

    @classmethod
    def from_graph(cls, g: ColouredGraph) -> "FloodState":
        s = cls(g.n, g.c)
        s.comp_colour = {v: g.colours[v] for v in range(g.n)}
        s.comp_size = {v: 1 for v in range(g.n)}
        s.comp_adj = {v: set() for v in range(g.n)}
        # merge monochromatic edges first, then build component adjacency
        for u, v in g.edges:
            if g.colours[u] == g.colours[v]:
                s._union(u, v)
        for u, v in g.edges:
            ru, rv = s.find(u), s.find(v)
            if ru != rv:
                s.comp_adj[ru].add(rv)
                s.comp_adj[rv].add(ru)
        return s

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def _union(self, a: int, b: int) -> int:
        """Merge the components of a and b; the smaller name wins."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.comp_size[ra] += self.comp_size.pop(rb)
        self.comp_colour.pop(rb, None)
        adj_a = self.comp_adj.get(ra)
        adj_b = self.comp_adj.pop(rb, None)
        if adj_a is not None and adj_b is not None:
            # every former neighbour of rb must now reference ra
            for x in adj_b:
                nx = self.comp_adj.get(x)
                if nx is None:
                    continue
                nx.discard(rb)
                if x != ra:
                    nx.add(ra)
                    adj_a.add(x)
            adj_a.discard(ra)
            adj_a.discard(rb)
        self.num_components -= 1
        return ra

    def component_of(self, v: int) -> int:
        return self.find(v)

    def colour_of(self, v: int) -> Colour:
        return self.comp_colour[self.find(v)]

    def apply_move(self, move: Move) -> "FloodState":
        """Recolour the component of move.vertex; merge any now-equal
        neighbours.  A no-op recolouring is legal and leaves the state
        unchanged.  Returns self."""
        v, d = move
        if not 0 <= v < self.n:
            raise DanglingVertexRef(f"move vertex {v} out of range")
        if not 0 <= d < self.c:
            raise InvalidParams(f"move colour {d} outside palette {self.c}")
        root = self.find(v)
        if self.comp_colour[root] == d:
            return self
        self.comp_colour[root] = d
        absorb = [x for x in self.comp_adj[root] if self.comp_colour[x] == d]
        for x in absorb:
            root = self._union(root, x)
        return self

    @property
    def is_flooded(self) -> bool:
        return self.num_components == 1

    def colours_present(self) -> set[Colour]:
        return set(self.comp_colour.values())

    def components(self) -> dict[int, list[int]]:
        """name -> sorted member vertices (reconstructed on demand)."""
        out: dict[int, list[int]] = {}
        for v in range(self.n):
            out.setdefault(self.find(v), []).append(v)
        return out

    def component_names(self) -> list[int]:
        return sorted(self.comp_colour)

    def canonical_key(self):
        """Canonical hashable key: sorted (name, colour, sorted neighbours)."""
        return tuple(
            (name, self.comp_colour[name], tuple(sorted(self.comp_adj[name])))
            for name in sorted(self.comp_colour))

    def check_contracted(self) -> bool:
        """No two adjacent components share a colour."""
        for name, nbrs in self.comp_adj.items():
            col = self.comp_colour[name]
            for x in nbrs:
                if self.comp_colour[x] == col:
                    return False
        return True

    def copy(self) -> "FloodState":
        s = FloodState(self.n, self.c)
        s.parent = list(self.parent)
        s.comp_colour = dict(self.comp_colour)
        s.comp_size = dict(self.comp_size)
        s.comp_adj = {k: set(v) for k, v in self.comp_adj.items()}
        s.num_components = self.num_components
        return s


def apply_move(state: FloodState, move: Move) -> FloodState:
    return state.apply_move(move)


def contract(g: ColouredGraph) -> tuple[ColouredGraph, tuple[int, ...]]:
    """Fully contract monochromatic components.

    Returns the quotient graph (vertices renumbered 0..n'-1 in order of
    component names) and the vertex -> quotient-vertex mapping.  The result
    has no monochromatic edge and is the unique fully contracted quotient.
    """
    state = FloodState.from_graph(g)
    names = state.component_names()
    index = {name: i for i, name in enumerate(names)}
    mapping = tuple(index[state.find(v)] for v in range(g.n))
    colours = tuple(state.comp_colour[name] for name in names)
    edges = set()
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    q = build_coloured_graph(len(names), edges, colours, c=g.c)
    return q, mapping


def play_certificate(g: ColouredGraph, cert: Certificate) -> Outcome:
    """Replay a certificate from the initial colouring.

    flooded is true iff a single component remains; target_met checks the
    certificate's claim (target inside one component, of the claimed final
    colour when given).  No-op moves count towards length.
    """
    state = FloodState.from_graph(g)
    for mv in cert.moves:
        state.apply_move(Move(*mv))
    flooded = state.is_flooded
    final = None
    if flooded:
        final = next(iter(state.comp_colour.values()))

    target = cert.target if cert.target is not None else frozenset(range(g.n))
    if target:
        roots = {state.find(v) for v in target}
        linked = len(roots) == 1
        if linked and cert.final_colour is not None:
            linked = state.comp_colour[next(iter(roots))] == cert.final_colour
    else:
        linked = True
    return Outcome(flooded=flooded, target_met=linked,
                   final_colour=final, length=len(cert.moves))


def radius(g: ColouredGraph) -> int:
    """min over u of max over v of d(u, v), by BFS from every vertex."""
    best = g.n
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        ecc = 0
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    if dist[w] > ecc:
                        ecc = dist[w]
                    queue.append(w)
        if ecc < best:
            best = ecc
    return best


def eccentricity_centre(g: ColouredGraph) -> tuple[int, int, list[int]]:
    """(centre vertex, radius, BFS distances from the centre).

    Lowest-id vertex among those of minimum eccentricity, for deterministic
    strategies."""
    best_v, best_ecc, best_dist = 0, g.n, None
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        ecc = 0
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    if dist[w] > ecc:
                        ecc = dist[w]
                    queue.append(w)
        if ecc < best_ecc:
            best_v, best_ecc, best_dist = src, ecc, dist
    return best_v, best_ecc, best_dist


def colour_count(g: ColouredGraph, d: Colour) -> int:
    return g.colour_count(d)
