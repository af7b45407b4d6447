"""Family generators, colouring families and small-graph enumeration."""

import random
from math import factorial

import pytest

from floodit import build_coloured_graph, radius
from floodit.errors import IncompatibleSpec, InvalidParams
from floodit.extremal import enumerate_surjective_colourings
from floodit.generators import (ColouringSpec, FamilySpec, blowup_cycle_graph,
                                blowup_path_graph, check_blowup,
                                count_maps_surjective, cycle_graph,
                                dense_relabel, enumerate_small_graphs,
                                gen_colouring, gen_graph, grid_graph,
                                is_rainbow, is_shifted_rainbow, path_graph,
                                rainbow_colouring, random_connected_graph,
                                random_surjective_colouring,
                                remark_bichromatic_colouring, scr_sequences,
                                scr_tree_colouring, spanning_trees, star_graph,
                                tcr_tree)


def test_path_and_cycle_shapes():
    p = path_graph(5)
    assert p.n == 5 and len(p.edges) == 4
    c = cycle_graph(4)
    assert c.n == 4 and len(c.edges) == 4
    with pytest.raises(InvalidParams):
        cycle_graph(2)


def test_tcr_tree_smallest():
    t = tcr_tree(2, 2)
    # two legs of two vertices each: a path on five vertices
    assert t.n == 5
    g = t.coloured([0] * 5, c=1)
    assert radius(g) == 2
    degs = sorted(len(a) for a in g.adj)
    assert degs == [1, 1, 2, 2, 2]


def test_tcr_tree_radius_is_r():
    for c, r in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)]:
        t = tcr_tree(c, r)
        assert t.n == 1 + r * r * (c - 1) ** (r + 1)
        g = t.coloured([0] * t.n, c=1)
        assert radius(g) == r


def test_blowup_path_structure():
    b = blowup_path_graph([2, 2, 2])
    assert b.n == 6 and len(b.edges) == 8
    assert check_blowup(b)
    bc = blowup_cycle_graph([1, 2, 1])
    assert check_blowup(bc)


def test_blowup_random_structures_validate():
    rng = random.Random(5)
    for trial in range(40):
        t = rng.randint(1, 8)
        sizes = [rng.randint(1, 3) for _ in range(t)]
        assert check_blowup(blowup_path_graph(sizes))
        if t >= 3:
            assert check_blowup(blowup_cycle_graph(sizes))


def test_path_coloured_blowup_with_class_edges_contracts_to_path():
    # filling in the classes makes a path-coloured blow-up collapse to the
    # underlying coloured path under contraction
    from floodit import contract
    from floodit.pathdp import path_order
    rng = random.Random(13)
    for trial in range(40):
        t = rng.randint(2, 8)
        sizes = [rng.randint(1, 3) for _ in range(t)]
        shape = blowup_path_graph(sizes)
        f = [rng.randrange(3)]
        while len(f) < t:
            nxt = rng.randrange(3)
            if nxt != f[-1]:
                f.append(nxt)
        cols = []
        for cls, col in zip(shape.blowup.classes, f):
            cols.extend([col] * len(cls))
        mapping = {}
        for x in cols:
            mapping.setdefault(x, len(mapping))
        filled = list(shape.edges)
        for cls in shape.blowup.classes:
            filled.extend((u, v) for i, u in enumerate(cls)
                          for v in cls[i + 1:])
        g = build_coloured_graph(shape.n, filled,
                                 [mapping[x] for x in cols])
        q, _ = contract(g)
        order = path_order(q)  # raises if not a path
        assert [q.colours[v] for v in order] in (
            [mapping[x] for x in f], [mapping[x] for x in reversed(f)])


def test_grid_shape():
    g = grid_graph(2, 3)
    assert g.n == 6 and len(g.edges) == 7


def test_gen_graph_dispatch():
    shape = gen_graph(FamilySpec("path", {"n": 4}))
    assert shape.kind == "path"
    with pytest.raises(InvalidParams):
        gen_graph(FamilySpec("nonsense", {}))
    with pytest.raises(InvalidParams):
        gen_graph(FamilySpec("path", {}))


def test_rainbow_colouring_and_checker():
    assert rainbow_colouring(5, 2) == [0, 1, 0, 1, 0]
    assert is_rainbow([0, 1, 0, 1, 0], 2)
    assert not is_rainbow([0, 1, 1], 2)
    # any consistent permutation of the palette is accepted
    assert is_rainbow([2, 0, 1, 2, 0], 3)
    # shifted variants are rainbow for the shifted checker
    for r in range(4):
        cols = rainbow_colouring(9, 4, r)
        assert is_shifted_rainbow(cols, 4, r)
        assert is_shifted_rainbow(cols, 4)


def test_generated_colourings_pass_checkers():
    rng = random.Random(19)
    for trial in range(60):
        n = rng.randint(2, 40)
        c = rng.randint(2, 6)
        r = rng.randrange(n)
        assert is_shifted_rainbow(rainbow_colouring(n, c, r), c)


def test_scr_sequences_examples():
    seqs = scr_sequences(3, 2)
    assert len(seqs) == 4
    assert seqs == [(1, 0), (1, 2), (2, 0), (2, 1)]
    for c, r in [(2, 1), (2, 3), (3, 2), (4, 2)]:
        assert len(scr_sequences(c, r)) == (c - 1) ** r


def test_scr_tree_colouring_properties():
    shape = tcr_tree(3, 2)
    cols = scr_tree_colouring(shape)
    assert cols[0] == 0
    g = shape.coloured(cols, c=3)
    # proper colouring: legs never repeat consecutively, first leg vertex
    # differs from the centre
    for u, v in g.edges:
        assert cols[u] != cols[v]
    # every admissible sequence appears on (c-1)*r = 4 legs
    from collections import Counter
    counts = Counter(tuple(cols[v] for v in leg) for leg in shape.meta["legs"])
    assert all(v == 4 for v in counts.values())
    assert len(counts) == 4


def test_remark_colouring_formula():
    shape = blowup_path_graph([2, 2, 2])
    cols = remark_bichromatic_colouring(shape, 3)
    per_class = [tuple(cols[v] for v in cls) for cls in shape.blowup.classes]
    assert per_class == [(1, 2), (0, 1), (2, 0)]
    with pytest.raises(IncompatibleSpec):
        remark_bichromatic_colouring(blowup_path_graph([1, 2, 2]), 3)


def test_random_surjective():
    for seed in range(10):
        cols = random_surjective_colouring(8, 3, seed)
        assert set(cols) == {0, 1, 2}
    with pytest.raises(InvalidParams):
        random_surjective_colouring(2, 3, 0)


def test_gen_colouring_dispatch():
    shape = path_graph(6)
    cols = gen_colouring(shape, ColouringSpec("rainbow", {"c": 3}))
    assert is_rainbow(cols, 3)
    cols = gen_colouring(shape, ColouringSpec("shifted_rainbow",
                                              {"c": 3, "shift": 2}))
    assert is_shifted_rainbow(cols, 3, 2)
    with pytest.raises(IncompatibleSpec):
        gen_colouring(star_graph(3), ColouringSpec("rainbow", {"c": 2}))


def test_enumerate_small_graphs_counts():
    assert len(list(enumerate_small_graphs(2))) == 2
    assert len(list(enumerate_small_graphs(3))) == 4
    assert len(list(enumerate_small_graphs(4))) == 10
    # connected graph counts per order: 1, 1, 2, 6, 21, 112
    shapes = list(enumerate_small_graphs(6))
    per_n = {}
    for s in shapes:
        per_n[s.n] = per_n.get(s.n, 0) + 1
    assert per_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    with pytest.raises(InvalidParams):
        list(enumerate_small_graphs(8))


def test_enumerate_small_graphs_n7_count():
    per_n = {}
    for s in enumerate_small_graphs(7):
        per_n[s.n] = per_n.get(s.n, 0) + 1
    assert per_n[7] == 853


def test_enumerated_graphs_are_connected_and_distinct():
    seen = set()
    for s in enumerate_small_graphs(5):
        g = build_coloured_graph(s.n, s.edges, [0] * s.n, c=1)
        key = (s.n, s.edges)
        assert key not in seen
        seen.add(key)


def test_spanning_trees_of_cycle():
    shape = cycle_graph(5)
    trees = list(spanning_trees(5, shape.edges))
    assert len(trees) == 5


def test_random_connected_is_connected():
    for seed in range(30):
        shape = random_connected_graph(6, 2, seed)
        build_coloured_graph(6, shape.edges, [0] * 6, c=1)  # validates


def test_surjective_enumeration_counts():
    shape = path_graph(3)
    assert list(enumerate_surjective_colourings(shape, 2)) == [
        (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    two = path_graph(2)
    assert list(enumerate_surjective_colourings(two, 2)) == [(0, 1)]


def test_enumeration_completeness_against_direct_count():
    # canonical representatives x c! orbit size = all surjective maps
    for n in range(1, 7):
        shape = path_graph(n)
        for c in range(1, n + 1):
            count = sum(1 for _ in enumerate_surjective_colourings(shape, c))
            assert count * factorial(c) == count_maps_surjective(n, c)


def test_enumeration_matches_brute_force_filter():
    import itertools
    shape = path_graph(4)
    got = set(enumerate_surjective_colourings(shape, 2))
    want = set()
    for cols in itertools.product(range(2), repeat=4):
        if set(cols) != {0, 1}:
            continue
        mapping = {}
        for x in cols:
            mapping.setdefault(x, len(mapping))
        want.add(tuple(mapping[x] for x in cols))
    assert got == want


def test_dense_relabel():
    cols, mapping = dense_relabel([5, 2, 5, 9], extras=[4])
    assert cols == [0, 1, 0, 2]
    assert mapping == {5: 0, 2: 1, 9: 2, 4: 3}
