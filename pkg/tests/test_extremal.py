"""Extremal search, closed forms and the campaign driver."""

from math import ceil

import pytest

from floodit import SolveQuery, build_coloured_graph, min_moves_exact
from floodit.errors import InvalidParams, TooManyColours, UnknownClaim
from floodit.extremal import (Report, max_moves, predicted_value,
                              predicted_value_details, verify_theorem)
from floodit.generators import cycle_graph, path_graph


def test_max_moves_examples():
    assert max_moves(path_graph(3), 2).value == 1
    assert max_moves(cycle_graph(4), 2).value == 2
    assert max_moves(path_graph(5), 3).value == 3


def test_max_moves_witness_is_canonical_and_consistent():
    res = max_moves(path_graph(5), 2)
    assert res.value == 2
    g = build_coloured_graph(5, path_graph(5).edges, res.witness_colouring,
                             c=2)
    assert min_moves_exact(SolveQuery(g)).moves == res.value
    # canonical representatives start with colour 0
    assert res.witness_colouring[0] == 0
    assert res.colourings_evaluated == 15  # S(5,2)


def test_max_moves_workers_match_sequential():
    seq = max_moves(path_graph(6), 2)
    par = max_moves(path_graph(6), 2, workers=2)
    assert (seq.value, seq.witness_colouring) == (par.value,
                                                  par.witness_colouring)


def test_max_moves_too_many_colours():
    with pytest.raises(TooManyColours):
        max_moves(path_graph(3), 4)


def test_predicted_value_closed_forms():
    assert predicted_value("path", n=8, c=3) == 5
    assert predicted_value("tree_Tcr", c=2, r=2) == 2
    assert predicted_value("grid_bounds", k=2, n=10, c=3) == (6, 8)
    assert predicted_value("cycle", n=6, c=2) == 3
    assert predicted_value("colour_bound", n=7, c=3) == 4
    assert predicted_value("radius_bound", r=3, c=4) == 9


def test_predicted_value_blowups():
    c = 2
    t = 2 * c ** 10
    assert predicted_value("blowup_path", t=t, c=c) == t - ceil(t / c)
    below = predicted_value("blowup_path", t=9, c=3, n=14)
    assert below == (9 - 3, 14 - ceil(14 / 3))
    details = predicted_value_details("blowup_path", t=9, c=3, n=14)
    assert not details["exact"] and "conjectured" in details["note"]
    with pytest.raises(InvalidParams):
        predicted_value("blowup_path", t=9, c=3)  # below threshold needs n


def test_predicted_value_bad_family():
    with pytest.raises(InvalidParams):
        predicted_value("hypercube", n=3)


def test_verify_theorem_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify_theorem("no-such-claim")


def test_verify_theorem_small_runs():
    rep = verify_theorem("path-result", {"n_range": (2, 5), "colours": (2,)})
    assert rep.passed and rep.instances == 4
    rep = verify_theorem("colour-dif", {"n_range": (2, 12),
                                        "colours": (2, 3)})
    assert rep.passed


def test_report_serialization():
    rep = Report("demo", {"n": 3}, 5, failures=["bad thing"])
    assert not rep.passed
    text = rep.to_json()
    assert '"claim": "demo"' in text and '"passed": false' in text
    assert "FAIL" in rep.summary()


def test_randomized_campaigns_small():
    for claim in ("c-col", "spanning-trees", "subgraph",
                  "basic-monotonicity", "change-colouring",
                  "dominating-path", "path-section", "not-rainbow-col"):
        rep = verify_theorem(claim, {"instances": 60})
        assert rep.passed, rep.summary()


def test_grid_bounds_bracket_measured_values():
    # small-grid experiment: the generic interval must bracket the exhaustive
    # worst case
    from floodit.generators import grid_graph
    for k, n, c in ((2, 3, 2), (2, 4, 2), (2, 3, 3), (3, 2, 2)):
        lo, hi = predicted_value("grid_bounds", k=k, n=n, c=c)
        got = max_moves(grid_graph(k, n), c).value
        assert lo <= got <= hi, (k, n, c, got, (lo, hi))


def test_solve_time_limit():
    import floodit.solvers as solvers
    from floodit.errors import BudgetExceeded
    from floodit.generators import blowup_path_graph, path_colouring_of_blowup
    from floodit.generators import rainbow_colouring
    solvers.clear_cache()
    shape = blowup_path_graph([2] * 8)
    g = build_coloured_graph(
        shape.n, shape.edges,
        path_colouring_of_blowup(shape, rainbow_colouring(8, 3)), c=3)
    with pytest.raises(BudgetExceeded):
        min_moves_exact(SolveQuery(g, time_limit=1e-9))


def test_structured_campaigns_small():
    rep = verify_theorem("blowup-lb", {"t_max": 5, "colours": (2, 3),
                                       "samples": 2})
    assert rep.passed
    rep = verify_theorem("rainbow-target", {"n_range": (2, 12),
                                            "colours": (2, 3)})
    assert rep.passed
    rep = verify_theorem("cycle-lb", {"n_range": (3, 10), "colours": (2, 3)})
    assert rep.passed
    rep = verify_theorem("tree-tight", {"pairs": ((2, 1), (2, 2))})
    assert rep.passed
