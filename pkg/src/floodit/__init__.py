"""Free Flood-It on coloured graphs.

Library layout:
    core        graph model, flood moves, contraction, certificate replay
    io          floodgraph v1 / floodcert v1 text formats
    solvers     exact A* search and the greedy upper bound
    pathdp      polynomial path and cycle solvers
    generators  graph and colouring families, small-graph enumeration
    extremal    worst-colouring search M_c, closed forms, theorem campaigns
    strategies  certificate-emitting constructive strategies
    cli         command-line front end
"""

from . import extremal, generators, io, pathdp, solvers, strategies
from .core import (
    Certificate,
    ColouredGraph,
    FloodState,
    Move,
    Outcome,
    apply_move,
    build_coloured_graph,
    colour_count,
    contract,
    play_certificate,
    radius,
)
from .solvers import SolveQuery, SolveResult, greedy_upper_bound, min_moves_exact
from .pathdp import cycle_min_moves, path_min_moves

__all__ = [
    "Certificate",
    "ColouredGraph",
    "FloodState",
    "Move",
    "Outcome",
    "SolveQuery",
    "SolveResult",
    "apply_move",
    "build_coloured_graph",
    "colour_count",
    "contract",
    "cycle_min_moves",
    "greedy_upper_bound",
    "min_moves_exact",
    "path_min_moves",
    "play_certificate",
    "radius",
]

__version__ = "0.1.0"
