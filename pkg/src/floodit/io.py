"""Text formats: floodgraph v1 and floodcert v1.

floodgraph v1
    floodgraph v1 n=<n> c=<c>
    colours: <c0> <c1> ... <c_{n-1}>
    edge: <u> <v>          (one line per edge)

floodcert v1
    floodcert v1
    move: <vertex> <colour>   (one line per move)
    final: <colour>           (optional)
"""

from __future__ import annotations

from pathlib import Path

from .core import Certificate, ColouredGraph, Move, build_coloured_graph
from .errors import ParseError

GRAPH_HEADER = "floodgraph v1"
CERT_HEADER = "floodcert v1"


def dump_graph(g: ColouredGraph) -> str:
    lines = [f"{GRAPH_HEADER} n={g.n} c={g.c}"]
    lines.append("colours: " + " ".join(str(x) for x in g.colours))
    for u, v in g.edges:
        lines.append(f"edge: {u} {v}")
    return "\n".join(lines) + "\n"


def write_graph(g: ColouredGraph, path) -> None:
    Path(path).write_text(dump_graph(g))


def parse_graph(text: str) -> ColouredGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph document")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "floodgraph" or head[1] != "v1":
        raise ParseError(f"bad header: {lines[0]!r}")
    try:
        fields = dict(kv.split("=", 1) for kv in head[2:])
        n = int(fields["n"])
        c = int(fields["c"])
    except (ValueError, KeyError) as e:
        raise ParseError(f"bad header fields: {lines[0]!r}") from e
    if len(lines) < 2 or not lines[1].startswith("colours:"):
        raise ParseError("missing colours line")
    try:
        colours = [int(x) for x in lines[1][len("colours:"):].split()]
    except ValueError as e:
        raise ParseError("bad colours line") from e
    if len(colours) != n:
        raise ParseError(f"expected {n} colours, got {len(colours)}")
    edges = []
    for ln in lines[2:]:
        if not ln.startswith("edge:"):
            raise ParseError(f"unexpected line: {ln!r}")
        parts = ln[len("edge:"):].split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise ParseError(f"bad edge line: {ln!r}") from e
    return build_coloured_graph(n, edges, colours, c=c)


def read_graph(path) -> ColouredGraph:
    return parse_graph(Path(path).read_text())


def dump_certificate(cert: Certificate) -> str:
    lines = [CERT_HEADER]
    for v, d in cert.moves:
        lines.append(f"move: {v} {d}")
    if cert.final_colour is not None:
        lines.append(f"final: {cert.final_colour}")
    return "\n".join(lines) + "\n"


def write_certificate(cert: Certificate, path) -> None:
    Path(path).write_text(dump_certificate(cert))


def parse_certificate(text: str) -> Certificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CERT_HEADER:
        raise ParseError("bad certificate header")
    moves: list[Move] = []
    final = None
    for ln in lines[1:]:
        if ln.startswith("move:"):
            if final is not None:
                raise ParseError("move after final line")
            parts = ln[len("move:"):].split()
            if len(parts) != 2:
                raise ParseError(f"bad move line: {ln!r}")
            try:
                moves.append(Move(int(parts[0]), int(parts[1])))
            except ValueError as e:
                raise ParseError(f"bad move line: {ln!r}") from e
        elif ln.startswith("final:"):
            if final is not None:
                raise ParseError("duplicate final line")
            try:
                final = int(ln[len("final:"):].strip())
            except ValueError as e:
                raise ParseError(f"bad final line: {ln!r}") from e
        else:
            raise ParseError(f"unexpected line: {ln!r}")
    return Certificate(moves=moves, final_colour=final)


def read_certificate(path) -> Certificate:
    return parse_certificate(Path(path).read_text())
