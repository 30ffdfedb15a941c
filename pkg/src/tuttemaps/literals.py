"""Parsers for the subgraph, orientation and configuration literals."""

from __future__ import annotations

from .errors import LiteralError, MapError
from .orientation import Orientation, from_tails


def _items(text):
    text = text.strip()
    if text in ("", "-", "{}"):
        return []
    return [t.strip() for t in text.split(",")]


def parse_subgraph(m, text) -> int:
    """Comma-separated edges, each named by either of its half-edges."""
    mask = 0
    for tok in _items(text):
        try:
            e = m.edge(tok)
        except MapError as exc:
            raise LiteralError(str(exc)) from None
        if mask >> e & 1:
            raise LiteralError(f"edge {m.edge_names[e]} listed twice")
        mask |= 1 << e
    return mask


def parse_orientation(m, text) -> Orientation:
    """Comma-separated tail half-edges, exactly one per edge."""
    tails = []
    seen = set()
    for tok in _items(text):
        try:
            h = m.half_edge(tok)
        except MapError as exc:
            raise LiteralError(str(exc)) from None
        e = m.edge_of[h]
        if e in seen:
            raise LiteralError(f"edge {m.edge_names[e]} oriented twice")
        seen.add(e)
        tails.append(h)
    missing = [m.edge_names[e] for e in range(m.n_edges) if e not in seen]
    if missing:
        raise LiteralError("no tail given for edge(s): " + ",".join(missing))
    return from_tails(m, tails)


def parse_vertex_values(m, text) -> tuple:
    """``name=count`` pairs covering every vertex exactly once."""
    values = [None] * m.n_vertices
    for item in _items(text):
        name, sep, count = item.partition("=")
        if not sep:
            raise LiteralError(f"expected name=count, got {item!r}")
        try:
            v = m.vertex(name.strip())
        except MapError as exc:
            raise LiteralError(str(exc)) from None
        if values[v] is not None:
            raise LiteralError(f"vertex {m.vertex_names[v]} given twice")
        try:
            values[v] = int(count)
        except ValueError:
            raise LiteralError(f"bad count {count!r}") from None
        if values[v] < 0:
            raise LiteralError(f"negative count for vertex {m.vertex_names[v]}")
    missing = [m.vertex_names[v] for v in range(m.n_vertices) if values[v] is None]
    if missing:
        raise LiteralError("no value for vertex(es): " + ",".join(missing))
    return tuple(values)


def subgraph_str(m, mask) -> str:
    return ",".join(m.edge_names[e] for e in range(m.n_edges) if mask >> e & 1)
