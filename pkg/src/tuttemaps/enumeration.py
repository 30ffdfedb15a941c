"""Exhaustive enumeration oracles over subgraphs, orientations and trees.

Subgraphs are int bitmasks over edge indices (bit ``e`` set means edge
``e`` is present).  All iterators are deterministic.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapExceeded

DEFAULT_EDGE_CAP = 16


def _check_cap(m, cap):
    if m.n_edges > cap:
        raise CapExceeded(f"map has {m.n_edges} edges, enumeration cap is {cap}")


def bits(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def mask_of(edges):
    out = 0
    for e in edges:
        out |= 1 << e
    return out


def components(m, mask):
    """Union-find over the vertices using the edges of ``mask``.

    Returns ``(labels, count)`` where ``labels[v]`` is a representative.
    """
    parent = list(range(m.n_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    count = m.n_vertices
    e = 0
    while mask:
        if mask & 1:
            u, v = m.endpoints[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        mask >>= 1
        e += 1
    return [find(v) for v in range(m.n_vertices)], count


def n_components(m, mask):
    return components(m, mask)[1]


def connected_in(m, mask, u, v):
    if u == v:
        return True
    labels, _ = components(m, mask)
    return labels[u] == labels[v]


def is_forest(m, mask):
    return n_components(m, mask) == m.n_vertices - mask.bit_count()


def is_spanning_tree(m, mask):
    return mask.bit_count() == m.n_vertices - 1 and n_components(m, mask) == 1


def is_connected_subgraph(m, mask):
    return n_components(m, mask) == 1


def enumerate_subgraphs(m, cap=DEFAULT_EDGE_CAP):
    _check_cap(m, cap)
    return iter(range(1 << m.n_edges))


def enumerate_orientations(m, cap=DEFAULT_EDGE_CAP):
    from .orientation import Orientation

    _check_cap(m, cap)
    return (Orientation(b) for b in range(1 << m.n_edges))


def enumerate_spanning_trees(m, cap=DEFAULT_EDGE_CAP):
    """All spanning trees, as masks, in lexicographic order of edge lists."""
    _check_cap(m, cap)
    key = ("spanning_trees",)
    if key not in m._cache:
        found = []
        for combo in combinations(range(m.n_edges), m.n_vertices - 1):
            mask = mask_of(combo)
            if n_components(m, mask) == 1:
                found.append(mask)
        m._cache[key] = tuple(found)
    return iter(m._cache[key])


def enumerate_forests(m, cap=DEFAULT_EDGE_CAP):
    return (s for s in enumerate_subgraphs(m, cap) if is_forest(m, s))
