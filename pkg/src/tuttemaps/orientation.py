"""Orientations, outdegree sequences, excess, directed cycles and cocycles.

An :class:`Orientation` is a bitmask over edges: bit ``e`` clear means the
edge's first half-edge (lower dense index) is the tail, bit set means the
second one is.  Flipping a set of edges is therefore an XOR.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .enumeration import bits, n_components
from .errors import NotDirected, OutdegreeMismatch, SameOrientationOnEdge, SumMismatch


@dataclass(frozen=True, order=True)
class Orientation:
    bits: int

    def tail(self, m, e):
        return m.edges[e][self.bits >> e & 1]

    def head(self, m, e):
        return m.edges[e][1 - (self.bits >> e & 1)]

    def is_tail(self, m, h):
        return self.tail(m, m.edge_of[h]) == h

    def arcs(self, m):
        """``(tail_vertex, head_vertex)`` per edge."""
        return [(m.vertex_of[self.tail(m, e)], m.vertex_of[self.head(m, e)]) for e in range(m.n_edges)]

    def flipped(self, mask):
        return Orientation(self.bits ^ mask)


def from_tails(m, tails):
    """Orientation whose tails are the given half-edges, one per edge."""
    b = 0
    for h in tails:
        e = m.edge_of[h]
        if m.edges[e][1] == h:
            b |= 1 << e
    return Orientation(b)


def from_arcs(m, arcs):
    """Orientation from ``(tail, head)`` half-edge pairs."""
    return from_tails(m, [t for t, _ in arcs])


def reverse_all(m, o):
    return Orientation(o.bits ^ m.all_edges)


def orientation_str(m, o):
    return ",".join(m.tokens[o.tail(m, e)] for e in range(m.n_edges))


def arcs_str(m, o):
    return " ".join(f"({m.tokens[o.tail(m, e)]},{m.tokens[o.head(m, e)]})" for e in range(m.n_edges))


# -- outdegree sequences and excess -------------------------------------------


def outdegree_sequence(m, o):
    delta = [0] * m.n_vertices
    for e in range(m.n_edges):
        delta[m.vertex_of[o.tail(m, e)]] += 1
    return tuple(delta)


def _vertex_mask(U):
    if isinstance(U, int):
        return U
    out = 0
    for v in U:
        out |= 1 << v
    return out


def _inner_edges(m, umask):
    return sum(1 for u, v in m.endpoints if umask >> u & 1 and umask >> v & 1)


def excess(m, delta, U):
    """``sum(delta[u] for u in U)`` minus the number of edges inside ``U``.

    ``U`` is an iterable of vertex indices or a vertex bitmask.
    """
    umask = _vertex_mask(U)
    return sum(delta[v] for v in bits(umask)) - _inner_edges(m, umask)


def _excesses(m, delta):
    """Excess of every vertex subset, indexed by vertex bitmask."""
    n = m.n_vertices
    inner = m._cache.get(("inner_edges",))
    if inner is None:
        inner = [_inner_edges(m, u) for u in range(1 << n)]
        m._cache[("inner_edges",)] = inner
    out = [0] * (1 << n)
    for u in range(1, 1 << n):
        low = u & -u
        v = low.bit_length() - 1
        out[u] = out[u ^ low] + delta[v]
    return [out[u] - inner[u] for u in range(1 << n)]


def _check_sum(m, delta):
    if len(delta) != m.n_vertices:
        raise SumMismatch(f"expected {m.n_vertices} values, got {len(delta)}")
    if sum(delta) != m.n_edges:
        raise SumMismatch(f"sum of delta is {sum(delta)}, the map has {m.n_edges} edges")


def is_outdegree_sequence(m, delta):
    _check_sum(m, delta)
    if any(d < 0 for d in delta):
        return False
    return all(x >= 0 for x in _excesses(m, delta))


def is_v0_connected_seq(m, delta):
    if not is_outdegree_sequence(m, delta):
        return False
    full = (1 << m.n_vertices) - 1
    root = 1 << m.root_vertex
    exc = _excesses(m, delta)
    return all(exc[u] > 0 for u in range(1, full) if u & root)


def is_strongly_connected_seq(m, delta):
    if not is_outdegree_sequence(m, delta):
        return False
    full = (1 << m.n_vertices) - 1
    exc = _excesses(m, delta)
    return all(exc[u] > 0 for u in range(1, full))


# -- reachability and classification ----------------------------------------------


def _out_adjacency(m, o, reverse=False):
    adj = [[] for _ in range(m.n_vertices)]
    for e in range(m.n_edges):
        t, h = m.vertex_of[o.tail(m, e)], m.vertex_of[o.head(m, e)]
        if reverse:
            t, h = h, t
        adj[t].append(h)
    return adj


def reachable_set(m, o, u, reverse=False, within=None):
    """Vertices reachable from ``u`` (or reaching ``u`` when ``reverse``).

    ``within`` optionally restricts the walk to a vertex set.
    """
    adj = _out_adjacency(m, o, reverse)
    seen = {u}
    todo = deque([u])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in seen and (within is None or y in within):
                seen.add(y)
                todo.append(y)
    return seen


def reachable(m, o, u, v):
    return v in reachable_set(m, o, u)


def reachable_by_excess(m, o, u, v):
    """No vertex subset containing ``u`` but not ``v`` has excess 0."""
    exc = _excesses(m, outdegree_sequence(m, o))
    return not any(exc[U] == 0 for U in range(1 << m.n_vertices) if U >> u & 1 and not U >> v & 1)


@dataclass(frozen=True)
class Classification:
    acyclic: bool
    strongly_connected: bool
    v0_connected: bool


def is_acyclic(m, o):
    return not enumerate_directed_cycles(m, o)


def is_strongly_connected(m, o):
    return len(reachable_set(m, o, 0)) == m.n_vertices and len(reachable_set(m, o, 0, True)) == m.n_vertices


def is_v0_connected(m, o):
    return len(reachable_set(m, o, m.root_vertex)) == m.n_vertices


def classify(m, o) -> Classification:
    return Classification(is_acyclic(m, o), is_strongly_connected(m, o), is_v0_connected(m, o))


# -- directed cycles and cocycles --------------------------------------------------


def enumerate_directed_cycles(m, o):
    """Edge masks of all simple directed cycles, each listed once.

    Every cycle is found from its least-index edge, continuing only along
    edges of larger index.  A loop is a cycle of length 1.
    """
    key = ("dcycles", o.bits)
    cached = m._cache.get(key)
    if cached is not None:
        return cached
    out_arcs = [[] for _ in range(m.n_vertices)]
    for e in range(m.n_edges):
        out_arcs[m.vertex_of[o.tail(m, e)]].append((e, m.vertex_of[o.head(m, e)]))
    found = []
    for s in range(m.n_edges):
        start = m.vertex_of[o.tail(m, s)]
        first = m.vertex_of[o.head(m, s)]
        if first == start:
            found.append(1 << s)
            continue

        def dfs(x, on_path, mask):
            for f, y in out_arcs[x]:
                if f <= s:
                    continue
                if y == start:
                    found.append(mask | 1 << f)
                elif y not in on_path:
                    on_path.add(y)
                    dfs(y, on_path, mask | 1 << f)
                    on_path.discard(y)

        dfs(first, {start, first}, 1 << s)
    found = tuple(found)
    m._cache[key] = found
    return found


def bonds(m):
    """``(side, cut)`` for every bipartition with both sides connected.

    ``side`` is the vertex bitmask of the part not containing vertex 0,
    ``cut`` the mask of crossing edges.  Loops never cross.
    """
    key = ("bonds",)
    cached = m._cache.get(key)
    if cached is not None:
        return cached
    n = m.n_vertices
    full = (1 << n) - 1
    out = []
    for side in range(2, full + 1, 2):  # vertex 0 stays outside ``side``
        cut = 0
        inside_a = inside_b = 0
        for e, (u, v) in enumerate(m.endpoints):
            iu, iv = side >> u & 1, side >> v & 1
            if iu != iv:
                cut |= 1 << e
            elif iu:
                inside_a |= 1 << e
            else:
                inside_b |= 1 << e
        if _side_connected(m, side, inside_a) and _side_connected(m, full ^ side, inside_b):
            out.append((side, cut))
    out = tuple(out)
    m._cache[key] = out
    return out


def _side_connected(m, vmask, emask):
    # components of the induced subgraph equal 1 when the vertex count
    # outside vmask is accounted for as isolated vertices
    outside = m.n_vertices - vmask.bit_count()
    return n_components(m, emask) == outside + 1


def enumerate_directed_cocycles(m, o):
    """Edge masks of the bonds whose arcs all point to the same side."""
    key = ("dcocycles", o.bits)
    cached = m._cache.get(key)
    if cached is not None:
        return cached
    found = []
    for side, cut in bonds(m):
        into = out = False
        for e in bits(cut):
            if side >> m.vertex_of[o.head(m, e)] & 1:
                into = True
            else:
                out = True
        if into != out:
            found.append(cut)
    found = tuple(found)
    m._cache[key] = found
    return found


def flip(m, o, mask):
    """Reverse every arc of a directed cycle or directed cocycle."""
    if mask not in enumerate_directed_cycles(m, o) and mask not in enumerate_directed_cocycles(m, o):
        raise NotDirected("edge set is neither a directed cycle nor a directed cocycle")
    return Orientation(o.bits ^ mask)


def disagreement_cycle(m, o, o2, e):
    """An ``o``-directed cycle inside ``K = {edges where o and o2 differ}``
    containing ``e``.

    Walk forward from the head of ``e`` along unused arcs of ``K``; equal
    outdegrees guarantee an exit from every vertex but the tail of ``e``.
    Closed detours are cut out so the result is simple.
    """
    if outdegree_sequence(m, o) != outdegree_sequence(m, o2):
        raise OutdegreeMismatch("orientations have different outdegree sequences")
    K = o.bits ^ o2.bits
    if not K >> e & 1:
        raise SameOrientationOnEdge(f"edge {m.edge_names[e]} has the same direction in both")
    start = m.vertex_of[o.tail(m, e)]
    used = 1 << e
    path = [(m.vertex_of[o.head(m, e)], e)]  # (vertex reached, edge used)
    while path[-1][0] != start:
        w = path[-1][0]
        nxt = None
        for f in bits(K & ~used):
            if m.vertex_of[o.tail(m, f)] == w:
                nxt = f
                break
        if nxt is None:
            raise SameOrientationOnEdge("walk got stuck; orientations are inconsistent")
        used |= 1 << nxt
        y = m.vertex_of[o.head(m, nxt)]
        # cut out a closed detour when y is already on the path
        for i, (x, _) in enumerate(path):
            if x == y and y != start:
                del path[i + 1:]
                break
        else:
            path.append((y, nxt))
    mask = 0
    for _, f in path:
        mask |= 1 << f
    return mask
