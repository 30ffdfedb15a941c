"""Bijections between subgraphs, orientations and outdegree sequences.

``phi`` sends a subgraph to an orientation, ``psi`` is its inverse, and
``gamma`` sends a forest to the outdegree sequence of its image.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .enumeration import (
    bits,
    enumerate_orientations,
    enumerate_subgraphs,
    is_connected_subgraph,
    is_forest,
    is_spanning_tree,
)
from .errors import (
    InternalError,
    NotAForest,
    NotAnOutdegreeSequence,
    NotV0Connected,
    SumMismatch,
)
from .orientation import (
    Orientation,
    enumerate_directed_cocycles,
    enumerate_directed_cycles,
    from_tails,
    is_acyclic,
    is_outdegree_sequence,
    is_strongly_connected,
    is_v0_connected,
    outdegree_sequence,
    reachable_set,
)
from .trees import delta, edge_set_str, tree_data, tutte_polynomial


def phi_tree(m, tree) -> Orientation:
    """Tree edges point from their lesser half-edge, the others toward it."""
    d = tree_data(m, tree)
    tails = [d.low[e] if tree >> e & 1 else d.high[e] for e in range(m.n_edges)]
    return from_tails(m, tails)


def construct_tree(m, o) -> int:
    """Recover ``T`` from ``phi_tree(m, T)`` by walking the tour."""
    h = m.root
    visited = tree = 0
    steps = 0
    while True:
        e = m.edge_of[h]
        bit = 1 << e
        if not visited & bit:
            if o.is_tail(m, h):
                tree |= bit
            visited |= bit
        h = m.sigma[m.alpha[h]] if tree & bit else m.sigma[h]
        steps += 1
        if h == m.root:
            break
        if steps > m.n_half:
            raise InternalError("construct_tree exceeded its step bound")
    if not is_spanning_tree(m, tree):
        raise InternalError(f"construct_tree produced {edge_set_str(m, tree)}; input is not of the form O_T")
    return tree


def phi(m, subgraph) -> Orientation:
    tree = delta(m, subgraph)
    d = tree_data(m, tree)
    diff = subgraph ^ tree
    b = 0
    for e in range(m.n_edges):
        touched = d.fundamental[e] & diff != 0
        forward = not touched if tree >> e & 1 else touched
        tail = d.low[e] if forward else d.high[e]
        if m.edges[e][1] == tail:
            b |= 1 << e
    return Orientation(b)


@dataclass
class PsiRun:
    """Trace of one execution of ``psi``."""

    subgraph: int
    tree: int
    visit: list                       # half-edges in visiting order
    branch: dict = field(default_factory=dict)  # edge -> "a", "b", ..., "c'"
    first_a: tuple | None = None      # (edge, cycle mask) where (a) first fired


def _first(mask, visited, vrank):
    """First visited edge of ``mask`` (which must meet ``visited``)."""
    return min(bits(mask & visited), key=vrank.__getitem__)


def _tight(e, D, family, visited, vrank):
    """The quantified clause of conditions (b) and (b')."""
    ef = _first(D, visited, vrank)
    for D2 in family:
        if not D2 & visited or _first(D2, visited, vrank) != ef:
            continue
        if D2 >> e & 1:
            continue
        sym = D ^ D2
        if not sym & visited or not D2 >> _first(sym, visited, vrank) & 1:
            return False
    return True


def psi_run(m, o, check=True) -> PsiRun:
    cycles = enumerate_directed_cycles(m, o)
    cocycles = enumerate_directed_cocycles(m, o)
    h = m.root
    visited = s = tree = 0
    vrank = [-1] * m.n_edges
    first_half = [-1] * m.n_edges
    run = PsiRun(0, 0, [])
    steps = 0
    while True:
        run.visit.append(h)
        e = m.edge_of[h]
        bit = 1 << e
        if not visited & bit:
            if o.is_tail(m, h):
                C = next((C for C in cycles if C & bit and not C & visited), None)
                if C is not None:
                    s |= bit
                    run.branch[e] = "a"
                    if run.first_a is None:
                        run.first_a = (e, C)
                elif any(
                    D & bit and D & visited
                    and not o.is_tail(m, first_half[_first(D, visited, vrank)])
                    and _tight(e, D, cocycles, visited, vrank)
                    for D in cocycles
                ):
                    run.branch[e] = "b"
                else:
                    s |= bit
                    tree |= bit
                    run.branch[e] = "c"
            else:
                if any(D & bit and not D & visited for D in cocycles):
                    tree |= bit
                    run.branch[e] = "a'"
                elif any(
                    C & bit and C & visited
                    and o.is_tail(m, first_half[_first(C, visited, vrank)])
                    and _tight(e, C, cycles, visited, vrank)
                    for C in cycles
                ):
                    s |= bit
                    tree |= bit
                    run.branch[e] = "b'"
                else:
                    run.branch[e] = "c'"
            vrank[e] = visited.bit_count()
            first_half[e] = h
            visited |= bit
        h = m.sigma[m.alpha[h]] if tree & bit else m.sigma[h]
        steps += 1
        if h == m.root:
            break
        if steps > m.n_half:
            raise InternalError("psi exceeded its step bound")
    if not is_spanning_tree(m, tree):
        raise InternalError(f"psi built {edge_set_str(m, tree)}, not a spanning tree")
    run.subgraph, run.tree = s, tree
    if check:
        if delta(m, s) != tree:
            raise InternalError("psi tree differs from delta of its subgraph")
        if tuple(run.visit) != tree_data(m, tree).order:
            raise InternalError("psi visit order differs from the (G,T)-order")
    return run


def psi(m, o) -> int:
    return psi_run(m, o).subgraph


def is_minimal(m, o) -> bool:
    """No directed cycle whose least half-edge is a tail, in the order of
    ``T = delta(psi(o))``."""
    d = tree_data(m, delta(m, psi(m, o)))
    for C in enumerate_directed_cycles(m, o):
        halves = [h for e in bits(C) for h in m.edges[e]]
        if o.is_tail(m, min(halves, key=d.rank.__getitem__)):
            return False
    return True


def gamma(m, forest):
    if not is_forest(m, forest):
        raise NotAForest(f"{edge_set_str(m, forest)} is not a forest")
    return outdegree_sequence(m, phi(m, forest))


def some_orientation_with(m, delta_seq) -> Orientation:
    """A ``delta``-orientation built by reversing surplus-to-deficit paths."""
    o = Orientation(0)
    out = list(outdegree_sequence(m, o))
    while True:
        surplus = [v for v in range(m.n_vertices) if out[v] > delta_seq[v]]
        if not surplus:
            return o
        v = surplus[0]
        # BFS along arcs from v to a vertex with a deficit
        prev = {v: None}
        todo = deque([v])
        goal = None
        while todo and goal is None:
            x = todo.popleft()
            for e in range(m.n_edges):
                if m.vertex_of[o.tail(m, e)] != x:
                    continue
                y = m.vertex_of[o.head(m, e)]
                if y not in prev:
                    prev[y] = (x, e)
                    if out[y] < delta_seq[y]:
                        goal = y
                        break
                    todo.append(y)
        if goal is None:
            raise NotAnOutdegreeSequence(f"{tuple(delta_seq)} is not an outdegree sequence")
        y = goal
        mask = 0
        while prev[y] is not None:
            x, e = prev[y]
            mask |= 1 << e
            y = x
        o = o.flipped(mask)
        out[v] -= 1
        out[goal] += 1


def minimal_orientation(m, delta_seq) -> Orientation:
    """The unique minimal ``delta``-orientation, by flipping offending cycles."""
    try:
        ok = is_outdegree_sequence(m, delta_seq)
    except SumMismatch as exc:
        raise NotAnOutdegreeSequence(str(exc)) from None
    if not ok:
        raise NotAnOutdegreeSequence(f"{tuple(delta_seq)} is not an outdegree sequence")
    o = some_orientation_with(m, delta_seq)
    for _ in range(1 << m.n_edges):
        run = psi_run(m, o)
        if run.first_a is None:
            return o
        o = o.flipped(run.first_a[1])
    raise InternalError("no minimal orientation reached within the flip bound")


def gamma_inverse(m, delta_seq) -> int:
    return psi(m, minimal_orientation(m, delta_seq))


# -- specializations -----------------------------------------------------------

ROWS_SUB = ("any", "forest", "internal")
COLS_SUB = ("any", "connected", "external")
ROWS_ORI = ("any", "minimal", "acyclic")
COLS_ORI = ("any", "v0_connected", "strongly_connected")


def subgraph_classes(m, s):
    """``(row, col)`` flags of a subgraph: ({any, forest, internal},
    {any, connected, external})."""
    d = tree_data(m, delta(m, s))
    rows = (True, is_forest(m, s), d.external_active == 0)
    cols = (True, is_connected_subgraph(m, s), d.internal_active == 0)
    return rows, cols


def orientation_classes(m, o):
    rows = (True, is_minimal(m, o), is_acyclic(m, o))
    cols = (True, is_v0_connected(m, o), is_strongly_connected(m, o))
    return rows, cols


@dataclass
class Census:
    subgraphs: list
    orientations: list
    tutte: list
    mismatches: list  # (subgraph, row, col) where phi breaks the class match

    @property
    def consistent(self):
        return not self.mismatches and self.subgraphs == self.orientations == self.tutte


def specialization_census(m) -> Census:
    """3x3 counts: rows any/forest/internal (any/minimal/acyclic), columns
    any/connected/external (any/v0-connected/strongly connected).  Cell
    ``[r][c]`` should equal ``T(2 - c, 2 - r)``."""
    poly = tutte_polynomial(m)
    sub = [[0] * 3 for _ in range(3)]
    ori = [[0] * 3 for _ in range(3)]
    mismatches = []
    for s in enumerate_subgraphs(m):
        rs, cs = subgraph_classes(m, s)
        ro, co = orientation_classes(m, phi(m, s))
        for r in range(3):
            for c in range(3):
                if rs[r] and cs[c]:
                    sub[r][c] += 1
                if ro[r] and co[c]:
                    ori[r][c] += 1
        for r in range(3):
            if rs[r] != ro[r]:
                mismatches.append((s, ROWS_SUB[r], None))
        for c in range(3):
            if cs[c] != co[c]:
                mismatches.append((s, None, COLS_SUB[c]))
    tutte = [[poly(2 - c, 2 - r) for c in range(3)] for r in range(3)]
    return Census(sub, ori, tutte, mismatches)


# -- root-components -----------------------------------------------------------


@dataclass(frozen=True)
class RootComponentPartition:
    blocks: tuple   # tuple of frozensets of vertices, V_0 first
    links: tuple    # e_1 ... e_k

    def __len__(self):
        return len(self.blocks)


def _components(m, o, strong):
    d = tree_data(m, delta(m, psi(m, o)))
    everything = set(range(m.n_vertices))
    first = reachable_set(m, o, m.root_vertex, reverse=strong)
    blocks = [frozenset(first)]
    W = set(first)
    links = []
    while W != everything:
        crossing = [e for e, (u, v) in enumerate(m.endpoints) if (u in W) != (v in W)]
        e = min(crossing, key=d.edge_rank.__getitem__)
        u, v = m.endpoints[e]
        vk = v if u in W else u
        block = reachable_set(m, o, vk, reverse=strong, within=everything - W)
        blocks.append(frozenset(block))
        links.append(e)
        W |= block
    return RootComponentPartition(tuple(blocks), tuple(links))


def root_components(m, o) -> RootComponentPartition:
    return _components(m, o, strong=False)


def root_strong_components(m, o) -> RootComponentPartition:
    if not is_v0_connected(m, o):
        raise NotV0Connected("root-strong-components need a v0-connected orientation")
    return _components(m, o, strong=True)


def head_min_cocycle_minima(m, o):
    """Edges that are least in some head-min directed cocycle."""
    d = tree_data(m, delta(m, psi(m, o)))
    out = set()
    for D in enumerate_directed_cocycles(m, o):
        e = d.min_edge(D)
        if not o.is_tail(m, d.low[e]):
            out.add(e)
    return out


def cocycle_minima(m, o):
    """Edges that are least in some directed cocycle."""
    d = tree_data(m, delta(m, psi(m, o)))
    return {d.min_edge(D) for D in enumerate_directed_cocycles(m, o)}


def root_edge_far_end(m):
    return m.vertex_of[m.alpha[m.root]]


def is_bipolar(m, o) -> bool:
    """Acyclic with unique source the root-vertex and unique sink the far
    endpoint of the root-edge."""
    v0 = m.root_vertex
    v1 = root_edge_far_end(m)
    if v0 == v1 or not is_acyclic(m, o):
        return False
    indeg = [0] * m.n_vertices
    outdeg = [0] * m.n_vertices
    for t, h in o.arcs(m):
        outdeg[t] += 1
        indeg[h] += 1
    sources = [v for v in range(m.n_vertices) if indeg[v] == 0]
    sinks = [v for v in range(m.n_vertices) if outdeg[v] == 0]
    return sources == [v0] and sinks == [v1]


def orientation_histograms(m):
    """Histograms (index = blocks - 1) of root-components over all, minimal
    and acyclic orientations, and of root-strong-components over the
    v0-connected ones of each kind."""
    key = ("histograms",)
    if key in m._cache:
        return m._cache[key]
    rc = {k: [] for k in ROWS_ORI}
    rsc = {k: [] for k in ROWS_ORI}
    bipolar = 0

    def bump(hist, i):
        while len(hist) <= i:
            hist.append(0)
        hist[i] += 1

    for o in enumerate_orientations(m):
        flags = (True, is_minimal(m, o), is_acyclic(m, o))
        k = len(root_components(m, o)) - 1
        v0c = is_v0_connected(m, o)
        ks = len(root_strong_components(m, o)) - 1 if v0c else None
        for name, flag in zip(ROWS_ORI, flags):
            if flag:
                bump(rc[name], k)
                if v0c:
                    bump(rsc[name], ks)
        if is_bipolar(m, o):
            bipolar += 1
    m._cache[key] = (rc, rsc, bipolar)
    return m._cache[key]
