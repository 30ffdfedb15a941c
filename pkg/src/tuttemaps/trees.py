"""Spanning trees of a map: tour, (G,T)-order, activities, Tutte polynomial.

Trees and subgraphs are edge bitmasks.  Per-(map, tree) derived data is
computed once by :func:`tree_data` and cached on the map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .enumeration import (
    bits,
    components,
    connected_in,
    enumerate_spanning_trees,
    enumerate_subgraphs,
    is_forest,
    is_spanning_tree,
)
from .errors import EdgeInTree, EdgeNotInTree, InternalError, NotASpanningTree
from .poly import TuttePolynomial


def check_tree(m, tree):
    if not 0 <= tree <= m.all_edges or not is_spanning_tree(m, tree):
        raise NotASpanningTree(f"edge set {edge_set_str(m, tree)} is not a spanning tree")


def edge_set_str(m, mask):
    return "{" + ",".join(m.edge_names[e] for e in bits(mask)) + "}"


def motion_function(m, tree):
    """``t(h) = sigma(alpha(h))`` on tree edges and ``sigma(h)`` elsewhere."""
    check_tree(m, tree)
    return _motion(m, tree)


def _motion(m, tree):
    t = tuple(
        m.sigma[m.alpha[h]] if tree >> m.edge_of[h] & 1 else m.sigma[h] for h in range(m.n_half)
    )
    return t


@dataclass(frozen=True)
class TreeData:
    tree: int
    t: tuple            # motion function
    order: tuple        # half-edges in tour order from the root
    rank: tuple         # rank[h] = position of h in ``order``
    edge_rank: tuple    # rank of the lesser half-edge
    low: tuple          # low[e] = lesser half-edge of e
    high: tuple
    parent: tuple       # parent vertex, -1 for the root-vertex
    father_half: tuple  # half-edge at v on the edge to its father
    depth: tuple
    fundamental: tuple  # cocycle mask for tree edges, cycle mask otherwise
    internal_active: int
    external_active: int

    @property
    def active(self):
        return self.internal_active | self.external_active

    def edges_in_order(self):
        return sorted(range(len(self.low)), key=self.edge_rank.__getitem__)

    def min_edge(self, mask):
        """Least edge of a non-empty mask in the (G,T)-order."""
        return min(bits(mask), key=self.edge_rank.__getitem__)


def tree_data(m, tree) -> TreeData:
    key = ("tree", tree)
    cached = m._cache.get(key)
    if cached is not None:
        return cached
    check_tree(m, tree)
    t = _motion(m, tree)
    order = [m.root]
    h = t[m.root]
    while h != m.root:
        order.append(h)
        h = t[h]
        if len(order) > m.n_half:
            break
    if len(order) != m.n_half:
        raise InternalError("motion function is not a single cycle")
    rank = [0] * m.n_half
    for i, h in enumerate(order):
        rank[h] = i
    low, high, edge_rank = [], [], []
    for a, b in m.edges:
        if rank[b] < rank[a]:
            a, b = b, a
        low.append(a)
        high.append(b)
        edge_rank.append(rank[a])

    # root the tree at the root-vertex
    adj = [[] for _ in range(m.n_vertices)]
    for e in bits(tree):
        a, b = m.edges[e]
        adj[m.vertex_of[a]].append((e, a, b))
        adj[m.vertex_of[b]].append((e, b, a))
    parent = [-1] * m.n_vertices
    father = [-1] * m.n_vertices
    depth = [0] * m.n_vertices
    v0 = m.root_vertex
    stack = [v0]
    seen = {v0}
    while stack:
        u = stack.pop()
        for e, hu, hw in adj[u]:
            w = m.vertex_of[hw]
            if w not in seen:
                seen.add(w)
                parent[w] = u
                father[w] = hw
                depth[w] = depth[u] + 1
                stack.append(w)

    def path_edges(u, w):
        out = 0
        while u != w:
            if depth[u] < depth[w]:
                u, w = w, u
            out |= 1 << m.edge_of[father[u]]
            u = parent[u]
        return out

    def below(w):
        # vertices in the subtree rooted at w
        out = set()
        for v in range(m.n_vertices):
            x = v
            while x != -1 and x != w:
                x = parent[x]
            if x == w:
                out.add(v)
        return out

    fundamental = []
    for e in range(m.n_edges):
        u, w = m.endpoints[e]
        if tree >> e & 1:
            child = u if parent[u] == w and m.edge_of[father[u]] == e else w
            side = below(child)
            mask = 0
            for f in range(m.n_edges):
                x, y = m.endpoints[f]
                if (x in side) != (y in side):
                    mask |= 1 << f
            fundamental.append(mask)
        else:
            fundamental.append(path_edges(u, w) | 1 << e)

    int_act = ext_act = 0
    for e in range(m.n_edges):
        if min(bits(fundamental[e]), key=edge_rank.__getitem__) == e:
            if tree >> e & 1:
                int_act |= 1 << e
            else:
                ext_act |= 1 << e
    data = TreeData(
        tree, t, tuple(order), tuple(rank), tuple(edge_rank), tuple(low), tuple(high),
        tuple(parent), tuple(father), tuple(depth), tuple(fundamental), int_act, ext_act,
    )
    m._cache[key] = data
    return data


def gt_order(m, tree):
    """Half-edges of ``m`` listed in (G,T)-order; the root comes first."""
    return tree_data(m, tree).order


def edge_order(m, tree):
    """Edges listed in (G,T)-order (compared by their lesser half-edge)."""
    return tree_data(m, tree).edges_in_order()


def fundamental_cycle(m, tree, e):
    d = tree_data(m, tree)
    if tree >> e & 1:
        raise EdgeInTree(f"edge {m.edge_names[e]} is in the tree")
    return d.fundamental[e]


def fundamental_cocycle(m, tree, e):
    d = tree_data(m, tree)
    if not tree >> e & 1:
        raise EdgeNotInTree(f"edge {m.edge_names[e]} is not in the tree")
    return d.fundamental[e]


@dataclass(frozen=True)
class Activities:
    internal_active: int
    external_active: int

    @property
    def internal(self):
        return self.internal_active.bit_count()

    @property
    def external(self):
        return self.external_active.bit_count()


def activities(m, tree) -> Activities:
    d = tree_data(m, tree)
    return Activities(d.internal_active, d.external_active)


def is_ancestor(d: TreeData, u, w):
    """True when ``u`` lies on the tree path from the root-vertex to ``w``."""
    while w != -1:
        if w == u:
            return True
        w = d.parent[w]
    return False


def external_active_iff_ancestor(m, tree, e):
    """Ancestor test for an external edge: with h1 < h2 its half-edges,
    e is active iff the endpoint of h1 is an ancestor of the endpoint of h2."""
    d = tree_data(m, tree)
    if tree >> e & 1:
        raise EdgeInTree(f"edge {m.edge_names[e]} is in the tree")
    return is_ancestor(d, m.vertex_of[d.low[e]], m.vertex_of[d.high[e]])


def postfix_order(m, tree):
    """Vertices in increasing postfix order; the root-vertex is last."""
    d = tree_data(m, tree)
    others = [v for v in range(m.n_vertices) if v != m.root_vertex]
    others.sort(key=lambda v: d.rank[d.father_half[v]])
    return others + [m.root_vertex]


def tutte_polynomial(m):
    key = ("tutte",)
    if key not in m._cache:
        coeffs = {}
        for tree in enumerate_spanning_trees(m):
            d = tree_data(m, tree)
            k = (d.internal_active.bit_count(), d.external_active.bit_count())
            coeffs[k] = coeffs.get(k, 0) + 1
        m._cache[key] = TuttePolynomial(coeffs)
    return m._cache[key]


def _expand(counts, second_var_power):
    """Sum of ``n * (x-1)^a * f(b)`` over ``counts[(a, b)] = n``."""
    total = TuttePolynomial()
    for (a, b), n in sorted(counts.items()):
        term = TuttePolynomial.binomial_power("x", a) * second_var_power(b)
        total = total + term * TuttePolynomial.monomial(0, 0, n)
    return total


def tutte_subgraph_oracle(m):
    """Subgraph expansion ``sum_S (x-1)^(c(S)-1) (y-1)^(c(S)+|S|-|V|)``."""
    counts = {}
    for s in enumerate_subgraphs(m):
        c = components(m, s)[1]
        k = (c - 1, c + s.bit_count() - m.n_vertices)
        counts[k] = counts.get(k, 0) + 1
    return _expand(counts, lambda b: TuttePolynomial.binomial_power("y", b))


def forest_expansion(m):
    """Forest expansion ``sum_F (x-1)^(c(F)-1) y^E(Delta(F))``."""
    counts = {}
    for s in enumerate_subgraphs(m):
        if not is_forest(m, s):
            continue
        c = components(m, s)[1]
        ext = tree_data(m, delta(m, s)).external_active.bit_count()
        counts[(c - 1, ext)] = counts.get((c - 1, ext), 0) + 1
    return _expand(counts, lambda b: TuttePolynomial.monomial(0, b))


def _in_cycle_within(m, mask, e):
    """Is ``e`` on a cycle of the subgraph ``mask`` (which contains e)?"""
    if m.is_loop[e]:
        return True
    u, v = m.endpoints[e]
    return connected_in(m, mask & ~(1 << e), u, v)


def _in_cocycle_within(m, mask, e):
    """Is ``e`` in a cocycle contained in ``mask`` (which contains e)?"""
    if m.is_loop[e]:
        return False
    u, v = m.endpoints[e]
    return not connected_in(m, m.all_edges & ~mask, u, v)


def delta(m, subgraph):
    """The spanning tree whose tree-interval contains ``subgraph``."""
    s = subgraph
    h = m.root
    visited = tree = 0
    steps = 0
    while True:
        e = m.edge_of[h]
        bit = 1 << e
        if not visited & bit:
            unvisited = m.all_edges & ~visited
            if s & bit:
                if not _in_cycle_within(m, s & unvisited, e):
                    tree |= bit
            elif _in_cocycle_within(m, ~s & unvisited & m.all_edges, e):
                tree |= bit
            visited |= bit
        h = m.sigma[m.alpha[h]] if tree & bit else m.sigma[h]
        steps += 1
        if h == m.root:
            break
        if steps > m.n_half:
            raise InternalError("delta exceeded its step bound")
    if not is_spanning_tree(m, tree):
        raise InternalError(f"delta returned {edge_set_str(m, tree)}, not a spanning tree")
    return tree


@dataclass(frozen=True)
class TreeInterval:
    tree: int
    lower: int
    upper: int
    active: int

    def __len__(self):
        return 1 << self.active.bit_count()

    def __contains__(self, s):
        return (s ^ self.tree) & ~self.active == 0

    def members(self):
        act = bits(self.active)
        for r in range(len(act) + 1):
            for xs in combinations(act, r):
                x = 0
                for e in xs:
                    x |= 1 << e
                yield self.tree ^ x


def tree_interval(m, tree) -> TreeInterval:
    d = tree_data(m, tree)
    return TreeInterval(tree, tree & ~d.internal_active, tree | d.external_active, d.active)
