"""Sandpile configurations on a map's graph, and the tree bijections.

A configuration is a tuple of grain counts indexed by vertex.  The root
is the map's root-vertex.  ``deg(v)`` counts loops twice; toppling only
moves grains along non-loop edges.
"""

from __future__ import annotations

from itertools import permutations, product

from .bijection import gamma, phi_tree
from .enumeration import components
from .errors import InternalError, NotRecurrent, VertexStable
from .trees import edge_set_str, is_spanning_tree, tree_data


def multiplicity(m, u, v):
    """``deg(u, v)``: number of edges joining two distinct vertices."""
    return sum(1 for a, b in m.endpoints if {a, b} == {u, v}) if u != v else 0


def nonloop_degree(m, v):
    """``deg(v, *)``: number of non-loop edges at ``v``."""
    return sum(1 for a, b in m.endpoints if a != b and v in (a, b))


def topple(m, config, v, force=False):
    """Send one grain along every non-loop edge at ``v``.

    A stable non-root vertex may only topple with ``force``.
    """
    config = tuple(config)
    if not force and v != m.root_vertex and config[v] < m.degree[v]:
        raise VertexStable(f"vertex {m.vertex_names[v]} is stable")
    out = list(config)
    for a, b in m.endpoints:
        if a == b:
            continue
        if a == v:
            out[b] += 1
            out[v] -= 1
        elif b == v:
            out[a] += 1
            out[v] -= 1
    return tuple(out)


def is_stable(m, config):
    return all(config[v] < m.degree[v] for v in range(m.n_vertices) if v != m.root_vertex)


def recurrence_witness(m, config):
    """A toppling order that fires every vertex once and restores
    ``config``, found greedily; ``None`` when the config is not recurrent."""
    config = tuple(config)
    if len(config) != m.n_vertices or min(config) < 0:
        return None
    if not is_stable(m, config) or config[m.root_vertex] != m.degree[m.root_vertex]:
        return None
    cur = topple(m, config, m.root_vertex)
    order = [m.root_vertex]
    fired = {m.root_vertex}
    progress = True
    while progress:
        progress = False
        for v in range(m.n_vertices):
            if v not in fired and cur[v] >= m.degree[v]:
                cur = topple(m, cur, v)
                order.append(v)
                fired.add(v)
                progress = True
                break
    if len(fired) != m.n_vertices or cur != config:
        return None
    return order


def is_recurrent(m, config):
    return recurrence_witness(m, config) is not None


def is_recurrent_bruteforce(m, config):
    """Existential definition: try every firing order starting at the root."""
    config = tuple(config)
    if not is_stable(m, config) or config[m.root_vertex] != m.degree[m.root_vertex]:
        return False
    rest = [v for v in range(m.n_vertices) if v != m.root_vertex]
    for perm in permutations(rest):
        cur = topple(m, config, m.root_vertex)
        for v in perm:
            if cur[v] < m.degree[v]:
                break
            cur = topple(m, cur, v)
        else:
            if cur == config:
                return True
    return False


def enumerate_recurrent(m):
    """Every recurrent configuration, in lexicographic order."""
    ranges = [
        [m.degree[v]] if v == m.root_vertex else range(m.degree[v]) for v in range(m.n_vertices)
    ]
    return [c for c in product(*ranges) if is_recurrent(m, c)]


def level(m, config):
    if not is_recurrent(m, config):
        raise NotRecurrent(f"configuration {tuple(config)} is not recurrent")
    return sum(config) - m.n_edges


def lambda_(m, tree):
    """Tails plus external-active heads of ``phi_tree(tree)`` at each vertex."""
    d = tree_data(m, tree)
    o = phi_tree(m, tree)
    grains = [0] * m.n_vertices
    for e in range(m.n_edges):
        grains[m.vertex_of[o.tail(m, e)]] += 1
        if d.external_active >> e & 1:
            grains[m.vertex_of[o.head(m, e)]] += 1
    return tuple(grains)


def upsilon(m, config):
    """Burning along the clockwise tour; inverse of :func:`lambda_`."""
    config = tuple(config)
    if not is_recurrent(m, config):
        raise NotRecurrent(f"configuration {config} is not recurrent")
    start = m.sigma_inv[m.root]
    h = start
    visited = tree = 0
    deg_f = [0] * m.n_vertices
    steps = 0
    while True:
        e = m.edge_of[h]
        bit = 1 << e
        if not visited & bit:
            visited |= bit
            a, b = m.endpoints[e]
            deg_f[a] += 1
            deg_f[b] += 1
            u = m.vertex_of[h]
            v = m.vertex_of[m.alpha[h]]
            if u != v:
                labels = components(m, tree)[0]
                if labels[u] != labels[v] and config[v] + deg_f[v] >= m.degree[v]:
                    tree |= bit
        h = m.sigma_inv[m.alpha[h]] if tree & bit else m.sigma_inv[h]
        steps += 1
        if h == start:
            break
        if steps > m.n_half:
            raise InternalError("upsilon exceeded its step bound")
    if not is_spanning_tree(m, tree):
        raise InternalError(f"upsilon built {edge_set_str(m, tree)}, not a spanning tree")
    return tree


def sandpile_to_outdegree(m, config):
    return gamma(m, upsilon(m, config))


def config_str(m, config):
    return ",".join(f"{m.vertex_names[v]}={c}" for v, c in enumerate(config))
