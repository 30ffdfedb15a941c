"""Rooted combinatorial maps.

A map is a set of half-edges ``H`` with a rotation ``sigma`` and a
fixed-point-free involution ``alpha``.  Vertices are the cycles of
``sigma``, edges the cycles of ``alpha``.  Half-edges carry string tokens
for I/O but every permutation is stored as a tuple of dense indices.

Composition convention: ``sigma*alpha`` means "apply alpha, then sigma",
so ``sigma_alpha[h] == sigma[alpha[h]]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
import re

from .errors import (
    AlphaFixedPoint,
    AlphaNotInvolution,
    DuplicateToken,
    MapError,
    NotTransitive,
    UnknownRoot,
)

TOKEN_RE = re.compile(r"^[A-Za-z0-9']+$")


def perm_cycles(perm):
    """Cycles of a permutation given as an index tuple.

    Each cycle starts at its least element and cycles are sorted by that
    element, which makes the output canonical.

    >>> perm_cycles((1, 0, 2))
    [(0, 1), (2,)]
    """
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return out


def perm_inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def compose(outer, inner):
    """``outer * inner``: apply ``inner`` first."""
    return tuple(outer[i] for i in inner)


class CombinatorialMap:
    """A validated, immutable rooted combinatorial map.

    Use :func:`build_map` to construct one from tokens and cycle lists;
    the constructor takes already-dense index tuples.
    """

    def __init__(self, tokens, sigma, alpha, root):
        self.tokens = tuple(tokens)
        self.sigma = tuple(sigma)
        self.alpha = tuple(alpha)
        self.root = int(root)
        n = len(self.tokens)
        if len(self.sigma) != n or len(self.alpha) != n:
            raise MapError("sigma and alpha must act on every half-edge")
        if sorted(self.sigma) != list(range(n)):
            raise MapError("sigma is not a permutation")
        self.index = {}
        for i, tok in enumerate(self.tokens):
            if tok in self.index:
                raise DuplicateToken(f"duplicate half-edge token {tok!r}")
            self.index[tok] = i
        for h in range(n):
            a = self.alpha[h]
            if not 0 <= a < n:
                raise AlphaNotInvolution(f"alpha({self.tokens[h]}) is out of range")
            if a == h:
                raise AlphaFixedPoint(f"alpha fixes {self.tokens[h]!r}")
            if self.alpha[a] != h:
                raise AlphaNotInvolution(f"alpha is not an involution at {self.tokens[h]!r}")
        if not 0 <= self.root < n:
            raise UnknownRoot(f"root index {root} is not a half-edge")
        self._check_transitive()

        self.sigma_inv = perm_inverse(self.sigma)
        self.n_half = n

        self.vertices = perm_cycles(self.sigma)
        self.vertex_of = [0] * n
        for v, cyc in enumerate(self.vertices):
            for h in cyc:
                self.vertex_of[h] = v
        self.vertex_of = tuple(self.vertex_of)
        self.n_vertices = len(self.vertices)

        # edge halves are stored lower dense index first
        self.edges = []
        self.edge_of = [-1] * n
        for h in range(n):
            if self.edge_of[h] < 0:
                e = len(self.edges)
                self.edges.append((h, self.alpha[h]))
                self.edge_of[h] = self.edge_of[self.alpha[h]] = e
        self.edges = tuple(self.edges)
        self.edge_of = tuple(self.edge_of)
        self.n_edges = len(self.edges)

        self.endpoints = tuple((self.vertex_of[a], self.vertex_of[b]) for a, b in self.edges)
        self.is_loop = tuple(u == v for u, v in self.endpoints)
        self.degree = tuple(len(c) for c in self.vertices)
        self.root_vertex = self.vertex_of[self.root]
        self.root_edge = self.edge_of[self.root]
        self.edge_names = tuple(min(self.tokens[a], self.tokens[b]) for a, b in self.edges)
        self.vertex_names = tuple(min(self.tokens[h] for h in c) for c in self.vertices)
        self.all_edges = (1 << self.n_edges) - 1
        # scratch space for per-map caches (bonds, cycles ...)
        self._cache = {}

    def _check_transitive(self):
        n = len(self.tokens)
        seen = {self.root}
        todo = deque([self.root])
        while todo:
            h = todo.popleft()
            for g in (self.sigma[h], self.alpha[h]):
                if g not in seen:
                    seen.add(g)
                    todo.append(g)
        if len(seen) != n:
            missing = sorted(self.tokens[h] for h in range(n) if h not in seen)
            raise NotTransitive(
                "sigma and alpha do not act transitively; unreachable: " + " ".join(missing)
            )

    # -- lookups ---------------------------------------------------------

    def half_edge(self, token):
        try:
            return self.index[token]
        except KeyError:
            raise MapError(f"unknown half-edge {token!r}") from None

    def edge(self, name):
        """Edge index from either of its half-edge tokens."""
        return self.edge_of[self.half_edge(name)]

    def vertex(self, name):
        """Vertex index from an incident token or from ``v<i>``."""
        if name in self.index:
            return self.vertex_of[self.index[name]]
        m = re.fullmatch(r"v(\d+)", name)
        if m and int(m.group(1)) < self.n_vertices:
            return int(m.group(1))
        raise MapError(f"unknown vertex {name!r}")

    def other_half(self, e, h):
        a, b = self.edges[e]
        return b if h == a else a

    def faces(self):
        return perm_cycles(compose(self.sigma, self.alpha))

    def with_root(self, root):
        if isinstance(root, str):
            root = self.half_edge(root)
        return CombinatorialMap(self.tokens, self.sigma, self.alpha, root)

    def cycle_string(self, perm):
        return "".join("(" + " ".join(self.tokens[h] for h in c) + ")" for c in perm_cycles(perm))

    # -- value semantics ---------------------------------------------------

    def _key(self):
        return (self.tokens, self.sigma, self.alpha, self.root)

    def __eq__(self, other):
        return isinstance(other, CombinatorialMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"CombinatorialMap(sigma={self.cycle_string(self.sigma)}, "
            f"alpha={self.cycle_string(self.alpha)}, root={self.tokens[self.root]})"
        )


def build_map(tokens, sigma_cycles, alpha_pairs, root):
    """Validate a map given by tokens and cycle lists.

    ``tokens`` fixes the dense index order.  ``sigma_cycles`` and
    ``alpha_pairs`` are sequences of token sequences and together must
    mention every token exactly once each.
    """
    tokens = list(tokens)
    index = {}
    for tok in tokens:
        if not TOKEN_RE.match(tok):
            raise MapError(f"invalid token {tok!r}")
        if tok in index:
            raise DuplicateToken(f"duplicate half-edge token {tok!r}")
        index[tok] = len(index)
    n = len(tokens)

    def lookup(tok, what):
        if tok not in index:
            raise MapError(f"{what} mentions unknown token {tok!r}")
        return index[tok]

    sigma = [None] * n
    for cyc in sigma_cycles:
        idx = [lookup(t, "sigma") for t in cyc]
        if not idx:
            raise MapError("empty sigma cycle")
        for i, h in enumerate(idx):
            if sigma[h] is not None:
                raise DuplicateToken(f"token {tokens[h]!r} appears twice in sigma")
            sigma[h] = idx[(i + 1) % len(idx)]
    missing = [tokens[h] for h in range(n) if sigma[h] is None]
    if missing:
        raise MapError("sigma does not mention: " + " ".join(missing))

    alpha = [None] * n
    for pair in alpha_pairs:
        idx = [lookup(t, "alpha") for t in pair]
        if len(idx) == 1 or (len(idx) == 2 and idx[0] == idx[1]):
            raise AlphaFixedPoint(f"alpha fixes {tokens[idx[0]]!r}")
        if len(idx) != 2:
            raise AlphaNotInvolution("alpha cycles must have exactly two elements")
        a, b = idx
        if alpha[a] is not None or alpha[b] is not None:
            raise AlphaNotInvolution(f"token {tokens[a if alpha[a] is not None else b]!r} is in two alpha pairs")
        alpha[a], alpha[b] = b, a
    for h in range(n):
        if alpha[h] is None:
            raise AlphaFixedPoint(f"alpha fixes {tokens[h]!r}")

    if root not in index:
        raise UnknownRoot(f"root {root!r} is not a half-edge")
    return CombinatorialMap(tokens, sigma, alpha, index[root])


@dataclass(frozen=True)
class Graph:
    """Underlying graph: ``ends[e]`` holds one vertex for a loop, two otherwise."""

    vertices: tuple
    edges: tuple
    ends: tuple

    def is_connected(self):
        if not self.vertices:
            return True
        adj = {v: set() for v in range(len(self.vertices))}
        for ends in self.ends:
            for u in ends:
                adj[u].update(ends)
        seen = {0}
        todo = [0]
        while todo:
            u = todo.pop()
            for w in adj[u] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == len(self.vertices)


def underlying_graph(m: CombinatorialMap) -> Graph:
    ends = tuple((u,) if u == v else (u, v) for u, v in m.endpoints)
    return Graph(m.vertex_names, m.edge_names, ends)


def dual_map(m: CombinatorialMap) -> CombinatorialMap:
    """The map ``(H, sigma*alpha, alpha, root)``; an involution on maps."""
    return CombinatorialMap(m.tokens, compose(m.sigma, m.alpha), m.alpha, m.root)


def euler_characteristic(m: CombinatorialMap) -> int:
    """``#vertices + #faces - #edges - 2``; zero exactly for planar maps."""
    return m.n_vertices + len(m.faces()) - m.n_edges - 2


def is_planar(m: CombinatorialMap) -> bool:
    return euler_characteristic(m) == 0
