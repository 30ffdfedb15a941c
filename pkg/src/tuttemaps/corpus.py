"""Named test maps and a seeded random map generator."""

from __future__ import annotations

import random

from .errors import NotTransitive
from .mapfile import parse_map
from .maps import CombinatorialMap, build_map

NAMED = {
    "k3": """
        root a
        sigma (a c')(a' b)(b' c)
        alpha (a a')(b b')(c c')
    """,
    # six edges, four vertices, one leaf
    "torus6": """
        root a
        sigma (a f' b d)(d')(a' e f c)(e' b' c')
        alpha (a a')(b b')(c c')(d d')(e e')(f f')
    """,
    # triangle with one doubled side: five spanning trees
    "triangle_dbl": """
        root a
        sigma (a d c')(a' b d')(b' c)
        alpha (a a')(b b')(c c')(d d')
    """,
    "edge": """
        root a
        sigma (a)(a')
        alpha (a a')
    """,
    "loop": """
        root a
        sigma (a a')
        alpha (a a')
    """,
    "bundle2": """
        root a
        sigma (a b)(b' a')
        alpha (a a')(b b')
    """,
    "bundle3": """
        root a
        sigma (a b c)(c' b' a')
        alpha (a a')(b b')(c c')
    """,
    # same bundle with a rotation of genus one
    "bundle3t": """
        root a
        sigma (a b c)(a' b' c')
        alpha (a a')(b b')(c c')
    """,
    "k4": """
        root a
        sigma (a b c)(a' f' d)(b' d' e)(c' e' f)
        alpha (a a')(b b')(c c')(d d')(e e')(f f')
    """,
    # path on three vertices with a loop at the far end
    "path_loop": """
        root a
        sigma (a)(a' b)(b' c c')
        alpha (a a')(b b')(c c')
    """,
    # not part of the exhaustive corpus: 20 half-edges, genus one
    "k5_torus": """
        root a
        sigma (b a d c)(a' e f g)(e' b' h i)(f' j h' c')(g' i' j' d')
        alpha (a a')(b b')(c c')(d d')(e e')(f f')(g g')(h h')(i i')(j j')
    """,
}

EXHAUSTIVE_NAMES = tuple(n for n in NAMED if n != "k5_torus")


def named_map(name) -> CombinatorialMap:
    return parse_map(NAMED[name])


def random_map(rng: random.Random, n_edges: int) -> CombinatorialMap:
    """Uniform rotation on ``2 * n_edges`` half-edges, retried until the
    action is transitive.

    Half-edges are paired as ``(x x')``; since sigma is uniform this has
    the same law, up to relabeling, as drawing a uniform fixed-point-free
    involution too, and it keeps tokens in alpha-line order.
    """
    letters = "abcdefghijklmnopqrstuvwxyz"
    tokens = []
    for i in range(n_edges):
        base = letters[i % 26] + (str(i // 26) if i >= 26 else "")
        tokens += [base, base + "'"]
    n = len(tokens)
    alpha = [(tokens[2 * k], tokens[2 * k + 1]) for k in range(n_edges)]
    while True:
        perm = list(range(n))
        rng.shuffle(perm)
        sigma_cycles = []
        seen = set()
        for s in range(n):
            if s in seen:
                continue
            cyc = []
            h = s
            while h not in seen:
                seen.add(h)
                cyc.append(tokens[h])
                h = perm[h]
            sigma_cycles.append(cyc)
        root = tokens[rng.randrange(n)]
        try:
            return build_map(tokens, sigma_cycles, alpha, root)
        except NotTransitive:
            continue


def random_maps(seed=42, count=50, max_halfedges=12):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = rng.randint(1, max(1, max_halfedges // 2))
        out.append((f"random{seed}_{i:02d}", random_map(rng, k)))
    return out


def corpus(seed=42, count=50, max_halfedges=12):
    """Named maps within the size cap followed by seeded random maps."""
    named = [(n, named_map(n)) for n in EXHAUSTIVE_NAMES]
    named = [(n, m) for n, m in named if m.n_half <= max_halfedges]
    return named + random_maps(seed, count, max_halfedges)
