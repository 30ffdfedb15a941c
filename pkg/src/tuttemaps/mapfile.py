"""Text format for maps.

One directive per line, ``#`` starts a comment::

    root a
    sigma (a c')(a' b)(b' c)
    alpha (a a')(b b')(c c')

Tokens inside a cycle are separated by whitespace or commas.  Dense
half-edge indices follow the order in which tokens appear on the alpha
line.
"""

from __future__ import annotations

import re

from .errors import MapParseError
from .maps import CombinatorialMap, build_map, perm_cycles

_TOKEN = re.compile(r"[A-Za-z0-9']+")
DIRECTIVES = ("root", "sigma", "alpha")


def _parse_cycles(text, lineno, offset):
    """Parse ``(t t ...)(...)`` starting at column ``offset`` (0-based)."""
    cycles = []
    i = offset
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise MapParseError(f"expected '(' but found {ch!r}", lineno, i + 1)
        i += 1
        cyc = []
        while True:
            while i < n and (text[i].isspace() or text[i] == ","):
                i += 1
            if i >= n:
                raise MapParseError("unterminated cycle", lineno, i + 1)
            if text[i] == ")":
                i += 1
                break
            m = _TOKEN.match(text, i)
            if not m:
                raise MapParseError(f"invalid character {text[i]!r} in cycle", lineno, i + 1)
            cyc.append((m.group(0), i + 1))
            i = m.end()
        if not cyc:
            raise MapParseError("empty cycle", lineno, i)
        cycles.append(cyc)
    return cycles


def parse_map(text: str) -> CombinatorialMap:
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col = len(line) - len(stripped)
        m = re.match(r"[A-Za-z]+", stripped)
        word = m.group(0) if m else stripped[:1]
        if word not in DIRECTIVES:
            raise MapParseError(f"unknown directive {word!r}", lineno, col + 1)
        if word in seen:
            raise MapParseError(f"duplicate {word!r} directive", lineno, col + 1)
        rest = col + len(word)
        if rest < len(line) and not line[rest].isspace():
            raise MapParseError(f"unknown directive {stripped.split()[0]!r}", lineno, col + 1)
        if word == "root":
            args = line[rest:].split()
            if len(args) != 1 or not _TOKEN.fullmatch(args[0]):
                raise MapParseError("root expects exactly one token", lineno, rest + 1)
            seen[word] = (args[0], lineno)
        else:
            seen[word] = (_parse_cycles(line, lineno, rest), lineno)
    for word in DIRECTIVES:
        if word not in seen:
            raise MapParseError(f"missing {word!r} directive")

    alpha_cycles = seen["alpha"][0]
    tokens = []
    known = set()
    for cyc in alpha_cycles:
        for tok, col in cyc:
            if tok not in known:
                known.add(tok)
                tokens.append(tok)
    for cyc in seen["sigma"][0]:
        for tok, col in cyc:
            if tok not in known:
                raise MapParseError(f"token {tok!r} does not appear in alpha", seen["sigma"][1], col)
    sigma = [[t for t, _ in c] for c in seen["sigma"][0]]
    alpha = [[t for t, _ in c] for c in alpha_cycles]
    return build_map(tokens, sigma, alpha, seen["root"][0])


def load_map(path) -> CombinatorialMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read())


def serialize_map(m: CombinatorialMap) -> str:
    tok = m.tokens
    sigma = "".join("(" + " ".join(tok[h] for h in c) + ")" for c in perm_cycles(m.sigma))
    alpha = "".join(f"({tok[a]} {tok[b]})" for a, b in m.edges)
    return f"root {tok[m.root]}\nsigma {sigma}\nalpha {alpha}\n"
