"""Exact bivariate integer polynomials in ``x`` and ``y``."""

from __future__ import annotations

from math import comb


class TuttePolynomial:
    """Sparse polynomial ``sum c[i,j] x^i y^j`` with Python int coefficients.

    Intermediate expansions may carry negative coefficients; a genuine
    Tutte polynomial never does (see :meth:`is_nonnegative`).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def binomial_power(cls, var, k):
        """``(var - 1)^k`` for ``var`` in ``'x'``, ``'y'``."""
        out = {}
        for i in range(k + 1):
            c = comb(k, i) * (-1) ** (k - i)
            out[(i, 0) if var == "x" else (0, i)] = c
        return cls(out)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TuttePolynomial(out)

    def __mul__(self, other):
        out = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return TuttePolynomial(out)

    def __eq__(self, other):
        return isinstance(other, TuttePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def is_nonnegative(self):
        return all(v > 0 for v in self.coeffs.values())

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    evaluate = __call__

    def x_degree(self):
        return max((i for i, _ in self.coeffs), default=0)

    def y_degree(self):
        return max((j for _, j in self.coeffs), default=0)

    def in_x(self, y):
        """Coefficient list of the univariate ``T(x, y)`` for fixed ``y``."""
        out = [0] * (self.x_degree() + 1)
        for (i, j), c in self.coeffs.items():
            out[i] += c * y**j
        return out

    def in_y(self, x):
        out = [0] * (self.y_degree() + 1)
        for (i, j), c in self.coeffs.items():
            out[j] += c * x**i
        return out

    def shifted_in_x(self, y):
        """Coefficient list of ``T(1 + x, y)`` for fixed ``y``."""
        base = self.in_x(y)
        out = [0] * len(base)
        for i, c in enumerate(base):
            for k in range(i + 1):
                out[k] += c * comb(i, k)
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        parts = []
        for (i, j), c in terms:
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"TuttePolynomial({self})"

    def to_json(self):
        return [[i, j, c] for (i, j), c in sorted(self.coeffs.items())]


ZERO = TuttePolynomial()
ONE = TuttePolynomial.monomial(0, 0)
