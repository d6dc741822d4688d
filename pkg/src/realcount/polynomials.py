"""Exact-integer Tutte / characteristic / chromatic polynomials.

Tutte for graphic matroids runs deletion-contraction memoized on canonical
multigraph minors; uniform matroids use the by-cardinality sum.  The raw
subset-sum definition is kept as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import LabelledGraph
from .matroids import Matroid, GraphicMatroid, UniformMatroid, MatroidError, popcount


class OneVar:
    """Polynomial in one variable, dict degree -> int coeff."""

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for k, v in dict(coeffs).items():
                if v:
                    self.c[int(k)] = int(v)

    @classmethod
    def const(cls, v):
        return cls({0: v})

    @classmethod
    def x(cls):
        return cls({1: 1})

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return OneVar(out)

    def __sub__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) - v
        return OneVar(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return OneVar({k: v * other for k, v in self.c.items()})
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return OneVar(out)

    def __pow__(self, e):
        out = OneVar.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, OneVar) and self.c == other.c

    def coeff(self, k):
        return self.c.get(k, 0)

    @property
    def degree(self):
        return max(self.c) if self.c else 0

    def __call__(self, v):
        return sum(cf * v ** k for k, cf in self.c.items())

    def to_json_map(self):
        return {f"x^{k}": self.c[k] for k in sorted(self.c)}

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c, reverse=True):
            parts.append(f"{self.c[k]}*x^{k}" if k else f"{self.c[k]}")
        return " + ".join(parts)


class TwoVar:
    """Polynomial in x, y; dict (a, b) -> int coeff."""

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for k, v in dict(coeffs).items():
                if v:
                    self.c[(int(k[0]), int(k[1]))] = int(v)

    @classmethod
    def const(cls, v):
        return cls({(0, 0): v})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return TwoVar(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return TwoVar({k: v * other for k, v in self.c.items()})
        out = {}
        for (a1, b1), v1 in self.c.items():
            for (a2, b2), v2 in other.c.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + v1 * v2
        return TwoVar(out)

    def __pow__(self, e):
        out = TwoVar.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, TwoVar) and self.c == other.c

    def evaluate(self, xv, yv):
        return sum(v * xv ** a * yv ** b for (a, b), v in self.c.items())

    def substitute_x(self, px: OneVar, yv: int):
        """One-variable polynomial T(px(t), yv)."""
        out = OneVar()
        for (a, b), v in self.c.items():
            c = v * (yv ** b)
            if c:
                out = out + (px ** a) * c
        return out

    def to_json_map(self):
        return {f"x^{a} y^{b}": self.c[(a, b)] for (a, b) in sorted(self.c)}

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for (a, b) in sorted(self.c, reverse=True):
            parts.append(f"{self.c[(a, b)]}*x^{a}*y^{b}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# canonical multigraph keys for the deletion-contraction memo
# ---------------------------------------------------------------------------

_CANON_CUTOFF = 9  # vertex count above which exact canonicalisation is skipped


def _compact(n, edges):
    """Drop isolated vertices, renumber the rest preserving order."""
    used = sorted({u for e in edges for u in e})
    remap = {v: i for i, v in enumerate(used)}
    return len(used), tuple((remap[u], remap[v]) if remap[u] <= remap[v] else (remap[v], remap[u]) for (u, v) in edges)


def _canon_key(n, edges):
    n, edges = _compact(n, edges)
    if n > _CANON_CUTOFF:
        return ("raw", n, tuple(sorted(edges)))
    best = None
    # branch and bound over vertex relabellings; order candidates by degree
    deg = [0] * n
    for (u, v) in edges:
        deg[u] += 1
        deg[v] += 1
    cand = sorted(range(n), key=lambda v: (-deg[v], v))

    def rec(assigned, pos, partial):
        nonlocal best
        if pos == n:
            key = tuple(sorted(partial))
            if best is None or key < best:
                best = key
            return
        for old in cand:
            if assigned[old] != -1:
                continue
            assigned[old] = pos
            newe = []
            for (u, v) in edges:
                au, av = assigned[u], assigned[v]
                if au != -1 and av != -1:
                    newe.append((au, av) if au <= av else (av, au))
            newe.sort()
            if best is None or tuple(newe) <= best[: len(newe)]:
                rec(assigned, pos + 1, newe)
            assigned[old] = -1

    rec([-1] * n, 0, [])
    return ("canon", n, best if best is not None else ())


# ---------------------------------------------------------------------------
# Tutte polynomial
# ---------------------------------------------------------------------------

def tutte_polynomial(arg):
    """Tutte polynomial of a graph or matroid."""
    if isinstance(arg, LabelledGraph):
        return _tutte_graph(arg.n, arg.edges)
    if isinstance(arg, GraphicMatroid):
        return _tutte_graph(arg.graph.n, arg.graph.edges)
    if isinstance(arg, UniformMatroid):
        return _tutte_uniform(arg.m, arg.s)
    if isinstance(arg, Matroid):
        return tutte_polynomial_subset(arg)
    raise MatroidError(f"cannot compute a Tutte polynomial for {type(arg).__name__}")


def _tutte_uniform(m, s):
    x1 = TwoVar({(1, 0): 1, (0, 0): -1})  # x - 1
    y1 = TwoVar({(0, 1): 1, (0, 0): -1})  # y - 1
    out = TwoVar()
    for j in range(m + 1):
        rj = min(j, s)
        out = out + (x1 ** (s - rj)) * (y1 ** (j - rj)) * math.comb(m, j)
    return out


def tutte_polynomial_subset(matroid):
    """Definitional subset sum; independent cross-check for small m."""
    if matroid.m > 20:
        raise MatroidError("subset-sum Tutte limited to m <= 20")
    x1 = TwoVar({(1, 0): 1, (0, 0): -1})
    y1 = TwoVar({(0, 1): 1, (0, 0): -1})
    r = matroid.full_rank
    out = TwoVar()
    for mask in range(1 << matroid.m):
        ra = matroid.rank(mask)
        out = out + (x1 ** (r - ra)) * (y1 ** (popcount(mask) - ra))
    return out


def _tutte_graph(n, edges, memo=None):
    if memo is None:
        memo = {}

    def rec(n, edges):
        if not edges:
            return TwoVar.const(1)
        key = _canon_key(n, edges)
        got = memo.get(key)
        if got is not None:
            return got
        # pull out loops first
        loops = [e for e in edges if e[0] == e[1]]
        if loops:
            rest = [e for e in edges if e[0] != e[1]]
            val = rec(n, tuple(rest)) * (TwoVar.y() ** len(loops))
            memo[key] = val
            return val
        (u, v) = edges[0]
        if _is_bridge(n, edges, 0):
            val = TwoVar.x() * rec(*_contract(n, edges, 0))
        else:
            deleted = rec(n, edges[1:])
            contracted = rec(*_contract(n, edges, 0))
            val = deleted + contracted
        memo[key] = val
        return val

    return rec(n, tuple(edges))


def _is_bridge(n, edges, idx):
    (u, v) = edges[idx]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, b) in enumerate(edges):
        if i == idx:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return find(u) != find(v)


def _contract(n, edges, idx):
    (u, v) = edges[idx]
    out = []
    for i, (a, b) in enumerate(edges):
        if i == idx:
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        out.append((a2, b2) if a2 <= b2 else (b2, a2))
    return n, tuple(out)


# ---------------------------------------------------------------------------
# characteristic / chromatic
# ---------------------------------------------------------------------------

@dataclass
class CharChromReport:
    characteristic: OneVar
    chromatic: OneVar | None
    chromatic_error: str | None
    nbc: int


def characteristic_and_chromatic(arg):
    """Characteristic polynomial (any loopless matroid/graph); chromatic for
    connected graphs, with the nbc count read off both ways."""
    graph = None
    if isinstance(arg, LabelledGraph):
        graph = arg
        matroid = GraphicMatroid(arg)
    elif isinstance(arg, GraphicMatroid):
        graph = arg.graph
        matroid = arg
    elif isinstance(arg, Matroid):
        matroid = arg
    else:
        raise MatroidError(f"expected a graph or matroid, got {type(arg).__name__}")
    if not matroid.is_loopless():
        raise MatroidError("characteristic polynomial requires a loopless matroid")
    tutte = tutte_polynomial(matroid)
    r = matroid.full_rank
    one_minus_l = OneVar({0: 1, 1: -1})
    chi = tutte.substitute_x(one_minus_l, 0) * ((-1) ** r)
    nbc = abs(chi.coeff(0))
    chromatic = None
    err = None
    if graph is None:
        err = "chromatic polynomial is defined for graphs only"
    elif not graph.is_connected():
        err = "chromatic relation requires a connected graph"
    else:
        chromatic = chi * OneVar.x()
    return CharChromReport(chi, chromatic, err, nbc)
