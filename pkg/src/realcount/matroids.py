"""Graphic and uniform matroids over an indexed edge ground set.

Ground subsets are int bitmasks over edge indices 0..m-1.  Flats, chains,
circuits and (nbc-)bases all work on masks; conversion to sorted index
lists happens only at the serialisation edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import LabelledGraph, EdgeOrder, GraphError


class MatroidError(ValueError):
    pass


class LoopError(MatroidError):
    pass


def mask_of(indices):
    out = 0
    for i in indices:
        out |= 1 << int(i)
    return out


def indices_of(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask &= mask - 1
    return out


def popcount(mask):
    return bin(mask).count("1")


class Matroid:
    """Rank-oracle view over ground elements 0..m-1."""

    kind = "abstract"
    m = 0

    def rank(self, mask):
        raise NotImplementedError

    @property
    def full_mask(self):
        return (1 << self.m) - 1

    @property
    def full_rank(self):
        return self.rank(self.full_mask)

    def closure(self, mask):
        r = self.rank(mask)
        out = mask
        rest = self.full_mask & ~mask
        while rest:
            b = rest & -rest
            if self.rank(mask | b) == r:
                out |= b
            rest &= rest - 1
        return out

    def loops(self):
        return self.closure(0)

    def is_loopless(self):
        return self.loops() == 0

    def is_independent(self, mask):
        return self.rank(mask) == popcount(mask)

    def is_basis(self, mask):
        return popcount(mask) == self.full_rank and self.is_independent(mask)

    def bases(self):
        """All bases as masks, ascending."""
        r = self.full_rank
        out = []
        for combo in itertools.combinations(range(self.m), r):
            mask = mask_of(combo)
            if self.is_independent(mask):
                out.append(mask)
        out.sort()
        return out


class GraphicMatroid(Matroid):
    kind = "graphic"

    def __init__(self, graph: LabelledGraph):
        self.graph = graph
        self.m = graph.m
        self._rank_memo = {}

    def rank(self, mask):
        memo = self._rank_memo
        r = memo.get(mask)
        if r is not None:
            return r
        parent = list(range(self.graph.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        mm = mask
        edges = self.graph.edges
        while mm:
            b = mm & -mm
            u, v = edges[b.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
            mm &= mm - 1
        memo[mask] = r
        return r


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, m, s):
        if not (0 <= s <= m):
            raise MatroidError(f"uniform matroid needs 0 <= s <= m, got s={s}, m={m}")
        self.m = m
        self.s = s

    def rank(self, mask):
        return min(popcount(mask), self.s)


# ---------------------------------------------------------------------------
# flats and chains
# ---------------------------------------------------------------------------

def flats_by_rank(matroid):
    """(levels, covers): levels[r] = sorted flat masks of rank r; covers maps
    each flat to its sorted rank+1 covers."""
    if not matroid.is_loopless():
        raise LoopError("flat lattice requires a loopless matroid")
    full = matroid.full_mask
    r = matroid.full_rank
    levels = [[0]]
    covers = {}
    current = [0]
    for _rk in range(r):
        nxt = set()
        for f in current:
            cv = set()
            rest = full & ~f
            while rest:
                b = rest & -rest
                cv.add(matroid.closure(f | b))
                rest &= rest - 1
            cov = sorted(cv)
            covers[f] = cov
            nxt.update(cov)
        current = sorted(nxt)
        levels.append(current)
    for f in current:
        covers[f] = []
    if levels[-1] != [full]:
        raise MatroidError("flat lattice did not terminate at the full ground set")
    return levels, covers


@dataclass(frozen=True)
class MaximalChain:
    """Proper flats F_1 ⊂ … ⊂ F_{r-1} of a rank-r matroid, as masks."""

    m: int
    flats: tuple

    @property
    def rank(self):
        return len(self.flats) + 1

    def reduced_flats(self):
        """F̃_1 … F̃_r; the last part is E minus the top proper flat."""
        full = (1 << self.m) - 1
        out = []
        prev = 0
        for f in self.flats:
            out.append(f & ~prev)
            prev = f
        out.append(full & ~prev)
        return out

    def to_indices(self):
        return [sorted(indices_of(f)) for f in self.flats]


def _chain_masks(matroid, levels=None, covers=None):
    """All maximal chains as tuples of proper flat masks, DFS-lexicographic."""
    if levels is None or covers is None:
        levels, covers = flats_by_rank(matroid)
    r = len(levels) - 1
    full = matroid.full_mask
    out = []
    if r <= 1:
        if r == 1:
            out.append(())
        return out

    # DFS; covers are pre-sorted so chains emerge lexicographic by bit-vector
    def rec(f, prefix):
        depth = len(prefix) + 1
        for c in covers[f]:
            if c == full:
                continue
            if depth == r - 1:
                out.append(prefix + (c,))
            else:
                rec(c, prefix + (c,))

    rec(0, ())
    return out


def enumerate_maximal_chains(matroid):
    """Maximal chains of proper flats, depth-first lexicographic by bit-vector."""
    if not matroid.is_loopless():
        raise LoopError("maximal chains require a loopless matroid")
    if matroid.kind == "graphic" and not matroid.graph.is_connected():
        raise MatroidError("maximal chain enumeration expects a connected graph")
    return [MaximalChain(matroid.m, fl) for fl in _chain_masks(matroid)]


# ---------------------------------------------------------------------------
# circuits, broken circuits, nbc bases
# ---------------------------------------------------------------------------

def circuits(matroid):
    """All circuits as masks, ascending."""
    if matroid.kind == "uniform":
        s = matroid.s
        if s >= matroid.m:
            return []
        out = [mask_of(c) for c in itertools.combinations(range(matroid.m), s + 1)]
        out.sort()
        return out
    if matroid.kind != "graphic":
        raise MatroidError("circuit enumeration supports graphic and uniform matroids")
    g = matroid.graph
    out = []
    # loops and parallel pairs
    pair_edges = {}
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            out.append(1 << i)
            continue
        key = (u, v) if u < v else (v, u)
        pair_edges.setdefault(key, []).append(i)
    for key, idxs in pair_edges.items():
        for a, b in itertools.combinations(idxs, 2):
            out.append((1 << a) | (1 << b))
    # vertex cycles of length >= 3 on the underlying simple graph, then expand
    # parallel choices per hop
    adj = {}
    for (u, v), idxs in pair_edges.items():
        adj.setdefault(u, {})[v] = idxs
        adj.setdefault(v, {})[u] = idxs

    n = g.n

    def expand(cycle):
        hops = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
        choices = [adj[a][b] for (a, b) in hops]
        for combo in itertools.product(*choices):
            out.append(mask_of(combo))

    def walk(root, path, seen):
        u = path[-1]
        for w in adj.get(u, {}):
            if w == root and len(path) >= 3:
                # canonical direction: second vertex < last vertex
                if path[1] < path[-1]:
                    expand(path)
            elif w > root and w not in seen:
                seen.add(w)
                path.append(w)
                walk(root, path, seen)
                path.pop()
                seen.discard(w)

    for root in range(n):
        if root in adj:
            walk(root, [root], {root})
    out = sorted(set(out))
    return out


def broken_circuits(matroid, order: EdgeOrder):
    """{C minus its ≺-minimum} over all circuits, deduplicated, ascending."""
    rank = order.rank
    seen = set()
    for c in circuits(matroid):
        idxs = indices_of(c)
        least = min(idxs, key=lambda e: rank[e])
        seen.add(c & ~(1 << least))
    return sorted(seen)


def enumerate_nbc_bases(matroid, order: EdgeOrder):
    """Bases containing no broken circuit, as masks, ascending."""
    broken = broken_circuits(matroid, order)
    out = []
    for b in matroid.bases():
        if all((bc & ~b) != 0 for bc in broken):
            out.append(b)
    return out


def chain_of_basis(matroid, basis_mask, order: EdgeOrder):
    """Maximal chain from a basis: sort descending, take prefix closures."""
    if not matroid.is_basis(basis_mask):
        raise MatroidError(f"{sorted(indices_of(basis_mask))} is not a basis")
    rank = order.rank
    elems = sorted(indices_of(basis_mask), key=lambda e: -rank[e])
    flats = []
    acc = 0
    for i, e in enumerate(elems[:-1], start=1):
        acc |= 1 << e
        f = matroid.closure(acc)
        if matroid.rank(f) != i:
            raise MatroidError("prefix closure rank mismatch (not a basis?)")
        flats.append(f)
    return MaximalChain(matroid.m, tuple(flats))
