"""Exact-rational verification oracle for the pair counts.

Independent of the combinatorial maximality machinery: a pair of maximal
chains contributes iff its intersection graph is a tree AND the potentials
obtained by propagating edge weights from a root flat are decreasing along
both chains.  Edge weights come from a rapidly growing rational weight
vector, so agreement with the combinatorial count is a strong cross-check.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import EdgeOrder, LabelledGraph
from .matroids import (
    GraphicMatroid,
    LoopError,
    MatroidError,
    MaximalChain,
    _chain_masks,
    flats_by_rank,
)
from .pairs import _check_pair_preconditions, build_intersection_graph

ETA_LIMIT = 10 ** 5
ETA_SCALE = 10 ** 6
MAX_RETRIES = 8


class DegeneracyError(MatroidError):
    """An exact tie appeared in the propagated potentials."""


class GenericityError(MatroidError):
    """Ties persisted through the maximum number of weight resamples."""


@dataclass(frozen=True)
class AlphaVector:
    """One exact rational weight per ground element, increasing along the
    element order (the order minimum carries the smallest weight)."""

    values: tuple  # Fraction per element index
    order: EdgeOrder

    def __post_init__(self):
        if len(self.values) != self.order.m:
            raise MatroidError("weight vector does not match the ground set")
        by_rank = sorted(range(len(self.values)), key=lambda e: self.order.rank[e])
        for a, b in zip(by_rank, by_rank[1:]):
            if not self.values[a] < self.values[b]:
                raise MatroidError("weights must increase strictly along the order")

    @property
    def m(self):
        return len(self.values)

    def of(self, element):
        return self.values[element]

    def is_rapidly_increasing(self):
        """Each weight more than triple the previous along the order."""
        by_rank = sorted(range(self.m), key=lambda e: self.order.rank[e])
        return all(self.values[b] > 3 * self.values[a]
                   for a, b in zip(by_rank, by_rank[1:]))


def _alpha_from_eta(m, order, eta):
    values = [None] * m
    for e in range(m):
        i = order.rank[e]
        values[e] = (Fraction(3) ** (i + 1)) * (1 + Fraction(eta[i], ETA_SCALE))
    return AlphaVector(tuple(values), order)


def generate_alpha(m, order: EdgeOrder, seed=0):
    """Random rapidly increasing weights; the construction cannot fail.

    Noise values are drawn without replacement and sorted, which forces the
    more-than-triple growth at every step.
    """
    if order.m != m:
        raise MatroidError("order does not match the ground set")
    rng = random.Random(seed)
    eta = sorted(rng.sample(range(1, ETA_LIMIT + 1), m))
    alpha = _alpha_from_eta(m, order, eta)
    assert alpha.is_rapidly_increasing()
    return alpha


# ---------------------------------------------------------------------------
# potential propagation on one chain pair
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairSolution:
    verdict: str          # "tree" | "cycle" | "disconnected"
    y: tuple | None       # potential per reduced flat of the first chain
    z: tuple | None       # potential per reduced flat of the second chain
    root: int | None      # index of the first-chain reduced flat set to zero
    paths: dict | None    # vertex -> tuple of elements walked from the root

    def cone_status(self):
        """"inside" when both potential sequences strictly decrease along
        their chains, "tie" on any exact equality, "outside" otherwise."""
        if self.verdict != "tree":
            return "outside"
        for seq in (self.y, self.z):
            for a, b in zip(seq, seq[1:]):
                if a == b:
                    return "tie"
        for seq in (self.y, self.z):
            for a, b in zip(seq, seq[1:]):
                if a < b:
                    return "outside"
        return "inside"


def solve_pair_point(chainF: MaximalChain, chainH: MaximalChain,
                     order: EdgeOrder, alpha: AlphaVector, epsilon=None):
    """Propagate y + z = weight over the intersection tree.

    The reduced flat of the first chain containing epsilon is the root and
    gets potential zero; every other potential follows uniquely.
    """
    if alpha.m != chainF.m:
        raise MatroidError("weights do not match the ground set")
    gamma = build_intersection_graph(chainF, chainH)
    nleft, nright = len(gamma.left), len(gamma.right)
    nv = nleft + nright
    # cycle detection first
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    acyclic = True
    for (_e, li, ri) in gamma.edges:
        ru, rv = find(li), find(nleft + ri)
        if ru == rv:
            acyclic = False
            break
        parent[ru] = rv
    if not acyclic:
        return PairSolution("cycle", None, None, None, None)
    if len(gamma.edges) != nv - 1:
        return PairSolution("disconnected", None, None, None, None)

    if epsilon is None:
        epsilon = order.max_element()
    if not (0 <= epsilon < chainF.m):
        raise MatroidError(f"epsilon {epsilon} outside the ground set")
    root = next(i for i, f in enumerate(gamma.left) if f & (1 << epsilon))

    adj = [[] for _ in range(nv)]
    for (e, li, ri) in gamma.edges:
        adj[li].append((e, nleft + ri))
        adj[nleft + ri].append((e, li))
    pot = [None] * nv
    pot[root] = Fraction(0)
    paths = {root: ()}
    queue = [root]
    while queue:
        u = queue.pop(0)
        for (e, v) in adj[u]:
            if pot[v] is None:
                pot[v] = alpha.of(e) - pot[u]
                paths[v] = paths[u] + (e,)
                queue.append(v)
    if any(p is None for p in pot):
        return PairSolution("disconnected", None, None, None, None)
    y = tuple(pot[:nleft])
    z = tuple(pot[nleft:])
    return PairSolution("tree", y, z, root, paths)


# ---------------------------------------------------------------------------
# tree-pair candidates (weight-independent, reusable across seeds)
# ---------------------------------------------------------------------------

def enumerate_tree_pairs(M, N):
    """All ordered chain pairs whose intersection graph is a tree.

    Cycle-pruned incremental search; the result does not depend on weights
    or on the element order, so it can be shared across oracle runs.
    """
    _check_pair_preconditions(M, N)
    m = M.m
    full = M.full_mask
    chainsM = _chain_masks(M)
    _lev, covN = flats_by_rank(N)
    rN = N.full_rank
    out = []

    def find(uf, x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for flatsF in chainsM:
        chainF = MaximalChain(m, flatsF)
        red = chainF.reduced_flats()
        rM = len(red)
        left_of = [-1] * m
        for i, fl in enumerate(red):
            mm = fl
            while mm:
                b = mm & -mm
                left_of[b.bit_length() - 1] = i
                mm &= mm - 1

        def rec(h, t, uf, flatsH):
            hc_list = (full,) if t == rN else covN[h]
            for hc in hc_list:
                Rh = hc & ~h
                ufa = list(uf)
                vtx = rM + t - 1
                roots = set()
                ok = True
                mm = Rh
                while mm:
                    b = mm & -mm
                    rt = find(ufa, left_of[b.bit_length() - 1])
                    if rt in roots:
                        ok = False
                        break
                    roots.add(rt)
                    mm &= mm - 1
                if not ok:
                    continue
                for rt in roots:
                    ufa[rt] = vtx
                if t == rN:
                    out.append((chainF, MaximalChain(m, flatsH)))
                else:
                    rec(hc, t + 1, ufa, flatsH + (hc,))

        rec(0, 1, list(range(rM + rN)), ())
    return out


# ---------------------------------------------------------------------------
# the oracle count
# ---------------------------------------------------------------------------

@dataclass
class OracleReport:
    alpha_seed: int
    epsilon: int
    count: int
    degenerate_retries: int
    stats: dict = field(default_factory=dict)

    def to_json_obj(self):
        return {
            "alphaSeed": self.alpha_seed,
            "epsilon": self.epsilon,
            "count": self.count,
            "degenerateRetries": self.degenerate_retries,
        }


def _compile_plan(chainF, chainH, epsilon):
    """Root-first propagation schedule for one candidate pair.

    Weight-independent: (nleft, nright, steps) where steps lists
    (element, child vertex, parent vertex) in breadth-first order.
    Vertices: 0..nleft-1 first chain, nleft.. second chain.
    """
    gamma = build_intersection_graph(chainF, chainH)
    nleft, nright = len(gamma.left), len(gamma.right)
    nv = nleft + nright
    root = next(i for i, f in enumerate(gamma.left) if f & (1 << epsilon))
    adj = [[] for _ in range(nv)]
    for (e, li, ri) in gamma.edges:
        adj[li].append((e, nleft + ri))
        adj[nleft + ri].append((e, li))
    steps = []
    seen = [False] * nv
    seen[root] = True
    queue = [root]
    while queue:
        u = queue.pop(0)
        for (e, v) in adj[u]:
            if not seen[v]:
                seen[v] = True
                steps.append((e, v, u))
                queue.append(v)
    if len(steps) != nv - 1:
        raise MatroidError("candidate pair is not a tree")
    return (nleft, nright, tuple(steps))


def _int_weights(m, order, eta):
    """Weights times 10**6: integers ordered exactly like the rationals."""
    w = [0] * m
    for e in range(m):
        i = order.rank[e]
        w[e] = (3 ** (i + 1)) * (ETA_SCALE + eta[i])
    return w


def _run_plans(args):
    plans, weights = args
    inside = 0
    for (nleft, nright, steps) in plans:
        pot = [0] * (nleft + nright)
        for (e, child, parent) in steps:
            pot[child] = weights[e] - pot[parent]
        ok = True
        prev = pot[0]
        for i in range(1, nleft):
            cur = pot[i]
            if cur == prev:
                return None
            if cur > prev:
                ok = False
                break
            prev = cur
        if ok:
            prev = pot[nleft]
            for j in range(nleft + 1, nleft + nright):
                cur = pot[j]
                if cur == prev:
                    return None
                if cur > prev:
                    ok = False
                    break
                prev = cur
        if ok:
            inside += 1
    return inside


def _prepare(M, N, order, candidates):
    if isinstance(M, LabelledGraph):
        if N is not None:
            raise MatroidError("pass either one graph or two matroids")
        M = N = GraphicMatroid(M)
    if N is None:
        N = M
    if not M.is_loopless() or not N.is_loopless():
        raise LoopError("oracle requires loopless matroids")
    if order is None:
        order = EdgeOrder.paper(M.m)
    if candidates is None:
        candidates = enumerate_tree_pairs(M, N)
    return M, N, order, candidates


def _count_once(plans, m, order, seed, epsilon, workers, max_retries, n_cand):
    rng = random.Random(seed)
    retries = 0
    while True:
        eta = sorted(rng.sample(range(1, ETA_LIMIT + 1), m))
        weights = _int_weights(m, order, eta)
        if workers and workers > 1:
            chunks = [plans[i::workers] for i in range(workers)]
            args = [(c, weights) for c in chunks if c]
            with multiprocessing.Pool(processes=workers) as pool:
                parts = pool.map(_run_plans, args)
            total = None if any(p is None for p in parts) else sum(parts)
        else:
            total = _run_plans((plans, weights))
        if total is not None:
            return OracleReport(seed, epsilon, total, retries,
                                {"candidates": n_cand})
        retries += 1
        if retries > max_retries:
            raise GenericityError(
                f"exact ties persisted through {max_retries} weight resamples")


def oracle_count(M, N=None, order: EdgeOrder = None, *, seed=0, epsilon=None,
                 candidates=None, workers=None, max_retries=MAX_RETRIES):
    """Count ordered chain pairs sitting inside the decreasing cone.

    Accepts a graph (paired with itself) or two matroids.  Exact ties force
    a weight resample, at most max_retries times.  The tree-pair candidate
    list may be precomputed with enumerate_tree_pairs and shared.
    """
    M, N, order, candidates = _prepare(M, N, order, candidates)
    if epsilon is None:
        epsilon = order.max_element()
    plans = [_compile_plan(cF, cH, epsilon) for (cF, cH) in candidates]
    return _count_once(plans, M.m, order, seed, epsilon, workers, max_retries,
                       len(candidates))


def oracle_verify(M, N=None, order: EdgeOrder = None, *, seeds=(0, 1, 2),
                  epsilons=None, candidates=None, workers=None,
                  max_retries=MAX_RETRIES):
    """One report per (seed, epsilon), sharing candidates and plans."""
    M, N, order, candidates = _prepare(M, N, order, candidates)
    if epsilons is None:
        epsilons = (order.max_element(),)
    reports = []
    for epsilon in epsilons:
        plans = [_compile_plan(cF, cH, epsilon) for (cF, cH) in candidates]
        for seed in seeds:
            reports.append(_count_once(plans, M.m, order, seed, epsilon,
                                       workers, max_retries, len(candidates)))
    return reports
