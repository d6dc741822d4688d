"""Intersection graphs of chain pairs and the pair-counting algorithms.

Three interchangeable counters:
  split       divide and conquer at the largest shared element, memoized on
              flat-interval 4-tuples (default; fastest by orders of magnitude)
  interleaved single DFS growing both chains level by level with cycle,
              starvation and lazy path-maximality pruning
  fixed       outer loop over complete left chains, inner DFS over the right
              flat lattice with cycle pruning; maximality once per completed
              tree (rooted at the reduced flat holding epsilon)

All three agree on every input; tests enforce it.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .graphs import EdgeOrder, GraphError, LabelledGraph, is_minimally_rigid_2d
from .matroids import (
    GraphicMatroid,
    LoopError,
    Matroid,
    MatroidError,
    MaximalChain,
    UniformMatroid,
    _chain_masks,
    flats_by_rank,
    indices_of,
    popcount,
)


class RankConditionError(MatroidError):
    """Rank sum of the two matroids does not complement the ground size."""


# ---------------------------------------------------------------------------
# intersection graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionGraph:
    """Bipartite multigraph on the reduced flats of two chains."""

    m: int
    left: tuple   # reduced flats of the first chain, masks
    right: tuple  # reduced flats of the second chain, masks
    edges: tuple  # (element, left index, right index) per ground element

    @property
    def vertex_count(self):
        return len(self.left) + len(self.right)

    def is_tree(self):
        nv = self.vertex_count
        if len(self.edges) != nv - 1:
            return False
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (_e, li, ri) in self.edges:
            ru, rv = find(li), find(len(self.left) + ri)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def element_edge(self, element):
        for (e, li, ri) in self.edges:
            if e == element:
                return (e, li, ri)
        raise KeyError(element)


def build_intersection_graph(chainF: MaximalChain, chainH: MaximalChain):
    if chainF.m != chainH.m:
        raise MatroidError("chains live over different ground sets")
    m = chainF.m
    lred = chainF.reduced_flats()
    rred = chainH.reduced_flats()
    li_of = [-1] * m
    ri_of = [-1] * m
    for i, f in enumerate(lred):
        mm = f
        while mm:
            b = mm & -mm
            li_of[b.bit_length() - 1] = i
            mm &= mm - 1
    for j, h in enumerate(rred):
        mm = h
        while mm:
            b = mm & -mm
            ri_of[b.bit_length() - 1] = j
            mm &= mm - 1
    edges = tuple((e, li_of[e], ri_of[e]) for e in range(m))
    return IntersectionGraph(m, tuple(lred), tuple(rred), edges)


# ---------------------------------------------------------------------------
# the pair predicate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairDecision:
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def _chain_is_maximal(matroid, chain: MaximalChain):
    """Proper flats of ranks 1..r-1, strictly nested, each closed."""
    if chain.m != matroid.m:
        return False
    r = matroid.full_rank
    if len(chain.flats) != r - 1:
        return False
    prev = 0
    for i, f in enumerate(chain.flats, start=1):
        if f == 0 or f == matroid.full_mask:
            return False
        if (prev & ~f) != 0 or prev == f:
            return False
        if matroid.rank(f) != i or matroid.closure(f) != f:
            return False
        prev = f
    return True


def _adjacent_pair_ok(adj, nleft, u, v, order_rank, want_left):
    """Walk the unique tree path u -> v; check the largest edge's direction.

    want_left: the largest edge, traversed from u towards v, must run
    left-to-right (F-side condition); otherwise right-to-left.
    """
    prev = {u: None}
    stack = [u]
    while stack:
        w = stack.pop()
        if w == v:
            break
        for (e, x) in adj[w]:
            if x not in prev:
                prev[x] = (e, w)
                stack.append(x)
    if v not in prev:
        return False  # disconnected; caller treats as failure
    best = -1
    from_left = False
    w = v
    while w != u:
        e, p = prev[w]
        if order_rank[e] > best:
            best = order_rank[e]
            from_left = p < nleft
        w = p
    return from_left == want_left


def is_intersecting_arboreal_pair(chainF, chainH, order: EdgeOrder, *,
                                  matroidF=None, matroidH=None, epsilon=None):
    """Tree test plus directional path-maximality for both chains.

    When the source matroids are supplied the chains are validated first and
    non-maximal chains are rejected with reason "non-maximal".
    """
    if chainF.m != chainH.m:
        raise MatroidError("chains live over different ground sets")
    if order.m != chainF.m:
        raise MatroidError("order does not match the ground set")
    if matroidF is not None and not _chain_is_maximal(matroidF, chainF):
        return PairDecision(False, "non-maximal")
    if matroidH is not None and not _chain_is_maximal(matroidH, chainH):
        return PairDecision(False, "non-maximal")
    gamma = build_intersection_graph(chainF, chainH)
    if not gamma.is_tree():
        return PairDecision(False, "not-a-tree")
    nleft = len(gamma.left)
    nright = len(gamma.right)
    adj = [[] for _ in range(nleft + nright)]
    for (e, li, ri) in gamma.edges:
        adj[li].append((e, nleft + ri))
        adj[nleft + ri].append((e, li))
    # root at the reduced flat holding epsilon (default: the order maximum);
    # the root choice cannot change path maxima, it just fixes traversal.
    if epsilon is None:
        epsilon = order.max_element()
    if not (0 <= epsilon < chainF.m):
        raise MatroidError(f"epsilon {epsilon} outside the ground set")
    for i in range(nleft - 1):
        if not _adjacent_pair_ok(adj, nleft, i, i + 1, order.rank, True):
            return PairDecision(False, "not-F-maximal")
    for j in range(nright - 1):
        if not _adjacent_pair_ok(adj, nleft, nleft + j, nleft + j + 1, order.rank, False):
            return PairDecision(False, "not-H-maximal")
    return PairDecision(True, "ok")


def verify_pair_naive(chainF, chainH, order: EdgeOrder):
    """Independent re-check used on witnesses: breadth-first path walks over
    an adjacency copy, no shared code with the counting DFS."""
    gamma = build_intersection_graph(chainF, chainH)
    nv = gamma.vertex_count
    if len(gamma.edges) != nv - 1:
        return False
    nleft = len(gamma.left)
    nbr = [[] for _ in range(nv)]
    for (e, li, ri) in gamma.edges:
        nbr[li].append((e, nleft + ri))
        nbr[nleft + ri].append((e, li))
    # connectivity == tree here (edge count checked above)
    seen = {0}
    queue = [0]
    while queue:
        w = queue.pop(0)
        for (_e, x) in nbr[w]:
            if x not in seen:
                seen.add(x)
                queue.append(x)
    if len(seen) != nv:
        return False

    def path(u, v):
        prev = {u: None}
        queue = [u]
        while queue:
            w = queue.pop(0)
            if w == v:
                break
            for (e, x) in nbr[w]:
                if x not in prev:
                    prev[x] = (e, w)
                    queue.append(x)
        out = []
        w = v
        while w != u:
            e, p = prev[w]
            out.append((e, p))
            w = p
        return out

    rank = order.rank
    for (u, v, want_left) in (
        [(i, i + 1, True) for i in range(nleft - 1)]
        + [(nleft + j, nleft + j + 1, False) for j in range(len(gamma.right) - 1)]
    ):
        steps = path(u, v)
        e_best, p_best = max(steps, key=lambda s: rank[s[0]])
        if (p_best < nleft) != want_left:
            return False
    return True


# ---------------------------------------------------------------------------
# count report
# ---------------------------------------------------------------------------

@dataclass
class Witness:
    chainF: MaximalChain
    chainH: MaximalChain
    tree_edges: tuple  # (element, left index, right index)

    def to_json_obj(self):
        return {
            "chainF": self.chainF.to_indices(),
            "chainH": self.chainH.to_indices(),
            "treeEdges": [list(t) for t in self.tree_edges],
        }


@dataclass
class PairCountReport:
    ordered: int
    unordered: int | None
    witnesses: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)


def _same_matroid(M, N):
    if M is N:
        return True
    if M.kind != N.kind:
        return False
    if M.kind == "graphic":
        return M.graph.n == N.graph.n and M.graph.edges == N.graph.edges
    if M.kind == "uniform":
        return M.m == N.m and M.s == N.s
    return False


def _check_pair_preconditions(M, N):
    if M.m != N.m:
        raise MatroidError("matroids must share one ground set")
    if not M.is_loopless() or not N.is_loopless():
        raise LoopError("pair counting requires loopless matroids")
    rm, rn = M.full_rank, N.full_rank
    if rm + rn != M.m + 1:
        raise RankConditionError(
            f"rank condition fails: {rm} + {rn} != {M.m} + 1 "
            "(complementary-dimension requirement)")


# ---------------------------------------------------------------------------
# strategy: split (divide and conquer at the largest shared element)
# ---------------------------------------------------------------------------

def _count_split(M, N, order: EdgeOrder, stats):
    levM, _cM = flats_by_rank(M)
    rankM = {f: rk for rk, level in enumerate(levM) for f in level}
    if _same_matroid(M, N):
        rankN = rankM
    else:
        levN, _cN = flats_by_rank(N)
        rankN = {f: rk for rk, level in enumerate(levN) for f in level}
    listM = sorted(rankM)
    listN = sorted(rankN)
    order_rank = order.rank
    full = M.full_mask
    memo = {}

    def max_elem_bit(mask):
        best = -1
        bb = 0
        mm = mask
        while mm:
            b = mm & -mm
            e = b.bit_length() - 1
            if order_rank[e] > best:
                best = order_rank[e]
                bb = b
            mm &= mm - 1
        return bb

    def count(X, Y, Z, W):
        key = (X, Y, Z, W)
        v = memo.get(key)
        if v is not None:
            return v
        stats["chains_visited"] += 1
        s = rankM[Y] - rankM[X]
        t = rankN[W] - rankN[Z]
        S = (Y & ~X) & (W & ~Z)
        if popcount(S) != s + t - 1:
            stats["prunes"] += 1
            memo[key] = 0
            return 0
        if s == 0 or t == 0:
            v = 1 if (s + t == 1 and S == 0) else 0
            memo[key] = v
            return v
        if s == 1 and t == 1:
            memo[key] = 1
            return 1
        lbit = max_elem_bit(S)
        cand_F = [F for F in listM if (F & lbit) and (F & ~Y) == 0 and (X & ~F) == 0]
        cand_H = [H for H in listN if (H & lbit) and (H & ~W) == 0 and (Z & ~H) == 0]
        total = 0
        for F in cand_F:
            T = (S & ~F) | lbit
            p = rankM[F] - rankM[X]
            szFS = popcount(F & S)
            for H in cand_H:
                if (H & S) != T:
                    continue
                q = rankN[H] - rankN[Z]
                if szFS != p + t - q:
                    continue
                a = count(X, F, H, W)
                if a:
                    total += a * count(F, Y, Z, H)
        memo[key] = total
        return total

    return count(0, full, 0, full)


# ---------------------------------------------------------------------------
# strategy: interleaved (both chains grown level by level)
# ---------------------------------------------------------------------------

def _count_interleaved(M, N, order: EdgeOrder, stats):
    m = M.m
    full = M.full_mask
    levM, covM = flats_by_rank(M)
    symmetric = _same_matroid(M, N)
    if symmetric:
        covN = covM
        rN = len(levM) - 1
    else:
        levN, covN = flats_by_rank(N)
        rN = len(levN) - 1
    rM = len(levM) - 1
    order_rank = order.rank
    nlv = rM
    V = rM + rN
    depth = max(rM, rN)
    adj = [[] for _ in range(V)]
    lslot = [-1] * m
    rslot = [-1] * m
    counters = {"total": 0, "diag": 0}

    def find(uf, x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def path_ok(u, v, want_left):
        prev = {u: None}
        stack = [u]
        while stack:
            w = stack.pop()
            if w == v:
                break
            for ew in adj[w]:
                x = ew[1]
                if x not in prev:
                    prev[x] = (ew[0], w)
                    stack.append(x)
        best = -1
        from_left = False
        w = v
        while w != u:
            e, p = prev[w]
            if order_rank[e] > best:
                best = order_rank[e]
                from_left = p < nlv
            w = p
        return from_left == want_left

    def add_star(vertex, newset, own_left, uf, lm, rm_, um, ncomp):
        """Try to add `vertex` with edges for newset; return state or None."""
        stats["chains_visited"] += 1
        roots = []
        star = []
        unmatched = 0
        mm = newset
        while mm:
            b = mm & -mm
            x = b.bit_length() - 1
            slot = rslot[x] if own_left else lslot[x]
            if slot >= 0:
                other = (nlv + slot) if own_left else slot
                rt = find(uf, other)
                if rt in roots:
                    stats["prunes"] += 1
                    return None
                roots.append(rt)
                star.append((x, other))
            else:
                unmatched += 1
            mm &= mm - 1
        ml = (1 << vertex) if own_left else 0
        mr = 0 if own_left else (1 << (vertex - nlv))
        umc = unmatched
        for rt in roots:
            ml |= lm[rt]
            mr |= rm_[rt]
            umc += um[rt]
        umc -= len(star)
        uf[vertex] = vertex
        for rt in roots:
            uf[rt] = vertex
        lm[vertex] = ml
        rm_[vertex] = mr
        um[vertex] = umc
        ncomp2 = ncomp + 1 - len(roots)
        if umc == 0 and ncomp2 > 1:
            stats["prunes"] += 1
            return None
        return star, ml, mr, ncomp2

    def place(vertex, newset, own_left, star):
        for (x, other) in star:
            adj[vertex].append((x, other))
            adj[other].append((x, vertex))
        mm = newset
        while mm:
            b = mm & -mm
            if own_left:
                lslot[b.bit_length() - 1] = vertex
            else:
                rslot[b.bit_length() - 1] = vertex - nlv
            mm &= mm - 1

    def unplace(vertex, newset, own_left, star):
        mm = newset
        while mm:
            b = mm & -mm
            if own_left:
                lslot[b.bit_length() - 1] = -1
            else:
                rslot[b.bit_length() - 1] = -1
            mm &= mm - 1
        for (_x, other) in star:
            adj[other].pop()
        adj[vertex].clear()

    def check_new(ml, mr, checkedL, checkedR):
        cL, cR = checkedL, checkedR
        newl = (ml & (ml >> 1)) & ~cL
        while newl:
            b = newl & -newl
            i0 = b.bit_length() - 1
            if not path_ok(i0, i0 + 1, True):
                return None
            cL |= b
            newl &= newl - 1
        newr = (mr & (mr >> 1)) & ~cR
        while newr:
            b = newr & -newr
            j0 = b.bit_length() - 1
            if not path_ok(nlv + j0, nlv + j0 + 1, False):
                return None
            cR |= b
            newr &= newr - 1
        return cL, cR

    def rec(f, h, t, uf, lm, rm_, um, checkedL, checkedR, ncomp, cmp_state):
        if t <= rM:
            fc_list = (full,) if t == rM else covM[f]
        else:
            fc_list = (f,)
        for fc in fc_list:
            did_f = t <= rM
            if did_f:
                Rf = fc & ~f
                ufa, lma, rma, uma = list(uf), list(lm), list(rm_), list(um)
                got = add_star(t - 1, Rf, True, ufa, lma, rma, uma, ncomp)
                if got is None:
                    continue
                starF, mlF, mrF, ncompF = got
                place(t - 1, Rf, True, starF)
                chk = check_new(mlF, mrF, checkedL, checkedR)
                if chk is None:
                    stats["prunes"] += 1
                    unplace(t - 1, Rf, True, starF)
                    continue
                cLf, cRf = chk
            else:
                ufa, lma, rma, uma = uf, lm, rm_, um
                ncompF = ncomp
                cLf, cRf = checkedL, checkedR

            if t <= rN:
                hc_list = (full,) if t == rN else covN[h]
            else:
                hc_list = (h,)
            for hc in hc_list:
                st = cmp_state
                did_h = t <= rN
                if did_h:
                    if st == 0:
                        if hc < fc:
                            continue
                        if hc > fc:
                            st = 1
                    Rh = hc & ~h
                    ufb, lmb, rmb, umb = list(ufa), list(lma), list(rma), list(uma)
                    got = add_star(nlv + t - 1, Rh, False, ufb, lmb, rmb, umb, ncompF)
                    if got is None:
                        continue
                    starH, mlH, mrH, ncompH = got
                    place(nlv + t - 1, Rh, False, starH)
                    chk = check_new(mlH, mrH, cLf, cRf)
                    if chk is None:
                        stats["prunes"] += 1
                        unplace(nlv + t - 1, Rh, False, starH)
                        continue
                    cL, cR = chk
                else:
                    ufb, lmb, rmb, umb = ufa, lma, rma, uma
                    ncompH = ncompF
                    cL, cR = cLf, cRf
                if t == depth:
                    if symmetric and st == 0:
                        counters["diag"] += 1
                    else:
                        counters["total"] += 1
                else:
                    rec(fc, hc, t + 1, ufb, lmb, rmb, umb, cL, cR, ncompH, st)
                if did_h:
                    unplace(nlv + t - 1, Rh, False, starH)
            if did_f:
                unplace(t - 1, Rf, True, starF)

    uf0 = [-1] * V
    rec(0, 0, 1, uf0, [0] * V, [0] * V, [0] * V, 0, 0, 0, 0 if symmetric else 1)
    if symmetric:
        return 2 * counters["total"] + counters["diag"], counters["diag"]
    return counters["total"], 0


# ---------------------------------------------------------------------------
# strategy: fixed (outer chains of M, inner DFS over N's flats)
# ---------------------------------------------------------------------------

def _fixed_inner(M, N, order, chainsM, covN, epsilon, stats, collect=None, limit=0):
    m = M.m
    full = M.full_mask
    rN = N.full_rank
    total = 0
    order_rank = order.rank

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

        # DFS over right chains; vertex ids: lefts 0..rM-1, rights rM+j
        def rec(h, t, uf, flatsH):
            nonlocal total
            stats["chains_visited"] += 1
            hc_list = (full,) if t == rN else covN[h]
            for hc in hc_list:
                Rh = hc & ~h
                ufa = list(uf)
                vtx = rM + t - 1
                ufa_roots = set()
                ok = True
                mm = Rh
                while mm:
                    b = mm & -mm
                    li = left_of[b.bit_length() - 1]
                    rt = find(ufa, li)
                    if rt in ufa_roots:
                        ok = False
                        stats["prunes"] += 1
                        break
                    ufa_roots.add(rt)
                    mm &= mm - 1
                if not ok:
                    continue
                for rt in ufa_roots:
                    ufa[rt] = vtx
                if t == rN:
                    chainH = MaximalChain(m, flatsH)
                    dec = is_intersecting_arboreal_pair(
                        chainF, chainH, order, epsilon=epsilon)
                    if dec.ok:
                        total += 1
                        if collect is not None and len(collect) < limit:
                            gamma = build_intersection_graph(chainF, chainH)
                            collect.append(Witness(chainF, chainH, gamma.edges))
                    else:
                        stats["prunes"] += 1
                else:
                    rec(hc, t + 1, ufa, flatsH + (hc,))

        uf0 = list(range(rM + rN))
        rec(0, 1, uf0, ())
    return total


def _count_fixed(M, N, order, epsilon, stats, workers=None, collect=None, limit=0):
    chainsM = _chain_masks(M)
    _levN, covN = flats_by_rank(N)
    if workers and workers > 1 and collect is None:
        chunks = [chainsM[i::workers] for i in range(workers)]
        args = [(M, N, order, chunk, covN, epsilon) for chunk in chunks if chunk]
        with multiprocessing.Pool(processes=workers) as pool:
            parts = pool.map(_fixed_worker, args)
        for sub_total, sub_stats in parts:
            stats["chains_visited"] += sub_stats["chains_visited"]
            stats["prunes"] += sub_stats["prunes"]
        return sum(p[0] for p in parts)
    return _fixed_inner(M, N, order, chainsM, covN, epsilon, stats, collect, limit)


def _fixed_worker(args):
    M, N, order, chunk, covN, epsilon = args
    stats = {"chains_visited": 0, "prunes": 0}
    total = _fixed_inner(M, N, order, chunk, covN, epsilon, stats)
    return total, stats


# ---------------------------------------------------------------------------
# public counting API
# ---------------------------------------------------------------------------

def count_intersecting_pairs(M, N, order: EdgeOrder = None, *, strategy="auto",
                             workers=None, witness_limit=0, epsilon=None):
    """Count ordered intersecting arboreal pairs of maximal chains of (M, N)."""
    _check_pair_preconditions(M, N)
    if order is None:
        order = EdgeOrder.paper(M.m)
    if order.m != M.m:
        raise MatroidError("order does not match the ground set")
    if strategy == "auto":
        strategy = "split"
    stats = {"strategy": strategy, "chains_visited": 0, "prunes": 0}
    symmetric = _same_matroid(M, N)
    diag = 0
    if strategy == "split":
        ordered = _count_split(M, N, order, stats)
        if symmetric and M.full_rank == 1:
            diag = 1
    elif strategy == "interleaved":
        ordered, diag = _count_interleaved(M, N, order, stats)
    elif strategy == "fixed":
        ordered = _count_fixed(M, N, order, epsilon, stats, workers=workers)
        if symmetric and M.full_rank == 1:
            diag = 1
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    witnesses = []
    if witness_limit:
        wstats = {"chains_visited": 0, "prunes": 0}
        _count_fixed(M, N, order, epsilon, wstats,
                     collect=witnesses, limit=witness_limit)
        for w in witnesses:
            if not verify_pair_naive(w.chainF, w.chainH, order):
                raise MatroidError("witness failed independent re-verification")
        witnesses.sort(key=lambda w: (w.chainF.flats, w.chainH.flats))
        witnesses = witnesses[:witness_limit]

    unordered = None
    if symmetric:
        if M.full_rank >= 2 and ordered % 2 != 0:
            raise MatroidError("symmetric ordered count must be even")
        unordered = (ordered + diag) // 2
    return PairCountReport(ordered, unordered, witnesses, stats)


def realisation_number(graph: LabelledGraph, order: EdgeOrder = None, *,
                       epsilon=None, strategy="auto", workers=None):
    """Unordered intersecting-pair count of the graphic matroid with itself."""
    if graph.n < 3:
        raise GraphError("realisation numbers need at least 3 vertices")
    if not is_minimally_rigid_2d(graph):
        raise GraphError("graph is not minimally rigid in the plane")
    M = GraphicMatroid(graph)
    report = count_intersecting_pairs(M, M, order, strategy=strategy,
                                      workers=workers, epsilon=epsilon)
    return report.unordered


def bigraph_laman_number(G: LabelledGraph, H: LabelledGraph, bijection=None,
                         order: EdgeOrder = None, *, strategy="auto", workers=None):
    """Ordered pair count for two multigraphs sharing their edge set.

    bijection[i] = index of the H-edge glued to G's edge i (identity default).
    """
    m = G.m
    if H.m != m:
        raise MatroidError("bigraph members must have the same edge count")
    if bijection is None:
        bijection = list(range(m))
    if sorted(bijection) != list(range(m)):
        raise MatroidError("edge bijection must be a permutation")
    aligned_H = LabelledGraph(H.n, tuple(H.edges[bijection[i]] for i in range(m)),
                              tuple(H.labels[bijection[i]] for i in range(m)))
    MG = GraphicMatroid(G)
    MH = GraphicMatroid(aligned_H)
    if not MG.is_loopless() or not MH.is_loopless():
        raise LoopError("bigraph members must be loopless")
    report = count_intersecting_pairs(MH, MG, order, strategy=strategy,
                                      workers=workers)
    return report.ordered


def nbc_via_uniform_pairs(matroid, order: EdgeOrder = None, *, strategy="auto"):
    """nbc count as the pair count against the complementary uniform matroid."""
    m = matroid.m
    k = matroid.full_rank
    uniform = UniformMatroid(m, m - k + 1)
    report = count_intersecting_pairs(uniform, matroid, order, strategy=strategy)
    return report.ordered
