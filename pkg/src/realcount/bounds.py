"""Upper and lower bounds for realisation counts, and the order search.

Upper bound: half the number of bases avoiding all broken circuits.
Lower bound: half the number of such bases whose complementary partner
(complement plus the order minimum) also avoids every broken circuit.
The partner map is an involution, so the lower-bound count is even.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, field

from .graphs import EdgeOrder, GraphError, LabelledGraph, is_minimally_rigid_2d
from .matroids import (
    GraphicMatroid,
    LoopError,
    Matroid,
    MatroidError,
    chain_of_basis,
    circuits,
    enumerate_nbc_bases,
    indices_of,
    mask_of,
    popcount,
)
from .pairs import is_intersecting_arboreal_pair, realisation_number


def _as_matroid(obj):
    if isinstance(obj, LabelledGraph):
        return GraphicMatroid(obj)
    if isinstance(obj, Matroid):
        return obj
    raise MatroidError(f"expected a graph or matroid, got {type(obj).__name__}")


def nbc_upper_bound(obj, order: EdgeOrder = None):
    """(nbc count, floor(nbc/2), odd flag) for the given order."""
    M = _as_matroid(obj)
    if not M.is_loopless():
        raise LoopError("bounds require loopless matroids")
    if order is None:
        order = EdgeOrder.paper(M.m)
    nbc = len(enumerate_nbc_bases(M, order))
    return nbc, nbc // 2, nbc % 2 == 1


def realisation_bases(obj, order: EdgeOrder = None):
    """Bases B avoiding broken circuits whose partner (E minus B, plus the
    order minimum) is also such a basis.  Sorted list of index tuples."""
    M = _as_matroid(obj)
    if not M.is_loopless():
        raise LoopError("bounds require loopless matroids")
    if order is None:
        order = EdgeOrder.paper(M.m)
    nbc_masks = set(enumerate_nbc_bases(M, order))
    if M.m != 2 * M.full_rank - 1:
        return []  # partner has the wrong size, no basis can qualify
    e0 = 1 << order.min_element()
    out = []
    for b in nbc_masks:
        partner = (M.full_mask & ~b) | e0
        if partner in nbc_masks:
            out.append(tuple(indices_of(b)))
    out.sort()
    return out


def realisation_lower_bound(obj, order: EdgeOrder = None):
    bases = realisation_bases(obj, order)
    return len(bases), len(bases) // 2


# ---------------------------------------------------------------------------
# best-order search
# ---------------------------------------------------------------------------

def _pairs_for_min(M, circuit_masks, e0):
    """Candidate (B, partner) mask pairs once the order minimum is e0.

    Every basis avoiding all broken circuits must contain the minimum, and
    its partner must be a basis; both facts are order-prefix independent.
    """
    e0bit = 1 << e0
    full = M.full_mask
    pairs = []
    for bm in M.bases():
        if not (bm & e0bit):
            continue
        partner = (full & ~bm) | e0bit
        if popcount(partner) != M.full_rank or not M.is_basis(partner):
            continue
        pairs.append((bm, partner))
    return pairs


def _descending_repr(prefix, m):
    """Full order as elements from order-max to order-min, completing
    unplaced ranks with the unused elements ascending from the top rank."""
    used = set(prefix)
    rest = sorted(e for e in range(m) if e not in used)
    # prefix holds ranks 0..len-1; descending repr lists ranks m-1..0
    tail = list(reversed(prefix))
    return tuple(rest + tail)


def _order_from_descending(desc):
    m = len(desc)
    rank = [0] * m
    for pos, e in enumerate(desc):
        rank[e] = m - 1 - pos
    return EdgeOrder(tuple(rank))


def _search_from_min(M, circuit_masks, e0, best_seen):
    """Exhaustive prefix search with the order minimum fixed to e0.

    Returns (count, descending repr) of the best order in this branch, or
    None if nothing beats best_seen.  Circuits finalise their broken
    circuit as soon as their first element is placed; once every circuit
    is finalised the surviving pair count is fixed and the branch closes.
    """
    m = M.m
    pairs0 = _pairs_for_min(M, circuit_masks, e0)
    e0bit = 1 << e0
    active0 = []
    pairs = pairs0
    for c in circuit_masks:
        if c & e0bit:
            bc = c & ~e0bit
            pairs = [(b, p) for (b, p) in pairs
                     if (bc & ~b) != 0 and (bc & ~p) != 0]
        else:
            active0.append(c)
    best = best_seen  # (count, descending repr) or None

    def better(cand):
        if best is None:
            return True
        if cand[0] != best[0]:
            return cand[0] > best[0]
        return cand[1] < best[1]

    def rec(prefix, placed_mask, pairs, active):
        nonlocal best
        if not active or len(prefix) == m:
            cand = (len(pairs), _descending_repr(prefix, m))
            if better(cand):
                best = cand
            return
        if best is not None and len(pairs) < best[0]:
            return  # filters only shrink the pair set
        for e in range(m):
            ebit = 1 << e
            if placed_mask & ebit:
                continue
            new_pairs = pairs
            new_active = []
            for c in active:
                if c & ebit:
                    bc = c & ~ebit
                    new_pairs = [(b, p) for (b, p) in new_pairs
                                 if (bc & ~b) != 0 and (bc & ~p) != 0]
                else:
                    new_active.append(c)
            rec(prefix + [e], placed_mask | ebit, new_pairs, new_active)

    rec([e0], e0bit, pairs, active0)
    return best


def _search_worker(args):
    M, circuit_masks, e0 = args
    return _search_from_min(M, circuit_masks, e0, None)


@dataclass
class OrderSearchResult:
    count: int
    order: EdgeOrder
    certified: bool
    orders_tried: int | None = None


def best_order_search(obj, *, workers=None, sample_budget=20000, seed=0,
                      exhaustive_limit=10):
    """Order maximising the realisation-basis count.

    Exhaustive and certified up to exhaustive_limit ground elements; above
    that a seeded random sample of orders is scanned and the result is
    flagged uncertified.  Ties break towards the lexicographically least
    max-to-min element sequence.
    """
    M = _as_matroid(obj)
    if not M.is_loopless():
        raise LoopError("order search requires loopless matroids")
    m = M.m
    circuit_masks = circuits(M)
    if m <= exhaustive_limit:
        if workers and workers > 1:
            args = [(M, circuit_masks, e0) for e0 in range(m)]
            with multiprocessing.Pool(processes=min(workers, m)) as pool:
                results = pool.map(_search_worker, args)
            best = None
            for r in results:
                if r is None:
                    continue
                if (best is None or r[0] > best[0]
                        or (r[0] == best[0] and r[1] < best[1])):
                    best = r
        else:
            best = None
            for e0 in range(m):
                best = _search_from_min(M, circuit_masks, e0, best)
        count, desc = best
        return OrderSearchResult(count, _order_from_descending(desc), True)

    rng = random.Random(seed)
    best = None
    for _ in range(sample_budget):
        desc = list(range(m))
        rng.shuffle(desc)
        order = _order_from_descending(tuple(desc))
        n = len(realisation_bases(M, order))
        cand = (n, tuple(desc))
        if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
            best = cand
    return OrderSearchResult(best[0], _order_from_descending(best[1]), False,
                             orders_tried=sample_budget)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def check_jackson_owen(graph: LabelledGraph, order: EdgeOrder = None):
    """Compare the realisation count against the 2^(n-3) threshold."""
    c2 = realisation_number(graph, order)
    threshold = 2 ** (graph.n - 3)
    return {"c2": c2, "threshold": threshold, "satisfied": c2 >= threshold}


@dataclass
class BoundReport:
    graph_id: str
    nbc_count: int
    upper_bound: int
    realisation_basis_count: int
    lower_bound: int
    c2: int | None = None
    best_order: EdgeOrder | None = None
    best_order_count: int | None = None
    best_order_certified: bool | None = None
    nbc_odd: bool = False

    def to_json_obj(self):
        out = {
            "graph": self.graph_id,
            "nbcCount": self.nbc_count,
            "upperBound": self.upper_bound,
            "realisationBasisCount": self.realisation_basis_count,
            "lowerBound": self.lower_bound,
        }
        if self.c2 is not None:
            out["c2"] = self.c2
        if self.best_order is not None:
            out["bestOrder"] = list(self.best_order.descending())
            out["bestOrderCount"] = self.best_order_count
            out["bestOrderCertified"] = self.best_order_certified
        return out


def compute_bounds(graph: LabelledGraph, order: EdgeOrder = None, *,
                   graph_id="graph", with_c2=True, with_best_order=False,
                   workers=None):
    if order is None:
        order = EdgeOrder.paper(graph.m)
    nbc, upper, odd = nbc_upper_bound(graph, order)
    count, lower = realisation_lower_bound(graph, order)
    rep = BoundReport(graph_id, nbc, upper, count, lower, nbc_odd=odd)
    if with_c2:
        rep.c2 = realisation_number(graph, order)
    if with_best_order:
        res = best_order_search(graph, workers=workers)
        rep.best_order = res.order
        rep.best_order_count = res.count
        rep.best_order_certified = res.certified
    return rep


def verify_basis_pair_predicate(obj, order: EdgeOrder = None):
    """Every realisation basis yields a chain pair passing the predicate."""
    M = _as_matroid(obj)
    if order is None:
        order = EdgeOrder.paper(M.m)
    e0 = 1 << order.min_element()
    for b in realisation_bases(M, order):
        bm = mask_of(b)
        partner = (M.full_mask & ~bm) | e0
        cF = chain_of_basis(M, bm, order)
        cH = chain_of_basis(M, partner, order)
        dec = is_intersecting_arboreal_pair(cF, cH, order,
                                            matroidF=M, matroidH=M)
        if not dec.ok:
            return False, tuple(b), dec.reason
    return True, None, "ok"
