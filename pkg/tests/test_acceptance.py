"""Acceptance gate: one test per criterion, exact values, stated budgets."""

import itertools
import time

from realcount.graphs import EdgeOrder, LabelledGraph, henneberg_generate
from realcount.matroids import (
    GraphicMatroid,
    broken_circuits,
    enumerate_nbc_bases,
    indices_of,
)
from realcount.bounds import (
    best_order_search,
    check_jackson_owen,
    compute_bounds,
    nbc_upper_bound,
    realisation_bases,
    realisation_lower_bound,
)
from realcount.oracle import enumerate_tree_pairs, oracle_verify
from realcount.pairs import (
    bigraph_laman_number,
    count_intersecting_pairs,
    nbc_via_uniform_pairs,
    realisation_number,
)
from realcount.polynomials import characteristic_and_chromatic, tutte_polynomial
from conftest import catalog, catalog_up_to, k3


def labels(mask):
    return frozenset(e + 1 for e in indices_of(mask))


def report(num, name, t0, budget=None, detail=""):
    dt = time.perf_counter() - t0
    line = f"criterion {num:02d} {name}: PASS in {dt:.2f}s"
    if budget is not None:
        assert dt <= budget, f"criterion {num} exceeded {budget}s ({dt:.2f}s)"
        line += f" (budget {budget:.0f}s)"
    if detail:
        line += f" [{detail}]"
    print(line)


# ---------------------------------------------------------------------------
# 1. fixture exactness
# ---------------------------------------------------------------------------

def test_criterion_01_fixture_exactness(k4minus, prism3, k33):
    t0 = time.perf_counter()
    assert realisation_number(k4minus) == 2
    assert time.perf_counter() - t0 <= 1.0

    t1 = time.perf_counter()
    assert realisation_number(prism3) == 12
    assert nbc_upper_bound(prism3) == (26, 13, False)
    assert len(GraphicMatroid(prism3).bases()) == 75
    assert time.perf_counter() - t1 <= 10.0

    t2 = time.perf_counter()
    assert realisation_number(k33) == 8
    assert len(realisation_bases(k33)) == 14
    assert realisation_lower_bound(k33) == (14, 7)
    assert time.perf_counter() - t2 <= 60.0
    report(1, "fixture-exactness", t0)


# ---------------------------------------------------------------------------
# 2. stretch fixture
# ---------------------------------------------------------------------------

def test_criterion_02_stretch_fixture(fig2):
    t0 = time.perf_counter()
    assert realisation_number(fig2) == 45
    report(2, "stretch-fixture", t0, budget=600.0)


# ---------------------------------------------------------------------------
# 3. broken-circuit goldens
# ---------------------------------------------------------------------------

PRISM_BROKEN = [{1, 2}, {6, 8}, {1, 4, 7}, {2, 4, 5}, {3, 5, 7},
                {1, 2, 5, 7}, {1, 3, 4, 5}, {1, 4, 6, 7}, {2, 3, 4, 7},
                {2, 4, 5, 8}, {3, 5, 6, 7}, {1, 2, 5, 6, 7}, {1, 3, 4, 5, 8},
                {2, 3, 4, 6, 7}]

PRISM_NBC = [{1, 3, 4, 6, 9}, {1, 3, 4, 8, 9}, {1, 3, 5, 6, 9}, {1, 3, 5, 8, 9},
             {1, 3, 6, 7, 9}, {1, 3, 7, 8, 9}, {1, 4, 5, 6, 9}, {1, 4, 5, 8, 9},
             {1, 5, 6, 7, 9}, {1, 5, 7, 8, 9}, {2, 3, 4, 6, 9}, {2, 3, 4, 8, 9},
             {2, 3, 5, 6, 9}, {2, 3, 5, 8, 9}, {2, 3, 6, 7, 9}, {2, 3, 7, 8, 9},
             {2, 4, 6, 7, 9}, {2, 4, 7, 8, 9}, {2, 5, 6, 7, 9}, {2, 5, 7, 8, 9},
             {3, 4, 5, 6, 9}, {3, 4, 5, 8, 9}, {3, 4, 6, 7, 9}, {3, 4, 7, 8, 9},
             {4, 5, 6, 7, 9}, {4, 5, 7, 8, 9}]


def test_criterion_03_broken_circuit_golden(prism3):
    t0 = time.perf_counter()
    M = GraphicMatroid(prism3)
    order = EdgeOrder.paper(9)
    got_bc = {labels(b) for b in broken_circuits(M, order)}
    assert got_bc == {frozenset(s) for s in PRISM_BROKEN}
    got_nbc = {labels(b) for b in enumerate_nbc_bases(M, order)}
    assert got_nbc == {frozenset(s) for s in PRISM_NBC}
    report(3, "broken-circuit-golden", t0)


# ---------------------------------------------------------------------------
# 4. triple identity over an independently re-derived catalog
# ---------------------------------------------------------------------------

def brute_tight_class_count(n):
    """Isomorphism classes of (2,3)-tight graphs on n labelled vertices,
    derived by subset filtering and permutation-minimising, sharing no code
    with the generator or the canonical-form search."""
    m = 2 * n - 3
    pool = list(itertools.combinations(range(n), 2))

    def tight(edges):
        for k in range(2, n + 1):
            for sub in itertools.combinations(range(n), k):
                s = set(sub)
                cnt = sum(1 for (u, v) in edges if u in s and v in s)
                if cnt > 2 * k - 3:
                    return False
        return True

    pair_index = {p: i for i, p in enumerate(pool)}
    perm_tables = []
    for perm in itertools.permutations(range(n)):
        perm_tables.append([pair_index[tuple(sorted((perm[u], perm[v])))]
                            for (u, v) in pool])
    classes = set()
    for combo in itertools.combinations(range(len(pool)), m):
        edges = [pool[i] for i in combo]
        if not tight(edges):
            continue
        best = None
        for table in perm_tables:
            mask = 0
            for i in combo:
                mask |= 1 << table[i]
            if best is None or mask < best:
                best = mask
        classes.add(best)
    return len(classes)


def test_criterion_04_triple_identity():
    t0 = time.perf_counter()
    want_counts = {3: 1, 4: 1, 5: 3, 6: 13}
    for n, want in want_counts.items():
        assert brute_tight_class_count(n) == want
        assert len(henneberg_generate(n)) == want
    checked = 0
    for g in catalog_up_to(6):
        M = GraphicMatroid(g)
        order = EdgeOrder.paper(g.m)
        a = len(enumerate_nbc_bases(M, order))
        b = tutte_polynomial(M).evaluate(1, 0)
        rep = characteristic_and_chromatic(g)
        c = abs(rep.characteristic(0))
        d = abs(rep.chromatic.coeff(1))
        e = nbc_via_uniform_pairs(M, order)
        assert a == b == c == d == e, (g.edges, a, b, c, d, e)
        checked += 1
    assert checked == 18
    report(4, "triple-identity", t0, budget=300.0, detail="18 graphs")


# ---------------------------------------------------------------------------
# 5. oracle equivalence
# ---------------------------------------------------------------------------

def test_criterion_05_oracle_equivalence():
    t0 = time.perf_counter()
    for g in catalog_up_to(6):
        M = GraphicMatroid(g)
        order = EdgeOrder.paper(g.m)
        expected = count_intersecting_pairs(M, M, order).ordered
        assert expected == 2 * realisation_number(g, order)
        candidates = enumerate_tree_pairs(M, M)
        eps = (order.max_element(), order.min_element())
        reports = oracle_verify(M, order=order, seeds=(0, 1, 2),
                                epsilons=eps, candidates=candidates)
        assert len(reports) == 6
        assert all(r.count == expected for r in reports)
    report(5, "oracle-equivalence", t0, detail="18 graphs x 3 seeds x 2 eps")


# ---------------------------------------------------------------------------
# 6. order and epsilon invariance
# ---------------------------------------------------------------------------

def test_criterion_06_invariance():
    t0 = time.perf_counter()
    counts = 0
    for g in catalog_up_to(5):
        M = GraphicMatroid(g)
        base = count_intersecting_pairs(M, M).ordered
        for k in range(5):
            order = EdgeOrder.random(g.m, 1000 + k)
            for eps in range(g.m):
                rep = count_intersecting_pairs(M, M, order, strategy="fixed",
                                               epsilon=eps)
                assert rep.ordered == base, (g.edges, order.rank, eps)
                counts += 1
    assert counts == 145
    report(6, "invariance", t0, detail="145 counts")


# ---------------------------------------------------------------------------
# 7. sandwich and the 2^(n-3) threshold
# ---------------------------------------------------------------------------

def test_criterion_07_sandwich_and_threshold():
    t0 = time.perf_counter()
    for g in catalog_up_to(6):
        rep = compute_bounds(g)
        assert rep.lower_bound <= rep.c2 <= rep.upper_bound
    seven = catalog(7)
    assert len(seven) == 70
    for g in catalog_up_to(7):
        assert check_jackson_owen(g)["satisfied"]
    report(7, "sandwich-and-threshold", t0, budget=1800.0,
           detail="bounds n<=6, threshold n<=7")


# ---------------------------------------------------------------------------
# 8. bigraph regression
# ---------------------------------------------------------------------------

def test_criterion_08_bigraph_regression():
    t0 = time.perf_counter()
    for g in catalog_up_to(5):
        assert bigraph_laman_number(g, g) == 2 * realisation_number(g)
    report(8, "bigraph-regression", t0, detail="5 graphs")


# ---------------------------------------------------------------------------
# 9. order-search certification
# ---------------------------------------------------------------------------

def test_criterion_09_order_search_certification(prism3, k33):
    t0 = time.perf_counter()
    res_p = best_order_search(prism3)
    assert res_p.certified and res_p.count == 16
    assert time.perf_counter() - t0 <= 600.0

    t1 = time.perf_counter()
    res_k = best_order_search(k33)
    assert res_k.certified and res_k.count == 14
    assert time.perf_counter() - t1 <= 600.0
    report(9, "order-search-certification", t0)


# ---------------------------------------------------------------------------
# 10. declared substitution for the census-scale statistics
# ---------------------------------------------------------------------------

def test_criterion_10_declared_substitution():
    # census-scale statistics (hundreds of thousands of graphs) are out of
    # scope at this scale by declaration; the property suites of criteria
    # 4 through 8 plus this bound table stand in for them.
    t0 = time.perf_counter()
    table = []
    for g in catalog_up_to(5):
        rep = compute_bounds(g)
        table.append((g.n, g.m, rep.lower_bound, rep.c2, rep.upper_bound,
                      rep.nbc_count))
    assert len(table) == 5
    print("n  m  lower  c2  upper  nbc")
    for (n, m, lo, c2, up, nbc) in table:
        print(f"{n}  {m}  {lo:5d}  {c2:2d}  {up:5d}  {nbc:3d}")
        assert lo <= c2 <= up and up <= nbc
    report(10, "declared-substitution", t0, detail="bound table emitted")
