"""Labelled multigraphs, edge orders, parsing, rigidity checks, catalogs.

Vertices are 0-based internally; the text formats use 1-based ids.  Edge
indices 0..m-1 are the matroid ground set everywhere downstream; display
labels default to the 1-based index as a string, matching the convention
that "order 1 > 2 > ... > m" makes label 1 the order-maximum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    pass


class UnsupportedError(GraphError):
    pass


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabelledGraph:
    """Undirected multigraph with stable edge indices 0..m-1."""

    n: int
    edges: tuple  # tuple of (u, v) pairs, 0-based, u/v order as given
    labels: tuple = None  # display name per edge

    def __post_init__(self):
        if self.n <= 0:
            raise GraphError("vertex count must be positive")
        edges = tuple((int(u), int(v)) for (u, v) in self.edges)
        for (u, v) in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(len(edges))))
        else:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != len(edges):
                raise GraphError("labels length must match edge count")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self):
        return len(self.edges)

    @property
    def has_loops(self):
        return any(u == v for (u, v) in self.edges)

    @property
    def has_parallel(self):
        seen = set()
        for (u, v) in self.edges:
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    @property
    def is_simple(self):
        return not self.has_loops and not self.has_parallel

    def degree_sequence(self):
        deg = [0] * self.n
        for (u, v) in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self):
        if self.n == 1:
            return True
        parent = list(range(self.n))
        for (u, v) in self.edges:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
        root = _find(parent, 0)
        return all(_find(parent, v) == root for v in range(self.n))

    def edge_index(self, label):
        """Edge index for a display label."""
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise GraphError(f"no edge labelled {label!r}") from None

    def relabelled(self, perm):
        """Graph with vertex i renamed perm[i]; edge order preserved."""
        return LabelledGraph(self.n, tuple((perm[u], perm[v]) for (u, v) in self.edges), self.labels)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@dataclass(frozen=True)
class EdgeOrder:
    """Total order on edge indices: rank 0 is the minimum, rank m-1 the maximum."""

    rank: tuple

    def __post_init__(self):
        rank = tuple(int(r) for r in self.rank)
        if sorted(rank) != list(range(len(rank))):
            raise GraphError("rank must be a permutation of 0..m-1")
        object.__setattr__(self, "rank", rank)

    @property
    def m(self):
        return len(self.rank)

    @classmethod
    def paper(cls, m):
        """The fixtures' convention: label 1 (index 0) is the maximum."""
        return cls(tuple(m - 1 - i for i in range(m)))

    @classmethod
    def identity(cls, m):
        """Index 0 is the minimum."""
        return cls(tuple(range(m)))

    @classmethod
    def random(cls, m, seed):
        rng = random.Random(seed)
        ranks = list(range(m))
        rng.shuffle(ranks)
        return cls(tuple(ranks))

    @classmethod
    def greatest_to_least(cls, indices):
        """Order given as edge indices listed from maximum to minimum."""
        indices = list(indices)
        m = len(indices)
        if sorted(indices) != list(range(m)):
            raise GraphError("order must list every edge index exactly once")
        rank = [0] * m
        for pos, e in enumerate(indices):
            rank[e] = m - 1 - pos
        return cls(tuple(rank))

    def min_element(self):
        return self.rank.index(0)

    def max_element(self):
        return self.rank.index(self.m - 1)

    def min_of(self, indices):
        return min(indices, key=lambda e: self.rank[e])

    def max_of(self, indices):
        return max(indices, key=lambda e: self.rank[e])

    def descending(self):
        """Edge indices from maximum to minimum."""
        return sorted(range(self.m), key=lambda e: -self.rank[e])


# ---------------------------------------------------------------------------
# parsing / encoding
# ---------------------------------------------------------------------------

def parse_edge_list(text):
    """Parse "u v [label]" lines (1-based vertex ids, '#' comments)."""
    edges = []
    labels = []
    nmax = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"line {lineno}: expected 'u v [label]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertex ids are 1-based, got {u} {v}")
        edges.append((u - 1, v - 1))
        labels.append(parts[2] if len(parts) == 3 else str(len(edges)))
        nmax = max(nmax, u, v)
    if not edges:
        raise ParseError("no edges found")
    return LabelledGraph(nmax, tuple(edges), tuple(labels))


def format_edge_list(graph):
    lines = []
    for i, (u, v) in enumerate(graph.edges):
        lines.append(f"{u + 1} {v + 1} {graph.labels[i]}")
    return "\n".join(lines) + "\n"


def parse_graph6(text):
    """Decode one graph6 line into a simple LabelledGraph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    data = []
    for ch in s:
        o = ord(ch)
        if o < 63 or o > 126:
            raise ParseError(f"invalid graph6 character {ch!r} (ord {o})")
        data.append(o - 63)
    # size field
    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for k in range(2, 8):
            n = (n << 6) | data[k]
        pos = 8
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(f"graph6 body has {len(data) - pos} characters, expected {nbytes}")
    bits = []
    for k in range(pos, len(data)):
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((data[k] >> shift) & 1)
    if any(bits[nbits:]):
        raise ParseError("nonzero trailing bits in graph6 body")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return LabelledGraph(max(n, 1), tuple(edges))


def encode_graph6(graph):
    """Encode a simple graph as one graph6 line."""
    if not graph.is_simple:
        raise GraphError("graph6 encodes simple graphs only")
    n = graph.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in (5, 4, 3, 2, 1, 0)]
    adj = set()
    for (u, v) in graph.edges:
        adj.add((min(u, v), max(u, v)))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


# ---------------------------------------------------------------------------
# sparsity / rigidity
# ---------------------------------------------------------------------------

def is_sparse(graph, k, l):
    """(k,l)-sparsity via the pebble game."""
    _check_pebble_params(graph, k, l)
    return _pebble_game(graph, k, l)


def is_tight(graph, k, l):
    """(k,l)-tight: exact global count and every subgraph within budget."""
    _check_pebble_params(graph, k, l)
    if graph.m != k * graph.n - l:
        return False
    return _pebble_game(graph, k, l)


def _check_pebble_params(graph, k, l):
    if k < 1 or l < 0 or l >= 2 * k or l > k * (k + 1) // 2:
        raise UnsupportedError(f"pebble game undefined for (k,l)=({k},{l})")
    if l >= k and graph.has_loops:
        raise GraphError("loops not allowed for these sparsity parameters")
    if (k, l) == (2, 3) and not graph.is_simple:
        raise GraphError("(2,3)-tightness is defined for simple graphs")


def _pebble_game(graph, k, l):
    n = graph.n
    pebbles = [k] * n
    out = [[] for _ in range(n)]  # directed edges of the cover

    def gather(u, v, need):
        # move pebbles onto {u,v} until they hold `need`, by reversing paths
        def held():
            return pebbles[u] if u == v else pebbles[u] + pebbles[v]

        while held() < need:
            prev = [-1] * n
            prev[u] = u
            prev[v] = v
            stack = [u, v]
            found = -1
            while stack:
                w = stack.pop()
                if pebbles[w] > 0 and w not in (u, v):
                    found = w
                    break
                for x in out[w]:
                    if prev[x] == -1:
                        prev[x] = w
                        stack.append(x)
            if found == -1:
                return False
            # reverse the path from the start vertex to `found`
            w = found
            while prev[w] != w:
                p = prev[w]
                out[p].remove(w)
                out[w].append(p)
                w = p
            pebbles[found] -= 1
            pebbles[w] += 1
        return True

    for (u, v) in graph.edges:
        if u == v:
            if not gather(u, u, l + 1):
                return False
            pebbles[u] -= 1
            out[u].append(u)
            continue
        if not gather(u, v, l + 1):
            return False
        if pebbles[u] == 0:
            u, v = v, u
        pebbles[u] -= 1
        out[u].append(v)
    return True


def is_tight_bruteforce(graph, k, l):
    """Definitional check over all vertex subsets; test oracle for small n."""
    if graph.m != k * graph.n - l:
        return False
    return is_sparse_bruteforce(graph, k, l)


def is_sparse_bruteforce(graph, k, l):
    n = graph.n
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size < k:
            continue
        count = 0
        for (u, v) in graph.edges:
            if (mask >> u) & 1 and (mask >> v) & 1:
                count += 1
        if count > k * size - l:
            return False
    return True


def is_minimally_rigid_2d(graph):
    """Generic rigidity in the plane with edge-minimality."""
    if not graph.is_simple:
        raise GraphError("(2,3)-tightness is defined for simple graphs")
    if graph.n < 2:
        return False
    if graph.n == 2:
        return graph.m == 1
    return is_tight(graph, 2, 3)


# ---------------------------------------------------------------------------
# canonical form & catalog generation
# ---------------------------------------------------------------------------

def canonical_form(graph):
    """Lexicographically least relabelled edge list over all vertex permutations.

    Exact branch-and-bound.  Grouping edges by their smaller endpoint makes
    the partial list append-only: row a is settled once every neighbour of
    the vertex labelled a has a label, so the concatenation of the settled
    rows (plus the growable head row, which only ever extends) is a stable
    prefix of the final sorted edge list and can be compared soundly against
    the incumbent.  Degree refinement only orders candidates; the sole
    exclusion is swapping a vertex with an unassigned twin, which is a graph
    automorphism and cannot change the edge list.
    """
    if not graph.is_simple:
        raise GraphError("canonical_form requires a simple graph")
    if graph.n > 12:
        raise UnsupportedError("canonical_form supports n <= 12")
    n = graph.n
    adj = [0] * n
    for (u, v) in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    # refinement colours: iterate (degree, multiset of neighbour colours)
    colour = [bin(adj[v]).count("1") for v in range(n)]
    for _ in range(n):
        sig = [(colour[v], tuple(sorted(colour[w] for w in _bits(adj[v])))) for v in range(n)]
        order = sorted(set(sig))
        new = [order.index(s) for s in sig]
        if new == colour:
            break
        colour = new

    twin = [[adj[u] & ~(1 << v) == adj[v] & ~(1 << u) for v in range(n)]
            for u in range(n)]
    best = None
    heur = sorted(range(n), key=lambda v: (-colour[v], v))

    def rec(assigned, inv, rows):
        nonlocal best
        pos = len(inv)
        if pos == n:
            cand = tuple(e for row in rows for e in row)
            if best is None or cand < best:
                best = cand
            return
        tried = []
        for old in heur:
            if assigned[old] != -1:
                continue
            if any(twin[old][t] for t in tried):
                continue  # transposing two twins is an automorphism
            tried.append(old)
            added = 0
            for w in _bits(adj[old]):
                lw = assigned[w]
                if lw != -1:
                    rows[lw].append((lw, pos))
                    added |= 1 << lw
            assigned[old] = pos
            inv.append(old)
            ok = True
            if best is not None:
                # stable prefix: settled rows, then the first growable row
                unassigned = [v for v in range(n) if assigned[v] == -1]
                i = 0
                done = False
                for a in range(pos + 1):
                    grows = any(adj[inv[a]] & (1 << v) for v in unassigned)
                    for e in rows[a]:
                        if i >= len(best):
                            ok = False
                            done = True
                            break
                        if e != best[i]:
                            ok = e < best[i]
                            done = True
                            break
                        i += 1
                    if done or grows:
                        break
                # also: row 0 of the final list can only shrink relative to
                # best by an earlier first edge, handled by the compare above
            if ok:
                rec(assigned, inv, rows)
            inv.pop()
            assigned[old] = -1
            mm = added
            while mm:
                b = mm & -mm
                rows[b.bit_length() - 1].pop()
                mm &= mm - 1

    rec([-1] * n, [], [[] for _ in range(n)])
    return best if best is not None else tuple()


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask &= mask - 1


def canonical_graph(graph):
    """LabelledGraph rebuilt from its canonical form."""
    return LabelledGraph(graph.n, canonical_form(graph))


def henneberg_generate(n):
    """All minimally 2-rigid graphs on n vertices, up to isomorphism.

    Grown from K3 by degree-2 vertex additions and edge splits, deduplicated
    on canonical form.  Every output is verified minimally rigid.
    """
    if not (3 <= n <= 10):
        raise UnsupportedError("henneberg_generate supports 3 <= n <= 10")
    k3 = LabelledGraph(3, ((0, 1), (1, 2), (0, 2)))
    current = {canonical_form(k3)}
    for size in range(4, n + 1):
        nxt = set()
        for form in current:
            g = LabelledGraph(size - 1, form)
            adjsets = [set() for _ in range(size - 1)]
            for (u, v) in g.edges:
                adjsets[u].add(v)
                adjsets[v].add(u)
            w = size - 1  # the new vertex
            # type I: connect the new vertex to two distinct vertices
            for a in range(size - 1):
                for b in range(a + 1, size - 1):
                    h = LabelledGraph(size, form + ((a, w), (b, w)))
                    nxt.add(canonical_form(h))
            # type II: remove an edge (a,b), join the new vertex to a, b, c
            for (a, b) in g.edges:
                rest = tuple(e for e in form if e != (a, b) and e != (b, a))
                for c in range(size - 1):
                    if c in (a, b):
                        continue
                    h = LabelledGraph(size, rest + ((a, w), (b, w), (c, w)))
                    nxt.add(canonical_form(h))
        current = nxt
    out = []
    for form in sorted(current):
        g = LabelledGraph(n, form)
        if not is_minimally_rigid_2d(g):
            raise GraphError("generator produced a non-rigid graph (bug)")
        out.append(g)
    return out
