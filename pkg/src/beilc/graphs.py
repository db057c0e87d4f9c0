"""Finite simple graphs on vertices 1..n and the combinatorial primitives used
throughout: complements, girth, leaf-pruned cores, free edges, connected
components, and cut-set enumeration.

A *cut set* of G is a vertex subset S such that putting any single vertex of S
back reconnects components of G - S (the empty set always qualifies).  Cut
sets index the minimal primes of the binomial edge ideal, so everything
downstream starts here.
"""

from __future__ import annotations

import math
import os
from array import array
from collections import deque
from dataclasses import dataclass
from itertools import combinations

INFINITE_GIRTH = math.inf

DEFAULT_SUBSET_LIMIT = 22
SUBSET_LIMIT_ENV = "BEILC_MAX_SUBSET_N"


class ParseError(ValueError):
    """Malformed graph input; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SubsetBoundError(RuntimeError):
    """Raised when 2^n cut-set enumeration exceeds the configured bound."""


class AssumptionError(ValueError):
    """A girth/structure precondition failed; names the violated assumption."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are exactly 1..n, edges (i, j) with i<j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be >= 1")
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad edge {e} for n={self.n}")

    def adjacency(self):
        adj = self.__dict__.get("_adj")
        if adj is None:
            adj = {v: set() for v in range(1, self.n + 1)}
            for i, j in self.edges:
                adj[i].add(j)
                adj[j].add(i)
            object.__setattr__(self, "_adj", adj)
        return adj

    def neighbors(self, v):
        return self.adjacency()[v]

    def degree(self, v):
        return len(self.adjacency()[v])

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def vertices(self):
        return range(1, self.n + 1)

    def __repr__(self):
        es = ",".join(f"{i}-{j}" for i, j in sorted(self.edges))
        return f"Graph(n={self.n}, edges={{{es}}})"


@dataclass(frozen=True)
class CutSet:
    vertices: frozenset
    component_count: int


def graph(n, edges=()):
    """Build a Graph from any iterable of vertex pairs, normalizing order."""
    es = set()
    for e in edges:
        i, j = e
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        es.add((min(i, j), max(i, j)))
    return Graph(n, frozenset(es))


def path_graph(n):
    return graph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need >= 3 vertices")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n):
    return graph(n, combinations(range(1, n + 1), 2))


def empty_graph(n):
    return graph(n, ())


def star_graph(n):
    """Star with center 1 and leaves 2..n."""
    return graph(n, ((1, v) for v in range(2, n + 1)))


def disjoint_union(g, h):
    """Place h after g, shifting h's labels by g.n."""
    shifted = ((i + g.n, j + g.n) for i, j in h.edges)
    return graph(g.n + h.n, list(g.edges) + list(shifted))


# ---------------------------------------------------------------------------
# parsing


def parse_edge_list(text):
    lines = text.splitlines()
    n = None
    edges = set()
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if not header_seen:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected vertex count, got {line!r}", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", lineno)
            header_seen = True
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {line!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno)
        if i == j:
            raise ParseError(f"self-loop at vertex {i}", lineno)
        for v in (i, j):
            if not (1 <= v <= n):
                raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
        e = (min(i, j), max(i, j))
        if e in edges:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    if not header_seen:
        raise ParseError("empty input", 1)
    return Graph(n, frozenset(edges))


def parse_graph6(text):
    """Decode one graph in graph6 format (optionally prefixed '>>graph6<<')."""
    line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s:
            line = s
            break
    if line is None:
        raise ParseError("empty input", 1)
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in line]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("invalid graph6 character", lineno)
    if not data:
        raise ParseError("empty graph6 string", lineno)
    if data[0] < 63:
        n, idx = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        idx = 8
    else:
        raise ParseError("truncated graph6 size", lineno)
    if n < 1:
        raise ParseError(f"graph6 with {n} vertices unsupported", lineno)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - idx < need:
        raise ParseError("truncated graph6 bit vector", lineno)
    bits = []
    for b in data[idx:idx + need]:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    edges = set()
    pos = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[pos]:
                edges.add((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


def to_graph6(g):
    """Encode a graph (n <= 62) as a graph6 string; inverse of parse_graph6."""
    if g.n > 62:
        raise ValueError("graph6 encoder limited to n <= 62")
    bits = []
    for j in range(2, g.n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def detect_format(text):
    """Guess 'edge-list' vs 'graph6' from the first nonblank line."""
    for raw in text.splitlines():
        s = raw.strip()
        if not s:
            continue
        if s.startswith(">>graph6<<"):
            return "graph6"
        try:
            int(s.split()[0])
            return "edge-list"
        except ValueError:
            return "graph6"
    return "edge-list"


def parse_graph(text, fmt="edge-list"):
    if fmt in ("edge-list", "edgelist"):
        return parse_edge_list(text)
    if fmt in ("graph6", "g6"):
        return parse_graph6(text)
    if fmt == "auto":
        return parse_graph(text, detect_format(text))
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# basic graph operations


def complement(g):
    all_pairs = set(combinations(range(1, g.n + 1), 2))
    return Graph(g.n, frozenset(all_pairs - g.edges))


def girth(g):
    """Length of a shortest cycle, or INFINITE_GIRTH for forests.

    BFS from every root; a non-tree edge seen at (u, w) witnesses a cycle of
    length dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    adj = g.adjacency()
    best = INFINITE_GIRTH
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if dist[u] * 2 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def core_subgraph(g):
    """Induced subgraph H on the vertices of degree >= 2, with original labels.

    Returns (h, vh) where h keeps the ambient vertex range of g and vh is the
    set V(H).  Leaves and isolated vertices are pruned once, not iteratively.
    """
    adj = g.adjacency()
    vh = frozenset(v for v in g.vertices() if len(adj[v]) >= 2)
    h_edges = frozenset(e for e in g.edges if e[0] in vh and e[1] in vh)
    return Graph(g.n, h_edges), vh


def connected_components(g, removed=frozenset()):
    """Components of g - removed as frozensets, sorted by minimum vertex."""
    removed = frozenset(removed)
    adj = g.adjacency()
    seen = set(removed)
    comps = []
    for v in g.vertices():
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def free_edges(g):
    """Edges {v, w} whose connected component is exactly {v, w}."""
    out = set()
    for comp in connected_components(g):
        if len(comp) == 2:
            v, w = sorted(comp)
            if (v, w) in g.edges:
                out.add(frozenset(comp))
    return frozenset(out)


def subset_limit():
    raw = os.environ.get(SUBSET_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SUBSET_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SUBSET_LIMIT_ENV} must be an integer, got {raw!r}")


def _component_counts(g):
    """component count of g - S for every removed-set bitmask S (bit v-1 = v)."""
    n = g.n
    masks = [0] * n
    for i, j in g.edges:
        masks[i - 1] |= 1 << (j - 1)
        masks[j - 1] |= 1 << (i - 1)
    full = (1 << n) - 1
    counts = array("B", bytes(1 << n))
    for removed in range(1 << n):
        remaining = full & ~removed
        c = 0
        todo = remaining
        while todo:
            c += 1
            seed = todo & -todo
            comp = seed
            frontier = seed
            while frontier:
                v = frontier & -frontier
                frontier &= frontier - 1
                nbrs = masks[v.bit_length() - 1] & remaining & ~comp
                comp |= nbrs
                frontier |= nbrs
            todo &= ~comp
        counts[removed] = c
    return counts


def cut_sets(g, limit=None):
    """All cut sets of g with their component counts, by 2^n enumeration.

    S qualifies iff S is empty or re-adding any single v in S strictly drops
    the component count of g - S.  Raises SubsetBoundError past the limit
    (default 22, overridable via BEILC_MAX_SUBSET_N).
    """
    if limit is None:
        limit = subset_limit()
    if g.n > limit:
        raise SubsetBoundError(
            f"cut-set enumeration needs 2^{g.n} subsets; bound is n <= {limit} "
            f"(set {SUBSET_LIMIT_ENV} to override)"
        )
    counts = _component_counts(g)
    out = []
    for removed in range(1 << g.n):
        c = counts[removed]
        ok = True
        todo = removed
        while todo:
            bit = todo & -todo
            todo &= todo - 1
            if counts[removed & ~bit] >= c:
                ok = False
                break
        if ok:
            vs = frozenset(v + 1 for v in range(g.n) if removed >> v & 1)
            out.append(CutSet(vs, c))
    return sorted(out, key=lambda s: (len(s.vertices), sorted(s.vertices)))


def assumption_failures(g):
    """Violations of the standing hypotheses: girth >= 5, no universal vertex,
    at least one edge, and n >= 4.  Empty list means all hold."""
    problems = []
    gi = girth(g)
    if gi < 5:
        problems.append(f"girth {gi} < 5")
    if not g.edges:
        problems.append("graph has no edges")
    if g.n < 4:
        problems.append(f"n = {g.n} < 4")
    adj = g.adjacency()
    universal = [v for v in g.vertices() if len(adj[v]) == g.n - 1 and g.n > 1]
    if universal:
        problems.append(f"universal vertex {universal[0]}")
    return problems


def complement_cut_sets(g):
    """Cut sets of the complement of g, via the closed form for girth >= 5.

    For g satisfying the standing hypotheses these are: the empty set, the
    complement-neighborhoods V - N[v] for v in the core, and V - {v, w} for
    each free edge {v, w}.
    """
    problems = assumption_failures(g)
    if problems:
        raise AssumptionError("; ".join(problems))
    adj = g.adjacency()
    allv = frozenset(g.vertices())
    sets = {frozenset()}
    _, vh = core_subgraph(g)
    for v in sorted(vh):
        sets.add(allv - adj[v] - {v})
    for e in free_edges(g):
        sets.add(allv - e)
    cg = complement(g)
    out = [CutSet(s, len(connected_components(cg, s))) for s in sets]
    return sorted(out, key=lambda s: (len(s.vertices), sorted(s.vertices)))
