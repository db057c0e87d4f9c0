"""Corpus generation and the verification sweep.

Exhaustive mode enumerates all graphs with girth >= 5 on n vertices up to
isomorphism (adding an edge is only allowed between vertices at distance at
least 4, which keeps every 3- and 4-cycle out; the family is closed under
edge deletion, so plain subset backtracking hits every labeled graph once)
and deduplicates via a canonical labeling.  Random mode draws seeded graphs
by greedy edge insertion.  The sweep runs the closed-form/generic comparison
over the corpus and aggregates per-graph records (depth, dimension,
regularity, structure flags) for downstream invariant checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import graph, to_graph6
from .girth5 import GENERAL, classify, equivalence_audit


def _dist_at_least(adj, start, goal, bound):
    """True when d(start, goal) >= bound, by BFS truncated at bound - 1."""
    if start == goal:
        return bound <= 0
    frontier = {start}
    seen = {start}
    for _ in range(bound - 1):
        nxt = set()
        for u in frontier:
            for w in adj[u]:
                if w == goal:
                    return False
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
        if not frontier:
            return True
    return True


def _wl_classes(n, adj):
    """Vertex classes under iterated neighborhood color refinement, returned
    in an isomorphism-invariant order."""
    colors = {v: len(adj[v]) for v in range(1, n + 1)}
    signature = {v: (colors[v],) for v in range(1, n + 1)}
    for _ in range(n):
        sigs = {
            v: (signature[v], tuple(sorted(signature[w] for w in adj[v])))
            for v in range(1, n + 1)
        }
        order = sorted(set(sigs.values()))
        new = {v: order.index(sigs[v]) for v in range(1, n + 1)}
        if len(set(new.values())) == len(set(colors.values())):
            colors = new
            signature = {v: (new[v],) for v in range(1, n + 1)}
            break
        colors = new
        signature = sigs
    classes = {}
    for v in range(1, n + 1):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_key(g):
    """Isomorphism-invariant key: minimum edge bitmask over all relabelings
    consistent with the refinement classes."""
    adj = g.adjacency()
    classes = _wl_classes(g.n, adj)
    pair_index = {}
    for idx, (i, j) in enumerate(combinations(range(1, g.n + 1), 2)):
        pair_index[(i, j)] = idx
        pair_index[(j, i)] = idx
    best = None
    slots = []
    pos = 1
    for cls in classes:
        slots.append((cls, list(range(pos, pos + len(cls)))))
        pos += len(cls)
    for assignment in product(*(permutations(cls) for cls, _ in slots)):
        relabel = {}
        for (cls, positions), perm in zip(slots, assignment):
            for p, v in zip(positions, perm):
                relabel[v] = p
        mask = 0
        for i, j in g.edges:
            mask |= 1 << pair_index[(relabel[i], relabel[j])]
        if best is None or mask < best:
            best = mask
    return (g.n, best)


def girth5_labeled(n):
    """Every labeled graph on n vertices with girth >= 5, each exactly once."""
    candidates = list(combinations(range(1, n + 1), 2))
    adj = {v: set() for v in range(1, n + 1)}
    chosen = []

    def extend(start):
        yield graph(n, list(chosen))
        for k in range(start, len(candidates)):
            u, v = candidates[k]
            if _dist_at_least(adj, u, v, 4):
                adj[u].add(v)
                adj[v].add(u)
                chosen.append((u, v))
                yield from extend(k + 1)
                chosen.pop()
                adj[u].remove(v)
                adj[v].remove(u)

    yield from extend(0)


def meets_assumptions(g):
    from .graphs import assumption_failures

    return not assumption_failures(g)


@lru_cache(maxsize=32)
def _girth5_classes_cached(n, require_assumptions):
    seen = set()
    out = []
    for g in girth5_labeled(n):
        if require_assumptions and not meets_assumptions(g):
            continue
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return tuple(out)


def girth5_classes(n, require_assumptions=True):
    """Isomorphism-class representatives of girth >= 5 graphs on n vertices."""
    return list(_girth5_classes_cached(n, require_assumptions))


def random_girth5(n, rng, require_assumptions=True, max_tries=1000):
    """A seeded random graph with girth >= 5 (greedy insertion in a random
    edge order up to a random target count)."""
    candidates = list(combinations(range(1, n + 1), 2))
    for _ in range(max_tries):
        rng.shuffle(candidates)
        target = rng.randint(1, len(candidates))
        adj = {v: set() for v in range(1, n + 1)}
        edges = []
        for u, v in candidates:
            if len(edges) >= target:
                break
            if _dist_at_least(adj, u, v, 4):
                adj[u].add(v)
                adj[v].add(u)
                edges.append((u, v))
        g = graph(n, edges)
        if not require_assumptions or meets_assumptions(g):
            return g
    raise RuntimeError(f"could not sample a graph on {n} vertices")


# ---------------------------------------------------------------------------
# the sweep


@dataclass(frozen=True)
class SweepRecord:
    n: int
    graph6: str
    match: bool
    poset_match: bool
    decomposition_match: bool
    report_match: bool
    vanishing_match: bool
    depth: int
    dimension: int
    cohen_macaulay: bool
    regularity: int
    free_edge_count: int
    core_edge_count: int
    has_m: bool
    e_tags: tuple
    details: tuple


@dataclass
class SweepResult:
    chars: tuple
    records: list
    checked_by_n: dict

    @property
    def failures(self):
        return [r for r in self.records if not r.match]

    @property
    def total(self):
        return len(self.records)


def sweep(
    nmin=4,
    nmax=7,
    mode="exhaustive",
    count=None,
    seed=None,
    chars=(0, 2),
    progress=None,
):
    """Verify the closed forms against the generic engine over a corpus.

    mode 'exhaustive': all isomorphism classes for each n in [nmin, nmax].
    mode 'random': `count` seeded samples per n (duplicates possible).
    """
    records = []
    checked = {}
    for n in range(nmin, nmax + 1):
        if mode == "exhaustive":
            graphs = girth5_classes(n)
        elif mode == "random":
            rng = random.Random(f"{seed}:{n}")
            graphs = [random_girth5(n, rng) for _ in range(count)]
        else:
            raise ValueError(f"unknown sweep mode {mode!r}")
        checked[n] = len(graphs)
        for g in graphs:
            c = classify(g)
            if c.classification != GENERAL:
                continue
            audit = equivalence_audit(c, chars=chars)
            grep = audit.generic_reports[chars[0]]
            details = tuple(
                f"char {v.char}: {line}" for v in audit.verdicts for line in v.details
            )
            records.append(
                SweepRecord(
                    n=n,
                    graph6=to_graph6(g),
                    match=audit.match,
                    poset_match=all(v.poset_match for v in audit.verdicts),
                    decomposition_match=all(
                        v.decomposition_match for v in audit.verdicts
                    ),
                    report_match=all(v.report_match for v in audit.verdicts),
                    vanishing_match=all(v.vanishing_match for v in audit.verdicts),
                    depth=grep.depth,
                    dimension=grep.dimension,
                    cohen_macaulay=grep.cohen_macaulay,
                    regularity=grep.regularity,
                    free_edge_count=audit.free_edge_count,
                    core_edge_count=audit.core_edge_count,
                    has_m=audit.has_m,
                    e_tags=audit.e_tags,
                    details=details,
                )
            )
            if progress is not None:
                progress(records[-1])
    return SweepResult(chars=tuple(chars), records=records, checked_by_n=checked)
