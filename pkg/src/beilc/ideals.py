"""Combinatorial arithmetic of the primes attached to binomial edge ideals.

Every prime handled here has the shape

    (x_i, y_i : i in killed)  +  sum over blocks B of J(K_B)

where J(K_B) is generated by the 2x2 minors delta_{u,v} = x_u y_v - x_v y_u
for u, v in B.  Geometrically, a point assigns a column (x_i, y_i) to each
vertex; killed vertices carry the zero column and each block's columns must
lie on one line through the origin.  All ideal operations (containment, sums,
minimal primes of sums) reduce to set combinatorics on (killed, blocks), so
no polynomials are ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import cut_sets, connected_components


class PosetExplosionError(RuntimeError):
    """Poset closure exceeded the configured element cap."""


@dataclass(frozen=True)
class PrimeIdeal:
    """Canonical form: killed a frozenset, blocks a tuple of frozensets of
    size >= 2, pairwise disjoint, disjoint from killed, sorted by minimum."""

    n: int
    killed: frozenset
    blocks: tuple

    @classmethod
    def of(cls, n, killed, blocks=()):
        """Normalize and validate; blocks of size <= 1 are dropped (they
        contribute the zero ideal)."""
        killed = frozenset(killed)
        bs = sorted((frozenset(b) for b in blocks if len(frozenset(b)) >= 2), key=min)
        seen = set(killed)
        for b in bs:
            if b & seen:
                raise ValueError("blocks must be pairwise disjoint and avoid killed")
            seen |= b
        if any(not (1 <= v <= n) for v in seen):
            raise ValueError(f"vertex out of range 1..{n}")
        return cls(n, killed, tuple(bs))

    @property
    def free(self):
        used = set(self.killed)
        for b in self.blocks:
            used |= b
        return frozenset(range(1, self.n + 1)) - frozenset(used)

    @property
    def is_maximal_ideal(self):
        return len(self.killed) == self.n

    def sort_key(self):
        return (
            tuple(sorted(self.killed)),
            tuple(tuple(sorted(b)) for b in self.blocks),
        )

    def describe(self):
        """Compact ASCII form, e.g. 'Z(2,4)+K(1,3,5)' or '(0)'."""
        parts = []
        if self.killed:
            parts.append("Z(" + ",".join(map(str, sorted(self.killed))) + ")")
        for b in self.blocks:
            parts.append("K(" + ",".join(map(str, sorted(b))) + ")")
        return "+".join(parts) if parts else "(0)"

    def __repr__(self):
        return f"PrimeIdeal[n={self.n}: {self.describe()}]"


def maximal_ideal(n):
    return PrimeIdeal.of(n, range(1, n + 1))


def dimension(q):
    """dim(R/q): each block B contributes |B|+1, each free vertex 2."""
    d = sum(len(b) + 1 for b in q.blocks)
    return d + 2 * len(q.free)


def regularity(q):
    """reg(R/q): one per block; killed and free variables contribute nothing."""
    return len(q.blocks)


def contains(a, b):
    """Ideal containment a >= b, checked generator by generator.

    x_i, y_i of b must be killed in a; a minor delta_{u,v} of b lies in a iff
    u or v is killed in a or {u, v} sits inside a single block of a.  Since
    a's blocks are disjoint, a whole surviving piece of a b-block must land in
    one a-block.
    """
    if a.n != b.n:
        raise ValueError("ambient vertex counts differ")
    if not b.killed <= a.killed:
        return False
    for block in b.blocks:
        rest = block - a.killed
        if len(rest) <= 1:
            continue
        if not any(rest <= ab for ab in a.blocks):
            return False
    return True


def _normalize_blocks(killed, blocks):
    """Restrict to survivors, drop size <= 1, and drop blocks inside others."""
    bs = []
    for b in blocks:
        b2 = b - killed
        if len(b2) >= 2:
            bs.append(b2)
    bs = sorted(set(bs), key=lambda b: (-len(b), min(b)))
    out = []
    for b in bs:
        if not any(b <= other for other in out):
            out.append(b)
    return tuple(sorted(out, key=min))


def sum_decompose(a, b):
    """Minimal primes of a + b.

    After merging killed sets and restricting blocks, two overlapping blocks
    B1, B2 split the variety in two: either some column in B1 & B2 is nonzero
    and all of B1 | B2 shares one line (merge), or every column of B1 & B2 is
    zero (kill the intersection).  Recurse until blocks are disjoint, then
    discard candidates containing another candidate.
    """
    if a.n != b.n:
        raise ValueError("ambient vertex counts differ")
    if contains(a, b):
        return frozenset({a})
    if contains(b, a):
        return frozenset({b})
    candidates = set()
    seen = set()
    stack = [(a.killed | b.killed, a.blocks + b.blocks)]
    while stack:
        killed, blocks = stack.pop()
        bs = _normalize_blocks(killed, blocks)
        key = (killed, bs)
        if key in seen:
            continue
        seen.add(key)
        overlap = None
        for i in range(len(bs)):
            for j in range(i + 1, len(bs)):
                inter = bs[i] & bs[j]
                if inter:
                    overlap = (bs[i], bs[j], inter)
                    break
            if overlap:
                break
        if overlap is None:
            candidates.add(PrimeIdeal.of(a.n, killed, bs))
            continue
        b1, b2, inter = overlap
        merged = tuple(x for x in bs if x != b1 and x != b2) + (b1 | b2,)
        stack.append((killed, merged))
        stack.append((killed | inter, bs))
    return frozenset(
        p
        for p in candidates
        if not any(q != p and contains(p, q) for q in candidates)
    )


def prime_from_cut_set(g, s):
    """P_S(G): kill S, one block per connected component of G - S of size >= 2."""
    vertices = s.vertices if hasattr(s, "vertices") else frozenset(s)
    comps = connected_components(g, vertices)
    return PrimeIdeal.of(g.n, vertices, comps)


def associated_primes(g):
    """Minimal primes of the binomial edge ideal of g, one per cut set."""
    primes = frozenset(prime_from_cut_set(g, s) for s in cut_sets(g))
    for p in primes:
        for q in primes:
            if p != q and contains(p, q):
                raise AssertionError(f"redundant associated prime: {p} >= {q}")
    return primes


@dataclass(frozen=True)
class IdealPoset:
    """Primes ordered by reverse inclusion (bigger ideal = lower), plus an
    implicit top element above everything.  The covers of the top are exactly
    the minimal primes."""

    elements: tuple

    @classmethod
    def of(cls, elements):
        return cls(tuple(sorted(set(elements), key=PrimeIdeal.sort_key)))

    def __contains__(self, q):
        return q in self._index()

    def __len__(self):
        return len(self.elements)

    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {q: i for i, q in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def _strictly_above(self):
        """above[i] = indices j with element_i < element_j (i.e. e_i >= e_j
        as ideals, e_i != e_j)."""
        above = self.__dict__.get("_above")
        if above is None:
            els = self.elements
            above = [
                frozenset(
                    j
                    for j, q in enumerate(els)
                    if i != j and contains(els[i], q)
                )
                for i in range(len(els))
            ]
            object.__setattr__(self, "_above", above)
        return above

    def less(self, a, b):
        """Strict poset order: a < b iff ideal(a) strictly contains ideal(b)."""
        idx = self._index()
        return idx[b] in self._strictly_above()[idx[a]]

    def upper_set(self, q):
        """The open interval (q, top): all elements strictly above q."""
        idx = self._index()
        if q not in idx:
            raise KeyError(f"{q} not in poset")
        els = self.elements
        return tuple(els[j] for j in sorted(self._strictly_above()[idx[q]]))

    def minimal_primes(self):
        """Covers of the top: elements with nothing strictly above them."""
        above = self._strictly_above()
        return tuple(
            q for i, q in enumerate(self.elements) if not above[i]
        )

    def cover_relations(self):
        """Hasse cover pairs (lower, upper); upper may be the string 'TOP'."""
        els = self.elements
        above = self._strictly_above()
        covers = []
        for i, q in enumerate(els):
            ups = above[i]
            for j in sorted(ups):
                if not any(j in above[k] for k in ups if k != j):
                    covers.append((q, els[j]))
            if not ups:
                covers.append((q, "TOP"))
        return covers


def build_poset(minimal_primes, cap=100_000):
    """Smallest set of primes containing the inputs and closed under taking
    minimal primes of pairwise sums, as an IdealPoset."""
    elements = set(minimal_primes)
    if not elements:
        raise ValueError("need at least one prime")
    frontier = list(elements)
    done_pairs = set()
    while frontier:
        new = set()
        for x in frontier:
            for y in list(elements):
                if x == y:
                    continue
                pair = frozenset((x, y))
                if pair in done_pairs:
                    continue
                done_pairs.add(pair)
                for p in sum_decompose(x, y):
                    if p not in elements:
                        new.add(p)
        elements |= new
        if len(elements) > cap:
            raise PosetExplosionError(
                f"poset closure exceeded {cap} elements"
            )
        frontier = list(new)
    return IdealPoset.of(elements)
