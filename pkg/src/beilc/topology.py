"""Order complexes of open poset intervals and exact reduced simplicial
cohomology over a field, computed from coboundary ranks.

Two degenerate complexes are kept distinct: the VOID complex (no faces at
all, every cohomology group zero) and the EMPTY complex (whose only face is
the empty face, with a one-dimensional group in degree -1).  The empty open
interval must yield the EMPTY complex so that each minimal prime contributes
one top summand.

Ranks are exact: fraction-free integer elimination in characteristic 0,
modular elimination in characteristic p.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ideals import contains, dimension


def validate_char(char):
    if char == 0:
        return
    if char < 2 or any(char % d == 0 for d in range(2, int(char**0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or prime, got {char}")


@dataclass(frozen=True)
class SubPoset:
    """A finite poset as (elements, strict-order pairs of indices)."""

    elements: tuple
    less_pairs: frozenset

    @classmethod
    def from_elements(cls, elements, less):
        """Build from hashable elements and a strict-order predicate."""
        els = tuple(elements)
        pairs = frozenset(
            (i, j)
            for i in range(len(els))
            for j in range(len(els))
            if i != j and less(els[i], els[j])
        )
        return cls(els, pairs)

    def __len__(self):
        return len(self.elements)


def open_interval(poset, q):
    """The open interval (q, top) of an IdealPoset as a SubPoset."""
    items = poset.upper_set(q)
    return SubPoset.from_elements(items, lambda a, b: contains(a, b) and a != b)


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex presented by its facets (maximal faces).

    facets == frozenset()            -> the VOID complex
    facets == frozenset({frozenset()}) -> the EMPTY complex
    """

    facets: frozenset

    @classmethod
    def of(cls, faces):
        """Normalize an iterable of faces by keeping only the maximal ones."""
        fs = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
        maximal = []
        for f in fs:
            if not any(f <= g for g in maximal):
                maximal.append(f)
        return cls(frozenset(maximal))

    @classmethod
    def void(cls):
        return cls(frozenset())

    @classmethod
    def empty(cls):
        return cls(frozenset({frozenset()}))

    @property
    def is_void(self):
        return not self.facets

    def vertices(self):
        out = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def has_cone_vertex(self):
        """True when some vertex lies in every facet (an apex)."""
        vs = self.vertices()
        if not vs:
            return False
        apex_candidates = set.intersection(*(set(f) for f in self.facets))
        return bool(apex_candidates)

    def _vertex_rank(self):
        """Deterministic total order on vertices (labels need not be sortable)."""
        rank = self.__dict__.get("_vrank")
        if rank is None:
            def key(v):
                if hasattr(v, "sort_key"):
                    return v.sort_key()
                try:
                    return (0, v) if isinstance(v, (int, float)) else (1, v)
                except TypeError:
                    return (2, repr(v))
            ordered = sorted(self.vertices(), key=lambda v: (str(type(v)), key(v)))
            rank = {v: i for i, v in enumerate(ordered)}
            object.__setattr__(self, "_vrank", rank)
        return rank

    def faces_by_dim(self):
        """All faces keyed by dimension; the empty face has dimension -1.

        Faces are tuples in the canonical vertex order (fixing simplex
        orientations); each dimension's list is sorted by that order.
        """
        if self.is_void:
            return {}
        rank = self._vertex_rank()
        faces = {()}
        for facet in self.facets:
            items = sorted(facet, key=rank.__getitem__)
            k = len(items)
            for mask in range(1, 1 << k):
                faces.add(tuple(items[i] for i in range(k) if mask >> i & 1))
        out = {}
        for f in faces:
            out.setdefault(len(f) - 1, []).append(f)
        for d in out:
            out[d].sort(key=lambda f: tuple(rank[v] for v in f))
        return out

    def reduced_euler(self):
        """Alternating face count including the empty face: sum (-1)^dim."""
        total = 0
        for d, faces in self.faces_by_dim().items():
            total += (-1) ** d * len(faces)
        return total


def order_complex(sub):
    """Complex whose facets are the maximal chains of the subposet.

    The empty poset yields the EMPTY complex, never the VOID one.
    """
    m = len(sub.elements)
    if m == 0:
        return SimplicialComplex.empty()
    up = [set() for _ in range(m)]
    indeg = [0] * m
    for i, j in sub.less_pairs:
        up[i].add(j)
        indeg[j] += 1
    covers = [
        {j for j in up[i] if not any(j in up[k] for k in up[i] if k != j)}
        for i in range(m)
    ]
    minimal = [i for i in range(m) if indeg[i] == 0]
    facets = []
    stack = [(i, (i,)) for i in minimal]
    while stack:
        i, chain = stack.pop()
        if not covers[i]:
            facets.append(frozenset(sub.elements[k] for k in chain))
            continue
        for j in covers[i]:
            stack.append((j, chain + (j,)))
    return SimplicialComplex(frozenset(facets))


# ---------------------------------------------------------------------------
# exact rank computation


def _rank_rows_int(rows):
    """Rank over the rationals by fraction-free integer elimination.

    Rows are dicts col -> nonzero int.  Each new row is reduced against the
    pivot rows (cross-multiplied, gcd-normalized), so all arithmetic stays in
    the integers.
    """
    pivots = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while True:
            cols = sorted(set(r) & set(pivots))
            if not cols:
                break
            c = cols[0]
            prow, pc = pivots[c]
            rc = r[c]
            new = {}
            for k, v in r.items():
                new[k] = v * pc
            for k, v in prow.items():
                new[k] = new.get(k, 0) - v * rc
            r = {k: v for k, v in new.items() if v}
            if r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
        if r:
            c = min(r, key=lambda k: (abs(r[k]), k))
            pivots[c] = (r, r[c])
            rank += 1
    return rank


def _rank_rows_mod(rows, p):
    pivots = {}
    rank = 0
    for row in rows:
        r = {k: v % p for k, v in row.items() if v % p}
        while True:
            cols = sorted(set(r) & set(pivots))
            if not cols:
                break
            c = cols[0]
            prow = pivots[c]
            factor = r[c]  # pivot rows are normalized to coefficient 1
            for k, v in prow.items():
                nv = (r.get(k, 0) - factor * v) % p
                if nv:
                    r[k] = nv
                elif k in r:
                    del r[k]
        if r:
            c = min(r)
            inv = pow(r[c], p - 2, p)
            pivots[c] = {k: (v * inv) % p for k, v in r.items()}
            rank += 1
    return rank


def _coboundary_rows(lower_faces, upper_faces):
    """One sparse row per (d+1)-face over the d-face basis, entries +-1."""
    index = {f: i for i, f in enumerate(lower_faces)}
    rows = []
    for g in upper_faces:
        row = {}
        for pos in range(len(g)):
            f = g[:pos] + g[pos + 1 :]
            row[index[f]] = (-1) ** pos
        rows.append(row)
    return rows


@dataclass
class CohomologyProfile:
    """Nonzero reduced cohomology dimensions by degree, over one field."""

    char: int
    dims: dict

    def dim(self, degree):
        return self.dims.get(degree, 0)

    @property
    def is_zero(self):
        return not self.dims

    def alternating_sum(self):
        return sum((-1) ** d * v for d, v in self.dims.items())


def reduced_cohomology(complex_, char=0):
    """Reduced cohomology dimensions of a complex over Q (char 0) or F_p.

    dim H^i = f_i - rank(d^i) - rank(d^{i-1}) with d^i the coboundary from
    i-faces to (i+1)-faces; the empty face gives f_{-1} = 1 for any non-void
    complex.  Complexes with a cone vertex are contractible, so their ranks
    are skipped.  The profile always satisfies the Euler identity against the
    face counts.
    """
    validate_char(char)
    faces = complex_.faces_by_dim()
    if not faces:
        return CohomologyProfile(char, {})
    if complex_.has_cone_vertex():
        profile = CohomologyProfile(char, {})
    else:
        degrees = sorted(faces)
        top = max(degrees)
        ranks = {}
        for d in degrees:
            if d + 1 in faces:
                rows = _coboundary_rows(faces[d], faces[d + 1])
                ranks[d] = (
                    _rank_rows_int(rows) if char == 0 else _rank_rows_mod(rows, char)
                )
            else:
                ranks[d] = 0
        dims = {}
        for d in degrees:
            h = len(faces[d]) - ranks[d] - ranks.get(d - 1, 0)
            if h:
                dims[d] = h
        profile = CohomologyProfile(char, dims)
    euler = sum((-1) ** d * len(fs) for d, fs in faces.items())
    if profile.alternating_sum() != euler:
        raise AssertionError(
            f"Euler check failed: cohomology {profile.dims} vs face counts"
        )
    return profile


def interval_profile(poset, q, char=0):
    """Reduced cohomology of the order complex of the open interval (q, top)."""
    return reduced_cohomology(order_complex(open_interval(poset, q)), char)


def multiplicity(poset, q, r, char=0):
    """Graded multiplicity of the degree-dim(R/q) summand inside H^r: the
    dimension of reduced cohomology of (q, top) in degree r - dim(R/q) - 1."""
    return interval_profile(poset, q, char).dim(r - dimension(q) - 1)
