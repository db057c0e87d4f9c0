"""Assembly of the local cohomology decomposition and the derived homological
report: depth, dimension, Cohen-Macaulayness, Castelnuovo-Mumford regularity,
and (in prime characteristic) cohomological dimension and arithmetic-rank
bounds.

H^r of R modulo the edge ideal splits as a direct sum of H^{d_q} of R/q over
the poset primes q, with multiplicity the reduced cohomology of the open
interval (q, top) in degree r - d_q - 1.  Regularity falls out of the same
data as max over nonzero summands of reg(R/q) - d_q + r.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import ideals
from .ideals import PrimeIdeal, associated_primes, build_poset, dimension
from .topology import interval_profile, validate_char


class Summand(NamedTuple):
    prime: PrimeIdeal
    local_degree: int  # d_q = dim(R/q); the summand is H^{d_q}(R/q)
    multiplicity: int


@dataclass(frozen=True)
class LCDecomposition:
    """summands[r] lists the direct summands of H^r with positive multiplicity."""

    n: int
    char: int
    summands: dict

    def nonzero_degrees(self):
        return sorted(self.summands)

    def total_multiplicity(self):
        return sum(s.multiplicity for ss in self.summands.values() for s in ss)

    def __eq__(self, other):
        if not isinstance(other, LCDecomposition):
            return NotImplemented
        return (
            self.n == other.n
            and self.char == other.char
            and self.summands == other.summands
        )


@dataclass(frozen=True)
class HomologicalReport:
    depth: int
    dimension: int
    cohen_macaulay: bool
    regularity: int
    cd: int | None = None  # cohomological dimension, prime characteristic only
    ara_bounds: tuple | None = None  # (lower, upper) bounds on arithmetic rank


def poset_profiles(poset, char=0):
    """Reduced-cohomology profile of the open interval above each element."""
    return {q: interval_profile(poset, q, char) for q in poset.elements}


def decomposition_from_profiles(n, char, profiles):
    """Collect positive multiplicities M_{r,q} into an LCDecomposition."""
    validate_char(char)
    summands = {}
    for q, profile in profiles.items():
        d = dimension(q)
        for degree, mult in sorted(profile.dims.items()):
            r = d + 1 + degree
            if not 0 <= r <= 2 * n:
                raise AssertionError(f"summand degree {r} outside [0, {2*n}]")
            summands.setdefault(r, []).append(Summand(q, d, mult))
    out = {
        r: tuple(sorted(ss, key=lambda s: s.prime.sort_key()))
        for r, ss in sorted(summands.items())
    }
    return LCDecomposition(n, char, out)


def decompose(g, char=0, poset=None):
    """Local cohomology decomposition of R modulo the edge ideal of g."""
    if poset is None:
        poset = build_poset(associated_primes(g))
    return decomposition_from_profiles(g.n, char, poset_profiles(poset, char))


def report(dec, reg_of=ideals.regularity):
    """Depth, dimension, CM-ness, regularity, and char-p cd/ara bounds.

    Regularity uses the per-prime values supplied by reg_of through
    max{reg(R/q) - d_q + r : M_{r,q} != 0}.  The cohomological dimension
    2n - depth and the arithmetic-rank window [2n - depth, 2n] are only
    known in prime characteristic; char 0 leaves them unset.
    """
    degrees = dec.nonzero_degrees()
    if not degrees:
        raise ValueError("decomposition has no summands")
    depth = degrees[0]
    dim = degrees[-1]
    reg = max(
        reg_of(s.prime) - s.local_degree + r
        for r in degrees
        for s in dec.summands[r]
    )
    cd = ara = None
    if dec.char != 0:
        cd = 2 * dec.n - depth
        ara = (cd, 2 * dec.n)
    return HomologicalReport(
        depth=depth,
        dimension=dim,
        cohen_macaulay=depth == dim,
        regularity=reg,
        cd=cd,
        ara_bounds=ara,
    )
