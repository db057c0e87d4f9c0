"""Finite-field point counting for the primes handled by this package.

This is the independent check for sum decomposition: a point over F_q
assigns a column (x_i, y_i) in F_q^2 to each vertex; it lies on V(q) iff
killed columns vanish and each block's columns have all 2x2 minors zero.
Decomposing a + b correctly means V(a) intersect V(b) equals the union of
the output varieties, with no output's points swallowed by the others.

Everything here works from generator semantics only; it never calls the
decomposition routines it is used to audit.  Arithmetic is exact integer
numpy, vectorized over all q^(2n) points.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np


@lru_cache(maxsize=8)
def _point_grid(q, n):
    """All q^(2n) points as integer arrays X, Y of shape (q^(2n), n)."""
    cols = np.array(list(product(range(q), repeat=2 * n)), dtype=np.int64)
    return cols[:, :n], cols[:, n:]


def variety_mask(prime, q):
    """Boolean mask over the F_q point grid selecting V(prime)."""
    x, y = _point_grid(q, prime.n)
    mask = np.ones(x.shape[0], dtype=bool)
    for v in prime.killed:
        i = v - 1
        mask &= (x[:, i] % q == 0) & (y[:, i] % q == 0)
    for block in prime.blocks:
        for u, v in combinations(sorted(block), 2):
            i, j = u - 1, v - 1
            minor = x[:, i] * y[:, j] - x[:, j] * y[:, i]
            mask &= minor % q == 0
    return mask


def check_sum_decomposition(a, b, outputs, q):
    """Pointwise validation over F_q.  Returns a list of failure strings.

    Checks V(a) & V(b) == union of V(out) and that every output keeps at
    least one point of its own (irredundance of the decomposition).
    """
    failures = []
    inter = variety_mask(a, q) & variety_mask(b, q)
    outs = [variety_mask(p, q) for p in outputs]
    union = np.zeros_like(inter)
    for m in outs:
        union |= m
    if not np.array_equal(inter, union):
        extra = int(np.count_nonzero(union & ~inter))
        missing = int(np.count_nonzero(inter & ~union))
        failures.append(
            f"F_{q}: union of outputs misses {missing} points, adds {extra}"
        )
    for p, m in zip(outputs, outs):
        others = np.zeros_like(m)
        for p2, m2 in zip(outputs, outs):
            if p2 != p:
                others |= m2
        if not np.any(m & ~others):
            failures.append(
                f"F_{q}: output {p.describe()} is covered by the other outputs"
            )
    return failures
