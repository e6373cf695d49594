"""The Shi poset of a partial permutation and its antichain statistics.

Element ``i`` (a defined row in ``1..n``) lies below ``j`` when some translate
of the ball in row ``i`` is strictly southwest of the ball in row ``j``.
Antichains are therefore sets of ball classes that can be threaded by one
southeast chain, which is how channels are found.

All statistics come from one table: the length of the longest chain inside
every subset of elements (computed by peeling minimal elements).  That is an
exhaustive method, intended for ``n`` up to about a dozen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import EmptyPoset
from .perm import PartialAffinePermutation, residue

MAX_ELEMENTS = 20


@dataclass(frozen=True)
class ShiPoset:
    n: int
    elements: tuple[int, ...]
    relations: frozenset[tuple[int, int]]  # strict pairs (i, j) with i < j in the poset
    labels: tuple[int, ...]  # residue of w(i) for each element, aligned with ``elements``
    heights: np.ndarray = field(repr=False, compare=False, hash=False)

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.relations

    def mask_of(self, subset) -> int:
        idx = {e: k for k, e in enumerate(self.elements)}
        m = 0
        for e in subset:
            m |= 1 << idx[e]
        return m

    def subset_of(self, mask: int) -> frozenset[int]:
        return frozenset(e for k, e in enumerate(self.elements) if (mask >> k) & 1)

    def is_antichain(self, subset) -> bool:
        return int(self.heights[self.mask_of(subset)]) <= 1


def _shi_less(w: PartialAffinePermutation, i: int, j: int) -> bool:
    wi, wj = w.window[i - 1], w.window[j - 1]
    return (i > j and wi < wj) or wj > wi + w.n


@lru_cache(maxsize=65536)
def shi_poset(w: PartialAffinePermutation) -> ShiPoset:
    elements = tuple(w.defined_rows())
    N = len(elements)
    if N > MAX_ELEMENTS:
        raise ValueError(f"exhaustive poset statistics support at most {MAX_ELEMENTS} elements")
    less = [[_shi_less(w, i, j) for j in elements] for i in elements]
    for k in range(N):  # transitive closure; the relation is already closed, this is a guard
        for a in range(N):
            if less[a][k]:
                for b in range(N):
                    if less[k][b]:
                        less[a][b] = True
    relations = frozenset((elements[a], elements[b]) for a in range(N) for b in range(N) if less[a][b])
    below = np.zeros(max(N, 1), dtype=np.int64)
    for b in range(N):
        for a in range(N):
            if less[a][b]:
                below[b] |= 1 << a
    heights = _kernels.subset_heights(below[:N] if N else below[:0], N)
    labels = tuple(residue(w.window[i - 1], w.n) for i in elements)
    return ShiPoset(w.n, elements, relations, labels, heights)


def _popcounts(N: int) -> np.ndarray:
    masks = np.arange(1 << N, dtype=np.int64)
    pc = np.zeros(1 << N, dtype=np.int64)
    for k in range(N):
        pc += (masks >> k) & 1
    return pc


def width(p: ShiPoset) -> int:
    if not p.elements:
        raise EmptyPoset("the poset has no elements")
    pc = _popcounts(len(p.elements))
    return int(pc[p.heights <= 1].max())


def greene_kleitman(p: ShiPoset) -> tuple[int, ...]:
    """``(l_1, l_2, ...)`` with ``l_1 + ... + l_k`` the largest union of ``k`` antichains."""
    N = len(p.elements)
    if N == 0:
        return ()
    pc = _popcounts(N)
    out: list[int] = []
    prev = 0
    k = 0
    while prev < N:
        k += 1
        a_k = int(pc[p.heights <= k].max())
        out.append(a_k - prev)
        prev = a_k
    return tuple(out)


def longest_antichains(p: ShiPoset) -> list[frozenset[int]]:
    """All antichains of maximum size, ordered by their sorted element tuples."""
    N = len(p.elements)
    if N == 0:
        return []
    pc = _popcounts(N)
    m = width(p)
    masks = np.nonzero((p.heights <= 1) & (pc == m))[0]
    found = [p.subset_of(int(mask)) for mask in masks]
    return sorted(found, key=lambda s: tuple(sorted(s)))


__all__ = ["ShiPoset", "greene_kleitman", "longest_antichains", "shi_poset", "width"]
