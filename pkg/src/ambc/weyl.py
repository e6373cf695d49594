"""Dominant weights and the parabolic Weyl-group action on weights.

Rows of equal length form blocks.  After subtracting the symmetrized offset
constants ``s``, a weight is dominant when it increases weakly inside every
block, and two weights give the same partial permutation exactly when they
differ by a permutation inside blocks.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .errors import ShapeMismatch
from .forward import OmegaTriple, Tabloid
from .streams import offset_constants

ORBIT_ENUMERATION_LIMIT = 8


def blocks(shape: Sequence[int]) -> list[range]:
    """Maximal runs of equal row lengths, as index ranges."""
    out: list[range] = []
    start = 0
    for i in range(1, len(shape) + 1):
        if i == len(shape) or shape[i] != shape[start]:
            out.append(range(start, i))
            start = i
    return out


def _shifted(t: OmegaTriple) -> tuple[list[int], tuple[int, ...]]:
    _r, s = offset_constants(t.P, t.Q, t.n)
    return [x - y for x, y in zip(t.rho, s)], s


def is_dominant(t: OmegaTriple) -> bool:
    x, _s = _shifted(t)
    return all(x[i] <= x[i + 1] for b in blocks(t.shape) for i in b[:-1])


def dominant_representative(t: OmegaTriple) -> tuple[int, ...]:
    x, s = _shifted(t)
    y = list(x)
    for b in blocks(t.shape):
        y[b.start : b.stop] = sorted(x[b.start : b.stop])
    return tuple(a + c for a, c in zip(y, s))


def _same_orbit(x: Sequence[int], y: Sequence[int], bl: list[range]) -> bool:
    for b in bl:
        xs, ys = tuple(x[b.start : b.stop]), tuple(y[b.start : b.stop])
        if len(b) <= ORBIT_ENUMERATION_LIMIT:
            if ys not in set(permutations(xs)):
                return False
        elif sorted(xs) != sorted(ys):
            return False
    return True


def fiber_equivalent(P: Tabloid, Q: Tabloid, rho1: Sequence[int], rho2: Sequence[int], n: int | None = None) -> bool:
    """Do ``(P, Q, rho1)`` and ``(P, Q, rho2)`` lie in one orbit of the block permutation group?"""
    if [len(r) for r in P] != [len(r) for r in Q] or not (len(rho1) == len(rho2) == len(P)):
        raise ShapeMismatch("P, Q and both weights must describe the same shape")
    _r, s = offset_constants(P, Q, n)
    x = [a - c for a, c in zip(rho1, s)]
    y = [a - c for a, c in zip(rho2, s)]
    return _same_orbit(x, y, blocks([len(r) for r in P]))


__all__ = ["blocks", "dominant_representative", "fiber_equivalent", "is_dominant"]
