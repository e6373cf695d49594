"""Channels, channel numberings, distances between channels, and rivers.

A channel is the set of all translates of the balls in the rows of a longest
antichain of the Shi poset.  Its channel numbering is the largest numbering
obtained by walking northwest from a ball to the channel, one unit per step,
which is a longest-path problem on the finite graph of translate classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import AMBCError, NotEnoughChannels
from .numbering import Numbering, offset_matrix
from .perm import Cell, PartialAffinePermutation, normalize_cell
from .poset import longest_antichains, shi_poset, width


@dataclass(frozen=True, slots=True)
class Channel:
    n: int
    generator: tuple[Cell, ...]  # one ball per class, rows 1..n, in southeast order

    @property
    def rows(self) -> frozenset[int]:
        return frozenset(c.row for c in self.generator)

    @property
    def density(self) -> int:
        return len(self.generator)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        return normalize_cell(cell, self.n) in self.generator


def channel_from_rows(w: PartialAffinePermutation, rows) -> Channel:
    return Channel(w.n, tuple(Cell(i, w.window[i - 1]) for i in sorted(rows)))


@lru_cache(maxsize=65536)
def all_channels(w: PartialAffinePermutation) -> tuple[Channel, ...]:
    if w.is_empty:
        return ()
    return tuple(channel_from_rows(w, a) for a in longest_antichains(shi_poset(w)))


def is_southwest_of(w: PartialAffinePermutation, c1: Channel, c2: Channel) -> bool:
    """Every ball of ``c1`` has a ball of ``c2`` weakly northeast of it."""
    p = shi_poset(w)
    return all(any(p.leq(a, b) for b in c2.rows) for a in c1.rows)


def _extremal(w: PartialAffinePermutation, lowest: bool) -> Channel:
    p = shi_poset(w)
    union: set[int] = set().union(*longest_antichains(p))
    if lowest:
        keep = {a for a in union if not any(b != a and p.leq(b, a) for b in union)}
    else:
        keep = {a for a in union if not any(b != a and p.leq(a, b) for b in union)}
    ch = channel_from_rows(w, keep)
    if ch not in all_channels(w):
        raise AMBCError("extremal elements of the longest antichains do not form a channel")
    return ch


@lru_cache(maxsize=65536)
def southwest_channel(w: PartialAffinePermutation) -> Channel:
    return _extremal(w, lowest=True)


@lru_cache(maxsize=65536)
def northeast_channel(w: PartialAffinePermutation) -> Channel:
    return _extremal(w, lowest=False)


def _default_channel_values(c: Channel) -> dict[Cell, int]:
    return {cell: k for k, cell in enumerate(c.generator, start=1)}


@lru_cache(maxsize=65536)
def _channel_numbering_default(w: PartialAffinePermutation, c: Channel) -> Numbering:
    reps = tuple(w.representatives())
    m = c.density
    if m != width(shi_poset(w)):
        raise AMBCError("not a channel: density differs from the poset width")
    base = _default_channel_values(c)
    init = np.full(len(reps), _kernels.NEG, dtype=np.int64)
    fixed = np.zeros(len(reps), dtype=np.bool_)
    for k, cell in enumerate(reps):
        if cell in base:
            init[k] = base[cell]
            fixed[k] = True
    D = offset_matrix(reps, reps, w.n)
    d, ok = _kernels.longest_paths(D, m, init, fixed)
    if not ok or (d <= _kernels.NEG).any():
        raise AMBCError("channel numbering did not converge")
    return Numbering(w.n, m, reps, tuple(int(x) for x in d))


def channel_numbering(
    w: PartialAffinePermutation, c: Channel, anchor: tuple[tuple[int, int], int] | None = None
) -> Numbering:
    """Channel numbering of ``w`` relative to ``c``.

    Without an anchor, the balls of ``c`` in rows ``1..n`` receive ``1..m`` from
    north to south.  An anchor ``(ball, value)`` instead pins one ball of ``c``.
    """
    d = _channel_numbering_default(w, c)
    if anchor is None:
        return d
    cell, value = anchor
    if cell not in c:
        raise AMBCError(f"anchor {cell} is not a ball of the channel")
    return d.shifted(value - d(cell))


def distance(w: PartialAffinePermutation, c1: Channel, c2: Channel) -> int:
    d1 = channel_numbering(w, c1)
    d2 = channel_numbering(w, c2)
    shifts = {d1(b) - d2(b) for b in c1.generator}
    if len(shifts) != 1:
        raise AMBCError("channel numberings are not parallel on a channel")
    (s,) = shifts
    gaps = {d2(b) + s - d1(b) for b in c2.generator}
    if len(gaps) != 1:
        raise AMBCError("distance is not constant along the channel")
    (h,) = gaps
    if h < 0:
        raise AMBCError("negative channel distance")
    return h


def rivers(w: PartialAffinePermutation) -> list[list[Channel]]:
    chans = list(all_channels(w))
    parent = list(range(len(chans)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(chans)), 2):
        if find(i) != find(j) and distance(w, chans[i], chans[j]) == 0:
            parent[find(i)] = find(j)
    groups: dict[int, list[Channel]] = {}
    for i, c in enumerate(chans):
        groups.setdefault(find(i), []).append(c)
    return sorted(groups.values(), key=lambda g: tuple(sorted(g[0].rows)))


def max_disjoint_antichains(w: PartialAffinePermutation) -> list[frozenset[int]]:
    """A largest family of pairwise disjoint longest antichains (exhaustive search)."""
    anti = longest_antichains(shi_poset(w))
    best: list[frozenset[int]] = []

    def grow(start: int, chosen: list[frozenset[int]], used: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for k in range(start, len(anti)):
            if not (anti[k] & used):
                grow(k + 1, chosen + [anti[k]], used | anti[k])

    grow(0, [], frozenset())
    return best


def sorted_disjoint_channels(w: PartialAffinePermutation) -> list[Channel]:
    """A largest disjoint channel family, uncrossed so each is southwest of the next."""
    p = shi_poset(w)
    family = [set(a) for a in max_disjoint_antichains(w)]
    changed = True
    while changed:
        changed = False
        for i in range(len(family)):
            for j in range(i + 1, len(family)):
                union = family[i] | family[j]
                lo = {a for a in union if not any(b != a and p.leq(b, a) for b in union)}
                hi = {a for a in union if not any(b != a and p.leq(a, b) for b in union)}
                if lo & hi or len(lo) != len(hi) or len(lo) != len(family[i]):
                    raise AMBCError("uncrossing two disjoint longest antichains failed")
                if (lo, hi) != (family[i], family[j]):
                    family[i], family[j] = lo, hi
                    changed = True
    chans = [channel_from_rows(w, f) for f in family]
    for a, b in zip(chans, chans[1:]):
        if not is_southwest_of(w, a, b):
            raise AMBCError("uncrossing did not produce a southwest-ordered family")
    return chans


def interlacing_collections(w: PartialAffinePermutation, d: Numbering | None = None):
    """Interlacing channel families ``(C_1..C_k)`` of ``w`` and ``(D_1..D_{k-1})`` of its forward image.

    ``D_i`` is a channel of the forward image each of whose balls sits on its
    zig-zag strictly between the balls of ``C_i`` and ``C_{i+1}``.
    """
    from .forward import forward_step_traced

    Cs = sorted_disjoint_channels(w)
    if len(Cs) < 2:
        raise NotEnoughChannels("the Shi poset has fewer than two disjoint longest antichains")
    if d is None:
        d = channel_numbering(w, southwest_channel(w))
    nxt, _stream, trace = forward_step_traced(w, d)
    # position of every forward-image ball class inside its zig-zag, and of each C_i's ball
    where: dict[Cell, tuple[int, int]] = {}
    c_pos: list[dict[int, int]] = []
    for li, lev in enumerate(trace.levels):
        for j, v in enumerate(lev.outer):
            where[normalize_cell(v, w.n)] = (li, j)
        pos = {}
        for ci, C in enumerate(Cs):
            hits = [k for k, u in enumerate(lev.inner) if u in C]
            if len(hits) != 1:
                raise AMBCError("a channel meets a zig-zag more than once")
            pos[ci] = hits[0]
        c_pos.append(pos)
    Ds: list[Channel] = []
    cands = all_channels(nxt)
    for i in range(len(Cs) - 1):
        found = None
        for D in cands:
            ok = True
            for b in D.generator:
                li, j = where[b]
                if not (c_pos[li][i] <= j < c_pos[li][i + 1]):
                    ok = False
                    break
            if ok:
                found = D
                break
        if found is None:
            raise AMBCError(f"no channel of the forward image between C_{i + 1} and C_{i + 2}")
        Ds.append(found)
    return Cs, Ds


__all__ = [
    "Channel",
    "all_channels",
    "channel_from_rows",
    "channel_numbering",
    "distance",
    "interlacing_collections",
    "is_southwest_of",
    "max_disjoint_antichains",
    "northeast_channel",
    "rivers",
    "sorted_disjoint_channels",
    "southwest_channel",
]
