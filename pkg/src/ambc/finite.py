"""Finite matrix-ball construction, its inverse, and Schensted row insertion.

Cells are ``(row, col)`` with rows growing southward and columns eastward.
A finite partial permutation (a *pnap*) is a tuple whose ``i``-th entry
(1-based) is the column of the ball in row ``i`` or ``None``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .errors import AMBCError, Incompatible
from .perm import Cell

Pnap = tuple[int | None, ...]
Tableau = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# zig-zags
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ZigZag:
    """A reverse zig-zag: unit steps north or east, first step east, last step north."""

    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        cs = self.cells
        if not cs:
            raise AMBCError("a zig-zag is non-empty")
        for a, b in zip(cs, cs[1:]):
            north = b.col == a.col and b.row == a.row - 1
            east = b.row == a.row and b.col == a.col + 1
            if not (north or east):
                raise AMBCError(f"{b} is not adjacent north or east of {a}")
        if len(cs) >= 2:
            if cs[1].row != cs[0].row:
                raise AMBCError("a zig-zag starts with a step east")
            if cs[-1].col != cs[-2].col:
                raise AMBCError("a zig-zag ends with a step north")

    @classmethod
    def through(cls, inner: Sequence[tuple[int, int]]) -> "ZigZag":
        """The unique zig-zag whose inner corner-posts are ``inner`` (an NW-antichain)."""
        us = sort_sw_to_ne(inner)
        cells: list[Cell] = [us[0]]
        for a, b in zip(us, us[1:]):
            for c in range(a.col + 1, b.col + 1):
                cells.append(Cell(a.row, c))
            for r in range(a.row - 1, b.row - 1, -1):
                cells.append(Cell(r, b.col))
        return cls(tuple(cells))


def sort_sw_to_ne(cells: Sequence[tuple[int, int]]) -> list[Cell]:
    """Sort an NW-antichain from its southwest end to its northeast end."""
    out = sorted((Cell(*c) for c in cells), key=lambda c: (-c.row, c.col))
    for a, b in zip(out, out[1:]):
        if not (a.row > b.row and a.col < b.col):
            raise AMBCError(f"cells {a} and {b} are not strictly SW/NE of one another")
    return out


def zigzag_corner_posts(z: ZigZag) -> tuple[Cell, set[Cell], set[Cell]]:
    """Return ``(back, inner, outer)`` corner-posts of a reverse zig-zag."""
    cs = set(z.cells)
    back = Cell(z.cells[-1].row, z.cells[0].col)
    inner = {c for c in z.cells if Cell(c.row - 1, c.col) not in cs and Cell(c.row, c.col - 1) not in cs}
    if len(z.cells) == 1:
        return back, inner, set()
    outer = {c for c in z.cells if Cell(c.row + 1, c.col) not in cs and Cell(c.row, c.col + 1) not in cs}
    return back, inner, outer


def forward_corners(inner: Sequence[tuple[int, int]]) -> tuple[Cell, list[Cell]]:
    """Back corner-post and outer corner-posts of the zig-zag through ``inner``."""
    us = sort_sw_to_ne(inner)
    outer = [Cell(a.row, b.col) for a, b in zip(us, us[1:])]
    return Cell(us[-1].row, us[0].col), outer


def backward_corners(back: tuple[int, int], outer: Sequence[tuple[int, int]]) -> list[Cell]:
    """Inner corner-posts of the zig-zag with the given back and outer corner-posts.

    Raises :class:`Incompatible` unless ``back`` is strictly northwest of every
    outer corner-post.
    """
    R, C = back
    if not outer:
        return [Cell(R, C)]
    vs = sort_sw_to_ne(outer)
    for v in vs:
        if not (R < v.row and C < v.col):
            raise Incompatible(f"back corner-post {tuple(back)} is not strictly northwest of {v}")
    inner = [Cell(vs[0].row, C)]
    inner += [Cell(b.row, a.col) for a, b in zip(vs, vs[1:])]
    inner.append(Cell(R, vs[-1].col))
    return inner


# ---------------------------------------------------------------------------
# MBC
# ---------------------------------------------------------------------------


def _balls(p: Pnap) -> list[Cell]:
    return [Cell(i, c) for i, c in enumerate(p, start=1) if c is not None]


def _check_pnap(p: Sequence[int | None]) -> Pnap:
    p = tuple(p)
    vals = [c for c in p if c is not None]
    if len(set(vals)) != len(vals):
        raise AMBCError("pnap entries must be distinct")
    return p


def _from_balls(length: int, balls: Sequence[Cell]) -> Pnap:
    out: list[int | None] = [None] * length
    for b in balls:
        if not 1 <= b.row <= length or out[b.row - 1] is not None:
            raise AMBCError(f"ball {b} does not fit a pnap of length {length}")
        out[b.row - 1] = b.col
    return _check_pnap(out)


def mbc_numbering(p: Pnap) -> dict[Cell, int]:
    """``d(b) = 1 + max d`` over balls strictly northwest of ``b`` (empty max is 0)."""
    d: dict[Cell, int] = {}
    for b in sorted(_balls(p)):
        d[b] = 1 + max((v for a, v in d.items() if a.row < b.row and a.col < b.col), default=0)
    return d


def mbc_step(p: Sequence[int | None]) -> tuple[Pnap, tuple[int, ...], tuple[int, ...]]:
    p = _check_pnap(p)
    d = mbc_numbering(p)
    if not d:
        raise AMBCError("mbc_step needs a non-empty pnap")
    levels: dict[int, list[Cell]] = {}
    for b, v in d.items():
        levels.setdefault(v, []).append(b)
    new_balls: list[Cell] = []
    p_row, q_row = [], []
    for i in sorted(levels):
        back, outer = forward_corners(levels[i])
        new_balls += outer
        p_row.append(back.col)
        q_row.append(back.row)
    return _from_balls(len(p), new_balls), tuple(sorted(p_row)), tuple(sorted(q_row))


def mbc(p: Sequence[int | None]) -> tuple[Tableau, Tableau]:
    p = _check_pnap(p)
    P: list[tuple[int, ...]] = []
    Q: list[tuple[int, ...]] = []
    while any(c is not None for c in p):
        p, pr, qr = mbc_step(p)
        P.append(pr)
        Q.append(qr)
    return tuple(P), tuple(Q)


def mbc_inverse_numbering(p: Pnap, p_row: Sequence[int], q_row: Sequence[int]) -> dict[Cell, int]:
    cells = [Cell(q, c) for q, c in zip(sorted(q_row), sorted(p_row))]
    d: dict[Cell, int] = {}
    for b in sorted(_balls(p), reverse=True):
        bound = min((v for a, v in d.items() if a.row > b.row and a.col > b.col), default=None)
        best = None
        for i, c in enumerate(cells, start=1):
            if c.row < b.row and c.col < b.col and (bound is None or i < bound):
                best = i
        if best is None:
            raise Incompatible(f"no admissible number for ball {b}")
        d[b] = best
    return d


def mbc_inverse_step(p: Sequence[int | None], p_row: Sequence[int], q_row: Sequence[int]) -> Pnap:
    p = _check_pnap(p)
    if len(p_row) != len(q_row):
        raise Incompatible("rows of different lengths")
    used_rows = {b.row for b in _balls(p)}
    used_cols = {b.col for b in _balls(p)}
    if used_rows & set(q_row) or used_cols & set(p_row):
        raise Incompatible("back corner-posts share a row or column with a ball")
    d = mbc_inverse_numbering(p, p_row, q_row)
    cells = [Cell(q, c) for q, c in zip(sorted(q_row), sorted(p_row))]
    new_balls: list[Cell] = []
    for i, back in enumerate(cells, start=1):
        new_balls += backward_corners(back, [b for b, v in d.items() if v == i])
    length = max([len(p), *q_row]) if q_row else len(p)
    return _from_balls(length, new_balls)


def mbc_inverse(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> Pnap:
    if [len(r) for r in P] != [len(r) for r in Q]:
        raise Incompatible("P and Q have different shapes")
    size = sum(len(r) for r in P)
    w: Pnap = (None,) * size
    for pr, qr in zip(reversed(P), reversed(Q)):
        w = mbc_inverse_step(w, pr, qr)
    return w


# ---------------------------------------------------------------------------
# row insertion
# ---------------------------------------------------------------------------


def bump_insert(t: Sequence[Sequence[int]], v: int) -> Tableau:
    """Schensted row insertion of ``v`` into ``t``."""
    rows = [list(r) for r in t]
    k = 0
    while True:
        if k == len(rows):
            rows.append([v])
            break
        row = rows[k]
        pos = bisect_left(row, v)
        if pos < len(row) and row[pos] == v:
            raise AMBCError(f"{v} is already in the tableau")
        if pos == len(row):
            row.append(v)
            break
        row[pos], v = v, row[pos]
        k += 1
    return tuple(tuple(r) for r in rows)


def rs_insert(seq: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of a sequence of distinct integers."""
    P: Tableau = ()
    Q: list[list[int]] = []
    for i, v in enumerate(seq, start=1):
        P = bump_insert(P, v)
        for k, row in enumerate(P):
            if k == len(Q):
                Q.append([i])
                break
            if len(row) > len(Q[k]):
                Q[k].append(i)
                break
    return P, tuple(tuple(r) for r in Q)


def is_standard(t: Sequence[Sequence[int]]) -> bool:
    """Rows strictly increase, columns strictly increase, shape is a partition, entries 1..N."""
    rows = [list(r) for r in t]
    if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
        return False
    if any(len(r) == 0 for r in rows):
        return False
    entries = sorted(x for r in rows for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r in rows:
        if any(x >= y for x, y in zip(r, r[1:])):
            return False
    for a, b in zip(rows, rows[1:]):
        if any(a[j] >= b[j] for j in range(len(b))):
            return False
    return True


__all__ = [
    "Pnap",
    "Tableau",
    "ZigZag",
    "backward_corners",
    "bump_insert",
    "forward_corners",
    "is_standard",
    "mbc",
    "mbc_inverse",
    "mbc_inverse_step",
    "mbc_numbering",
    "mbc_step",
    "rs_insert",
    "sort_sw_to_ne",
    "zigzag_corner_posts",
]
