"""Streams ``st_r(A, B)``: periodic southeast chains of cells with prescribed residues.

Write ``a_1 < ... < a_k`` and ``b_1 < ... < b_k`` for the representatives in
``1..n`` of the row classes ``A`` and column classes ``B``, and extend them to
all integers by ``a_{t + k} = a_t + n`` (likewise for ``b``).  The stream of
altitude ``r`` consists of the cells ``(a_t, b_{t + r})`` for ``t`` in ``Z``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import AMBCError, NoValidAltitude, NotAStream, ParseError, ShapeMismatch
from .numbering import Numbering
from .perm import Cell, PartialAffinePermutation, normalize_cell, residue
from .poset import shi_poset, width


def _seq(values: Sequence[int], n: int, t: int) -> int:
    """``t``-th element (1-based, any integer) of the periodic extension of sorted ``values``."""
    k = len(values)
    q, s = divmod(t - 1, k)
    return values[s] + q * n


@dataclass(frozen=True, slots=True)
class Stream:
    n: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        for name in ("A", "B"):
            vals = getattr(self, name)
            if list(vals) != sorted(set(vals)):
                raise NotAStream(f"{name} must be strictly increasing residues")
            if any(not 1 <= v <= self.n for v in vals):
                raise NotAStream(f"{name} must consist of residues in 1..{self.n}")
        if len(self.A) != len(self.B) or not self.A:
            raise NotAStream("A and B must be non-empty and of equal size")

    @classmethod
    def of(cls, n: int, A: Iterable[int], B: Iterable[int], r: int) -> "Stream":
        return cls(n, tuple(sorted({residue(a, n) for a in A})), tuple(sorted({residue(b, n) for b in B})), r)

    @property
    def flow(self) -> int:
        return len(self.A)

    def cell(self, t: int) -> Cell:
        """The cell in row ``a_t``; it carries the default stream numbering value ``t``."""
        return Cell(_seq(self.A, self.n, t), _seq(self.B, self.n, t + self.r))

    def representatives(self) -> list[Cell]:
        return [self.cell(t) for t in range(1, self.flow + 1)]

    def default_numbering(self) -> Numbering:
        """The cell in row ``a_1`` gets ``1`` and values grow by one along the stream."""
        return Numbering(self.n, self.flow, tuple(self.representatives()), tuple(range(1, self.flow + 1)))

    def to_json(self) -> dict:
        return {"A": list(self.A), "B": list(self.B), "r": self.r}

    @classmethod
    def from_json(cls, data: dict | str, n: int) -> "Stream":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc)) from exc
        try:
            return cls.of(n, data["A"], data["B"], int(data["r"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed stream JSON: {data!r}") from exc

    def as_partial_permutation(self) -> PartialAffinePermutation:
        return PartialAffinePermutation.from_cells(self.n, self.representatives())


def stream_cells(s: Stream, row_lo: int, row_hi: int) -> list[Cell]:
    """Cells of ``s`` with rows in ``[row_lo, row_hi]``, in southeast order."""
    k = s.flow
    # a_t >= row_lo  <=>  t >= t_lo; start from a safe lower bound and filter
    t = ((row_lo - s.A[-1]) // s.n) * k
    out = []
    while True:
        c = s.cell(t)
        if c.row > row_hi:
            break
        if c.row >= row_lo:
            out.append(c)
        t += 1
    return out


def defining_data(cells: Iterable[tuple[int, int]], n: int) -> Stream:
    """Recover ``(A, B, r)`` from cells covering every class of a stream."""
    reps = {normalize_cell(c, n) for c in cells}
    rows = sorted(c.row for c in reps)
    if len(rows) != len(set(rows)) or not rows:
        raise NotAStream("cells must have distinct row classes")
    A = tuple(rows)
    B = tuple(sorted(residue(c.col, n) for c in reps))
    if len(set(B)) != len(B):
        raise NotAStream("cells must have distinct column classes")
    k = len(A)
    by_row = {c.row: c for c in reps}
    first = by_row[A[0]]
    q, s0 = divmod(first.col - 1, n)  # first.col = (s0 + 1) + q n
    s = B.index(s0 + 1) + 1
    r = q * k + s - 1
    st = Stream(n, A, B, r)
    if set(st.representatives()) != reps:
        raise NotAStream("cells do not form a southeast chain of the expected shape")
    return st


def is_compatible(w: PartialAffinePermutation, s: Stream) -> bool:
    rows = set(w.defined_rows())
    cols = {residue(c.col, w.n) for c in w.representatives()}
    if rows & set(s.A) or cols & set(s.B):
        return False
    if w.is_empty:
        return True
    return s.flow >= width(shi_poset(w))


# ---------------------------------------------------------------------------
# concurrency
# ---------------------------------------------------------------------------


def _window(n: int, k: int) -> range:
    span = 2 * n + 2
    return range(-span, span + 1)


def is_concurrent(T: Stream, S: Stream) -> bool:
    """River test: the two channels built by the backward step of ``S`` on ``T`` are at distance 0."""
    from .backward import backward_step_traced
    from .channels import Channel, all_channels, distance

    if T.flow != S.flow:
        raise AMBCError("concurrency compares streams of equal flow")
    t = T.as_partial_permutation()
    u, _induced, trace = backward_step_traced(t, S)
    sw = Channel(u.n, tuple(sorted(normalize_cell(lev.inner[0], u.n) for lev in trace.levels)))
    ne = Channel(u.n, tuple(sorted(normalize_cell(lev.inner[-1], u.n) for lev in trace.levels)))
    chans = set(all_channels(u))
    if sw not in chans or ne not in chans:
        raise AMBCError("backward step of a stream did not split into two channels")
    return distance(u, sw, ne) == 0


def rows_coincide(S: Stream, A: Sequence[int], B: Sequence[int], r: int) -> bool:
    """Do the backward numberings of ``st_r(A, B)`` and ``st_{r+1}(A, B)`` agree row by row?"""
    from .backward import backward_numbering

    lo = Stream.of(S.n, A, B, r).as_partial_permutation()
    hi = Stream.of(S.n, A, B, r + 1).as_partial_permutation()
    d_lo = backward_numbering(lo, S).as_dict()
    d_hi = backward_numbering(hi, S).as_dict()
    by_row_lo = {c.row: v for c, v in d_lo.items()}
    by_row_hi = {c.row: v for c, v in d_hi.items()}
    return by_row_lo == by_row_hi


@lru_cache(maxsize=65536)
def _concurrent_altitude(n: int, A2: tuple, B2: tuple, A1: tuple, B1: tuple, method: str) -> int:
    S = Stream(n, A1, B1, 0)
    k = len(A1)
    window = _window(n, k)
    if method == "river":
        hits = [r for r in window if is_concurrent(Stream(n, A2, B2, r), S)]
        if len(hits) != 1:
            raise NoValidAltitude(f"expected one concurrent altitude in the search window, found {hits}")
        return hits[0]
    if method == "height":
        flags = [rows_coincide(S, A2, B2, r) for r in window]
        if not flags[-1] or flags[0]:
            raise NoValidAltitude("row coincidence does not flip inside the search window")
        first = flags.index(True)
        if not all(flags[first:]):
            raise NoValidAltitude("row coincidence is not monotone in the altitude")
        return window[first]
    raise ValueError(f"unknown method {method!r}")


def concurrent_altitude(
    A2: Iterable[int], B2: Iterable[int], A1: Iterable[int], B1: Iterable[int], n: int, method: str = "river"
) -> int:
    """The unique ``r`` with ``st_r(A2, B2)`` concurrent to ``st_0(A1, B1)``.

    ``method="river"`` applies the river test directly; ``method="height"``
    locates the altitude where the backward numberings of consecutive
    altitudes start to agree on rows.  Both must give the same answer.
    """
    A2t = tuple(sorted({residue(a, n) for a in A2}))
    B2t = tuple(sorted({residue(b, n) for b in B2}))
    A1t = tuple(sorted({residue(a, n) for a in A1}))
    B1t = tuple(sorted({residue(b, n) for b in B1}))
    if not (len(A2t) == len(B2t) == len(A1t) == len(B1t)):
        raise NoValidAltitude("all four residue sets must have the same size")
    if set(A1t) & set(A2t) or set(B1t) & set(B2t):
        raise NoValidAltitude("row sets and column sets must be disjoint")
    return _concurrent_altitude(n, A2t, B2t, A1t, B1t, method)


def offset_constants(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]], n: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Offset constants ``(r_i)`` and their running sums ``(s_i)`` over blocks of equal row length.

    Row ``i`` stands for the streams ``st_*(Q_i, P_i)``; ``r_i`` is the altitude
    at which row ``i`` is concurrent to row ``i - 1`` at altitude 0, and is 0
    whenever row ``i`` is strictly shorter than row ``i - 1``.
    """
    if [len(r) for r in P] != [len(r) for r in Q]:
        raise ShapeMismatch("P and Q must have the same shape")
    if n is None:
        n = sum(len(r) for r in P)
    r: list[int] = []
    s: list[int] = []
    for i in range(len(P)):
        if i == 0 or len(P[i]) < len(P[i - 1]):
            r.append(0)
            s.append(0)
            continue
        if len(P[i]) > len(P[i - 1]):
            raise ShapeMismatch("tabloid rows must weakly decrease in length")
        ri = concurrent_altitude(Q[i], P[i], Q[i - 1], P[i - 1], n)
        r.append(ri)
        s.append(s[-1] + ri)
    return tuple(r), tuple(s)


__all__ = [
    "Stream",
    "concurrent_altitude",
    "defining_data",
    "is_compatible",
    "is_concurrent",
    "offset_constants",
    "rows_coincide",
    "stream_cells",
]
