"""The backward map: backward numberings, one backward step, and the inverse map Psi.

Given a partial permutation ``w`` and a compatible stream ``S`` numbered
consecutively along its cells, every ball first gets the largest stream value
found weakly northwest of it.  Lowering values until the numbering is monotone
gives the backward numbering.  The balls numbered ``i`` are then the outer
corner-posts of a zig-zag whose back corner-post is the stream cell numbered
``i``; collecting the inner corner-posts of all these zig-zags undoes one
forward step.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import AMBCError, Incompatible, InvalidTriple
from .finite import backward_corners, sort_sw_to_ne
from .forward import Level, OmegaTriple, StepTrace
from .numbering import Numbering, offset_matrix
from .perm import Cell, PartialAffinePermutation, normalize_cell
from .streams import Stream, is_compatible

StreamAnchor = tuple[tuple[int, int], int]


def _anchor_shift(s: Stream, f: StreamAnchor | None) -> int:
    """Offset ``c`` such that the stream cell ``s.cell(t)`` carries the value ``t + c``."""
    if f is None:
        return 0
    cell, value = f
    rep = normalize_cell(cell, s.n)
    if rep.row not in s.A:
        raise Incompatible(f"anchor {tuple(cell)} is not a cell of the stream")
    t = s.A.index(rep.row) + 1 + ((cell[0] - rep.row) // s.n) * s.flow
    if s.cell(t) != Cell(*cell):
        raise Incompatible(f"anchor {tuple(cell)} is not a cell of the stream")
    return value - t


def _check(w: PartialAffinePermutation, s: Stream) -> None:
    if s.n != w.n:
        raise Incompatible("stream and partial permutation have different n")
    if not is_compatible(w, s):
        raise Incompatible("the stream is not compatible with the partial permutation")


def stream_numbering(w: PartialAffinePermutation, s: Stream, f: StreamAnchor | None = None) -> Numbering:
    """``d0(b)``: the largest stream value on a stream cell weakly northwest of ``b``."""
    _check(w, s)
    reps = tuple(w.representatives())
    p = s.flow
    if not reps:
        return Numbering(w.n, p, (), ())
    shift = _anchor_shift(s, f)
    cells = s.representatives()
    fvals = np.arange(1, p + 1, dtype=np.int64) + shift
    D = offset_matrix(cells, reps, w.n)
    d0 = (fvals[:, None] - D * p).max(axis=0)
    return Numbering(w.n, p, reps, tuple(int(x) for x in d0))


def backward_numbering(
    w: PartialAffinePermutation, s: Stream, f: StreamAnchor | None = None, method: str = "decrement"
) -> Numbering:
    """Largest monotone numbering bounded above by the stream numbering.

    ``method="decrement"`` lowers one offending ball class at a time;
    ``method="rworth"`` evaluates the minimum over reverse paths directly as a
    shortest-path problem.  Both give the same numbering.
    """
    d0 = stream_numbering(w, s, f)
    if not d0.cells:
        return d0
    D = offset_matrix(d0.cells, d0.cells, w.n)
    start = np.asarray(d0.values, dtype=np.int64)
    if method == "decrement":
        rows = np.asarray([c.row for c in d0.cells], dtype=np.int64)
        d, _steps, ok = _kernels.decrement(D, d0.period, start, rows)
    elif method == "rworth":
        d, ok = _kernels.shortest_rworth(D, d0.period, start)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not ok:
        raise Incompatible("the backward numbering does not exist for this stream")
    return Numbering(w.n, d0.period, d0.cells, tuple(int(x) for x in d))


@lru_cache(maxsize=1 << 17)
def backward_step_traced(
    w: PartialAffinePermutation, s: Stream, f: StreamAnchor | None = None
) -> tuple[PartialAffinePermutation, Numbering, StepTrace]:
    """One backward step; returns the new partial permutation, its induced numbering and the zig-zags."""
    d = backward_numbering(w, s, f)
    shift = _anchor_shift(s, f)
    p = s.flow
    levels: list[Level] = []
    induced: dict[Cell, int] = {}
    for t in range(1, p + 1):
        value = t + shift
        back = s.cell(t)
        outer = sort_sw_to_ne(d.level(value)) if d.cells else []
        inner = backward_corners(back, outer)
        levels.append(Level(value, tuple(inner), tuple(outer), back))
        for u in inner:
            if u in induced:
                raise AMBCError("zig-zags of a backward step intersect")
            induced[u] = value
    u = PartialAffinePermutation.from_cells(w.n, [normalize_cell(c, w.n) for c in induced])
    return u, Numbering.from_mapping(w.n, p, induced), StepTrace(d, tuple(levels))


def backward_step(w: PartialAffinePermutation, s: Stream, f: StreamAnchor | None = None) -> PartialAffinePermutation:
    return backward_step_traced(w, s, f)[0]


def psi_traced(t: OmegaTriple) -> tuple[PartialAffinePermutation, list[StepTrace]]:
    if not t.is_valid():
        raise InvalidTriple("tabloids must partition 1..n into rows of weakly decreasing length")
    w = PartialAffinePermutation.empty(t.n)
    traces: list[StepTrace] = []
    for i in reversed(range(len(t.P))):
        try:
            w, _d, trace = backward_step_traced(w, t.stream(i))
        except Incompatible as exc:
            raise InvalidTriple(f"row {i + 1} cannot be inserted: {exc}") from exc
        traces.append(trace)
    return w, traces


@lru_cache(maxsize=1 << 17)
def psi(t: OmegaTriple) -> PartialAffinePermutation:
    return psi_traced(t)[0]


__all__ = [
    "backward_numbering",
    "backward_step",
    "backward_step_traced",
    "psi",
    "psi_traced",
    "stream_numbering",
]
