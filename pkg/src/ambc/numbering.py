"""Semi-periodic numberings of translation-invariant cell sets.

A numbering with period ``m`` assigns an integer to every cell of an
``(n, n)``-invariant set so that translating a cell by ``(n, n)`` adds ``m``.
It is stored on one representative per translate class, namely the cell whose
row lies in ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .perm import Cell, normalize_cell


def offset_matrix(a: Sequence[tuple[int, int]], b: Sequence[tuple[int, int]], n: int) -> np.ndarray:
    """``D[x, y]``: least ``delta`` with ``a[x]`` strictly NW of ``b[y] + delta (n, n)``."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros((len(a), len(b)), dtype=np.int64)
    ra = [c[0] for c in a]
    ca = [c[1] for c in a]
    rb = [c[0] for c in b]
    cb = [c[1] for c in b]
    return _kernels.nw_offsets(ra, ca, rb, cb, n)


@dataclass(frozen=True, slots=True)
class Numbering:
    n: int
    period: int
    cells: tuple[Cell, ...]  # class representatives, rows in 1..n, sorted by row
    values: tuple[int, ...]

    @classmethod
    def from_mapping(cls, n: int, period: int, mapping: dict[tuple[int, int], int]) -> "Numbering":
        """Build from values on arbitrary translates (at most one translate per class)."""
        items: dict[Cell, int] = {}
        for c, v in mapping.items():
            rep = normalize_cell(c, n)
            k = (c[0] - rep.row) // n
            val = v - k * period
            if rep in items and items[rep] != val:
                raise ValueError(f"inconsistent values on the class of {rep}")
            items[rep] = val
        cells = tuple(sorted(items))
        return cls(n, period, cells, tuple(items[c] for c in cells))

    def __call__(self, cell: tuple[int, int]) -> int:
        rep = normalize_cell(cell, self.n)
        k = (cell[0] - rep.row) // self.n
        return self.as_dict()[rep] + k * self.period

    def as_dict(self) -> dict[Cell, int]:
        return dict(zip(self.cells, self.values))

    def shifted(self, k: int) -> "Numbering":
        return Numbering(self.n, self.period, self.cells, tuple(v + k for v in self.values))

    def level(self, i: int) -> list[Cell]:
        """All cells carrying the value ``i``."""
        out = []
        for c, v in zip(self.cells, self.values):
            if (i - v) % self.period == 0:
                out.append(c.translate((i - v) // self.period, self.n))
        return out

    def restricted(self, rows: Iterable[int]) -> "Numbering":
        keep = set(rows)
        pairs = [(c, v) for c, v in zip(self.cells, self.values) if c.row in keep]
        return Numbering(self.n, self.period, tuple(c for c, _ in pairs), tuple(v for _, v in pairs))

    def window_values(self, row_lo: int, row_hi: int) -> dict[Cell, int]:
        """Values on every translate with row in ``[row_lo, row_hi]``."""
        out: dict[Cell, int] = {}
        for c, v in zip(self.cells, self.values):
            k_lo = -((c.row - row_lo) // self.n)
            k_hi = (row_hi - c.row) // self.n
            for k in range(k_lo, k_hi + 1):
                out[c.translate(k, self.n)] = v + k * self.period
        return out


def is_monotone(d: Numbering) -> bool:
    D = offset_matrix(d.cells, d.cells, d.n)
    vals = np.asarray(d.values, dtype=np.int64)
    return bool((vals[None, :] - vals[:, None] + D * d.period >= 1).all())


def is_continuous(d: Numbering) -> bool:
    D = offset_matrix(d.cells, d.cells, d.n)
    vals = np.asarray(d.values, dtype=np.int64)
    gap = vals[None, :] - vals[:, None] + D * d.period  # [a, b]: value gap from a's best NW translate to b
    return bool((gap == 1).any(axis=0).all())


def is_proper(d: Numbering) -> bool:
    return is_monotone(d) and is_continuous(d)


__all__ = ["Numbering", "is_continuous", "is_monotone", "is_proper", "offset_matrix"]
