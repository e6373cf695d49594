"""Partial extended affine permutations in window notation.

A partial permutation of period ``n`` is stored through its window
``[w(1), ..., w(n)]`` where an entry may be ``None`` (printed ``_``) when the
residue class of that row carries no ball.  The infinite ball set is
``{(i + kn, w(i) + kn)}``; nothing infinite is ever materialized.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import InvalidKnuthMove, NotInjective, ParseError, PartialNotInvertible

EMPTY_TOKEN = "_"


class Cell(NamedTuple):
    row: int
    col: int

    def translate(self, k: int, n: int) -> "Cell":
        return Cell(self.row + k * n, self.col + k * n)

    @property
    def diagonal(self) -> int:
        return self.col - self.row


def residue(x: int, n: int) -> int:
    """Representative of ``x`` modulo ``n`` in ``1..n``."""
    return (x - 1) % n + 1


def normalize_cell(c: tuple[int, int], n: int) -> Cell:
    """The translate of ``c`` whose row lies in ``1..n``."""
    r, col = c
    k = (r - 1) // n
    return Cell(r - k * n, col - k * n)


@dataclass(frozen=True, slots=True)
class PartialAffinePermutation:
    n: int
    window: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ParseError(f"period must be a positive integer, got {self.n!r}")
        if len(self.window) != self.n:
            raise ParseError(f"window has length {len(self.window)}, expected {self.n}")
        seen: dict[int, int] = {}
        for i, v in enumerate(self.window, start=1):
            if v is None:
                continue
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"window entry {v!r} is not an integer")
            r = residue(v, self.n)
            if r in seen:
                raise NotInjective(f"w({seen[r]}) and w({i}) share residue {r} mod {self.n}")
            seen[r] = i

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "PartialAffinePermutation":
        return cls(n, (None,) * n)

    @classmethod
    def identity(cls, n: int) -> "PartialAffinePermutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[tuple[int, int]]) -> "PartialAffinePermutation":
        """Build the partial permutation whose balls are the translates of ``cells``."""
        window: list[int | None] = [None] * n
        for c in cells:
            r, col = normalize_cell(c, n)
            if window[r - 1] is not None and window[r - 1] != col:
                raise NotInjective(f"two balls in row class {r}")
            window[r - 1] = col
        return cls(n, tuple(window))

    # -- queries ------------------------------------------------------------

    def __call__(self, i: int) -> int | None:
        r = residue(i, self.n)
        v = self.window[r - 1]
        return None if v is None else v + (i - r)

    @property
    def is_total(self) -> bool:
        return all(v is not None for v in self.window)

    @property
    def is_empty(self) -> bool:
        return all(v is None for v in self.window)

    def defined_rows(self) -> list[int]:
        return [i for i, v in enumerate(self.window, start=1) if v is not None]

    def representatives(self) -> list[Cell]:
        """One ball per translate class: the ball in rows ``1..n``, by row."""
        return [Cell(i, v) for i, v in enumerate(self.window, start=1) if v is not None]

    def balls(self, row_lo: int, row_hi: int) -> list[Cell]:
        """All balls with row in ``[row_lo, row_hi]``, sorted by row."""
        out = []
        for i in range(row_lo, row_hi + 1):
            v = self(i)
            if v is not None:
                out.append(Cell(i, v))
        return out

    def size(self) -> int:
        return sum(v is not None for v in self.window)

    # -- serialization ------------------------------------------------------

    def __str__(self) -> str:
        return "[" + ",".join(EMPTY_TOKEN if v is None else str(v) for v in self.window) + "]"

    def to_json(self) -> dict:
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_json(cls, data: dict | str) -> "PartialAffinePermutation":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc)) from exc
        try:
            n = data["n"]
            window = tuple(data["window"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed permutation JSON: {data!r}") from exc
        return cls(n, window)


_ITEM = re.compile(r"^\s*(?:(-?\d+)|(_))\s*$")


def parse_window(text: str, n: int | None = None) -> PartialAffinePermutation:
    """Parse ``"[4,1,_,11]"``; ``n`` defaults to the number of entries."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"window must be bracketed: {text!r}")
    body = s[1:-1].strip()
    items = [] if body == "" else body.split(",")
    window: list[int | None] = []
    for item in items:
        m = _ITEM.match(item)
        if m is None:
            raise ParseError(f"bad window entry {item!r}")
        window.append(None if m.group(2) else int(m.group(1)))
    if n is None:
        n = len(window)
    if len(window) != n:
        raise ParseError(f"window has {len(window)} entries but n={n}")
    return PartialAffinePermutation(n, tuple(window))


def inverse(w: PartialAffinePermutation) -> PartialAffinePermutation:
    if not w.is_total:
        raise PartialNotInvertible("only total permutations are invertible")
    return PartialAffinePermutation.from_cells(w.n, [(c, r) for r, c in w.representatives()])


def shift_window(w: PartialAffinePermutation, k: int) -> PartialAffinePermutation:
    """Re-read the window starting at row ``1 + k``: the result maps ``i`` to ``w(i + k)``."""
    return PartialAffinePermutation(w.n, tuple(w(i + k) for i in range(1, w.n + 1)))


def knuth_move(w: PartialAffinePermutation, i: int) -> PartialAffinePermutation:
    """Swap the values in rows ``i`` and ``i + 1`` (periodically) when allowed."""
    n = w.n
    if not w.is_total:
        raise InvalidKnuthMove("Knuth moves are defined for total permutations")
    if n == 1:
        raise InvalidKnuthMove("rows i and i+1 share a residue class when n = 1")
    a, b = w(i), w(i + 1)
    lo, hi = min(a, b), max(a, b)
    if not (lo < w(i - 1) < hi or lo < w(i + 2) < hi):
        raise InvalidKnuthMove(f"neither w({i - 1}) nor w({i + 2}) lies between w({i}) and w({i + 1})")
    window = list(w.window)
    ri, rj = residue(i, n), residue(i + 1, n)
    window[ri - 1] = b - (i - ri)
    window[rj - 1] = a - (i + 1 - rj)
    return PartialAffinePermutation(n, tuple(window))


def center_of_gravity(w: PartialAffinePermutation) -> Fraction:
    return Fraction(sum(c.col - c.row for c in w.representatives()), w.n)


def reposition_empty_forward(w: PartialAffinePermutation) -> PartialAffinePermutation:
    """Move every empty entry to the front of the window, keeping defined entries in order.

    The balls keep their columns; only their rows move, which leaves the
    insertion tabloid unchanged.
    """
    defined = [v for v in w.window if v is not None]
    return PartialAffinePermutation(w.n, (None,) * (w.n - len(defined)) + tuple(defined))


__all__ = [
    "Cell",
    "EMPTY_TOKEN",
    "PartialAffinePermutation",
    "center_of_gravity",
    "inverse",
    "knuth_move",
    "normalize_cell",
    "parse_window",
    "reposition_empty_forward",
    "residue",
    "shift_window",
]
