"""Plain-text pictures of the ball grid.

Each cell is four characters wide.  Balls show their number (or ``o`` when no
numbering is given) and balls of the highlighted channel are bracketed.  Stream
cells are ``*``, zig-zag paths use box-drawing characters, and dotted period
lines separate blocks of ``n`` rows and columns.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .numbering import Numbering
from .perm import Cell, PartialAffinePermutation

RED = "\x1b[31m"
RESET = "\x1b[0m"

_BOX = {
    frozenset({"l", "r"}): "─",
    frozenset({"u", "d"}): "│",
    frozenset({"l", "u"}): "┘",
    frozenset({"r", "d"}): "┌",
    frozenset({"l", "d"}): "┐",
    frozenset({"r", "u"}): "└",
    frozenset({"l"}): "─",
    frozenset({"r"}): "─",
    frozenset({"u"}): "│",
    frozenset({"d"}): "│",
}


def _path_glyphs(paths: Iterable[Sequence[tuple[int, int]]]) -> dict[Cell, str]:
    glyphs: dict[Cell, str] = {}
    for path in paths:
        cells = [Cell(*c) for c in path]
        members = set(cells)
        for c in cells:
            dirs = set()
            if Cell(c.row, c.col - 1) in members:
                dirs.add("l")
            if Cell(c.row, c.col + 1) in members:
                dirs.add("r")
            if Cell(c.row - 1, c.col) in members:
                dirs.add("u")
            if Cell(c.row + 1, c.col) in members:
                dirs.add("d")
            glyphs[c] = _BOX.get(frozenset(dirs), "·")
    return glyphs


def render_grid(
    w: PartialAffinePermutation,
    rows: tuple[int, int],
    cols: tuple[int, int] | None = None,
    numbering: Numbering | None = None,
    highlight: Iterable[tuple[int, int]] = (),
    stream: Iterable[tuple[int, int]] = (),
    paths: Iterable[Sequence[tuple[int, int]]] = (),
    color: bool = False,
) -> str:
    """Draw the window ``rows x cols`` of the ball picture of ``w``."""
    n = w.n
    r_lo, r_hi = rows
    balls = {b: b for b in w.balls(r_lo, r_hi)}
    if cols is None:
        cols = (r_lo, r_hi)
    c_lo, c_hi = cols
    marked = set()
    for h in highlight:
        marked.add((h[0] % n, h[1] - h[0]))  # translate class of a highlighted ball
    stars = set()
    for s in stream:
        stars.add((s[0] % n, s[1] - s[0]))
    glyphs = _path_glyphs(paths)

    def sep(text: str) -> str:
        return f"{RED}{text}{RESET}" if color else text

    lines: list[str] = []
    header = "     " + "".join(
        (sep("┆") if (c - 1) % n == 0 else "") + f"{c:>4}" for c in range(c_lo, c_hi + 1)
    )
    lines.append(header)
    width = len(header) - 5 if not color else sum(4 + ((c - 1) % n == 0) for c in range(c_lo, c_hi + 1))
    for r in range(r_lo, r_hi + 1):
        if (r - 1) % n == 0:
            lines.append("     " + sep("┄" * width))
        out = [f"{r:>4} "]
        for c in range(c_lo, c_hi + 1):
            if (c - 1) % n == 0:
                out.append(sep("┆"))
            cell = Cell(r, c)
            key = (r % n, c - r)
            if cell in balls:
                label = "o" if numbering is None else str(numbering(cell))
                text = f"[{label}]" if key in marked else f" {label} "
                out.append(f"{text:>4}")
            elif key in stars:
                out.append("  * ")
            elif cell in glyphs:
                g = glyphs[cell]
                out.append(f" {g}{g if g == '─' else ' '}{g if g == '─' else ' '}")
            else:
                out.append("  . ")
        lines.append("".join(out).rstrip())
    return "\n".join(lines)


__all__ = ["render_grid"]
