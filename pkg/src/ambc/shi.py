"""Shi's affine insertion: combing of ``EMPTY``-forward windows and the row-extraction loop.

A window is ``EMPTY``-forward when all undefined entries come first.  Combing
moves the first descent's smaller entry into place and sends the displaced
entry, shifted by ``n``, to the end of the window.
"""

from __future__ import annotations

from .errors import NotEmptyForward
from .forward import Tabloid, make_tabloid
from .perm import PartialAffinePermutation, residue
from .poset import greene_kleitman, shi_poset


def _split(w: PartialAffinePermutation) -> tuple[int, list[int]]:
    """Number of leading ``EMPTY`` entries and the defined tail of the window."""
    k = 0
    while k < w.n and w.window[k] is None:
        k += 1
    tail = list(w.window[k:])
    if any(v is None for v in tail):
        raise NotEmptyForward("undefined entries must precede all defined entries")
    return k, tail  # type: ignore[return-value]


def _join(n: int, empties: int, tail: list[int]) -> PartialAffinePermutation:
    return PartialAffinePermutation(n, (None,) * empties + tuple(tail))


def _comb_tail(tail: list[int], n: int) -> list[int] | None:
    i = next((i for i in range(1, len(tail)) if tail[i - 1] > tail[i]), None)
    if i is None:
        return None
    j = next(j for j in range(i) if tail[j] > tail[i])
    return tail[:j] + [tail[i]] + tail[j + 1 : i] + tail[i + 1 :] + [tail[j] + n]


def comb(w: PartialAffinePermutation) -> PartialAffinePermutation:
    """One combing move; returns ``w`` itself when the defined entries already increase."""
    empties, tail = _split(w)
    new = _comb_tail(tail, w.n)
    return w if new is None else _join(w.n, empties, new)


def shi_p(w: PartialAffinePermutation, max_moves: int | None = None) -> Tabloid:
    """The tabloid produced by Shi's algorithm, with row lengths from the Greene-Kleitman invariants."""
    n = w.n
    empties, tail = _split(w)
    if not tail:
        return ()
    lengths = greene_kleitman(shi_poset(w))
    cap = max_moves if max_moves is not None else 50 * n * n
    moves = 0
    rows: list[list[int]] = []
    for ell in lengths:
        while True:
            while (new := _comb_tail(tail, n)) is not None:
                tail = new
                moves += 1
                if moves > cap:
                    raise RuntimeError(f"Shi insertion exceeded {cap} moves")
            if ell == 1 or tail[ell - 1] < tail[0] + n:
                rows.append([residue(v, n) for v in tail[:ell]])
                tail = tail[ell:]
                empties += ell
                break
            tail = tail[1:] + [tail[0] + n]
            moves += 1
            if moves > cap:
                raise RuntimeError(f"Shi insertion exceeded {cap} moves")
    return make_tabloid(rows)


__all__ = ["comb", "shi_p"]
