"""Row insertion of the semi-periodic sequence ``w(1), w(2), ...`` and its stabilization.

Reducing the insertion tableau of the first ``i`` values modulo ``n`` gives a
tabloid of residue multisets ``Pbar_i``.  For large ``i`` adding one period of
values adds the same tabloid with distinct residues in every row, and that
tabloid is the P-tabloid of the forward map.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import AMBCError, NoStabilization
from .finite import Tableau, rs_insert
from .forward import Tabloid
from .perm import PartialAffinePermutation, residue

ResidueTabloid = tuple[tuple[int, ...], ...]


def _require_total(w: PartialAffinePermutation) -> None:
    if not w.is_total:
        raise AMBCError("row insertion needs a total permutation")


def insert_prefix(w: PartialAffinePermutation, i: int) -> tuple[Tableau, ResidueTabloid]:
    """Insertion tableau of ``w(1), ..., w(i)`` and its reduction modulo ``n``."""
    _require_total(w)
    if i < 1:
        raise ValueError("the prefix length must be positive")
    P, _Q = rs_insert([w(j) for j in range(1, i + 1)])
    return P, tuple(tuple(sorted(residue(v, w.n) for v in row)) for row in P)


def _as_tabloid(counts: np.ndarray) -> ResidueTabloid:
    """Rows of residue multisets from a ``rows x n`` count matrix, dropping trailing empty rows."""
    rows = [tuple(r + 1 for r in range(counts.shape[1]) for _ in range(int(counts[k, r]))) for k in range(counts.shape[0])]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def residue_tabloids(w: PartialAffinePermutation, length: int) -> np.ndarray:
    """``out[i - 1, k, r]``: multiplicity of residue ``r + 1`` in row ``k`` of ``Pbar_i``."""
    _require_total(w)
    return _kernels.rs_row_counts([w(j) for j in range(1, length + 1)], w.n)


def _period_difference(counts: np.ndarray, i: int, n: int) -> np.ndarray | None:
    """``Pbar_{i+n} - Pbar_i`` when it is a tabloid with every residue exactly once, else ``None``."""
    diff = counts[i - 1 + n] - counts[i - 1]
    if (diff < 0).any() or (diff > 1).any() or not (diff.sum(axis=0) == 1).all():
        return None
    sizes = diff.sum(axis=1)
    nonzero = np.nonzero(sizes)[0]
    if nonzero.size and (sizes[: nonzero[-1] + 1] == 0).any():
        return None
    return diff


def stabilized_p(w: PartialAffinePermutation, max_periods: int = 60) -> tuple[Tabloid, int]:
    """The stable period difference ``P`` and the least index ``i0`` from which it holds for ``3n + 1`` indices."""
    _require_total(w)
    n = w.n
    length = (max_periods + 4) * n + 1
    counts = residue_tabloids(w, length)
    run_start, run_value = None, None
    for i in range(1, max_periods * n + 3 * n + 1):
        diff = _period_difference(counts, i, n)
        if diff is None or run_value is None or not np.array_equal(diff, run_value):
            run_start, run_value = (i, diff) if diff is not None else (None, None)
        if run_start is not None and i - run_start == 3 * n:
            if run_start > max_periods * n:
                break
            return _as_tabloid(run_value), run_start
    raise NoStabilization(f"no stable period difference within {max_periods} periods")


def row_rates(w: PartialAffinePermutation, i: int) -> np.ndarray:
    """``rates[k, r]``: multiplicity of residue ``r + 1`` in row ``k`` of ``Pbar_i``, times ``n / i``."""
    counts = residue_tabloids(w, i)
    return counts[i - 1] * w.n / i


__all__ = ["insert_prefix", "residue_tabloids", "row_rates", "stabilized_p"]
