"""Integer kernels shared by the numbering, poset and insertion code.

Every kernel exists twice: a numba ``@njit`` version and a numpy version with
identical semantics.  The numba path is used when numba imports cleanly and the
environment variable ``AMBC_NUMBA`` is not set to ``0``.  Both paths are exact
integer code; the test-suite runs them against each other.

Conventions
-----------
Translate classes are indexed ``0..N-1`` and carry a representative cell
``(row, col)``.  The offset matrix ``D`` satisfies: the ``k``-translate of
class ``a`` is strictly northwest of the ``(k + delta)``-translate of class
``b`` exactly when ``delta >= D[a, b]``.  A semi-periodic numbering with
period ``m`` is stored as one integer per class (its value on the
representative).
"""

from __future__ import annotations

import os
from bisect import bisect_left

import numpy as np

NEG = -(1 << 60)
POS = 1 << 60


def _want_numba() -> bool:
    return os.environ.get("AMBC_NUMBA", "1").strip() not in ("0", "false", "no", "off")


try:  # pragma: no cover - exercised implicitly depending on the environment
    if not _want_numba():
        raise ImportError("numba disabled by AMBC_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[no-redef]
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy reference implementations
# ---------------------------------------------------------------------------


def nw_offsets_np(ra, ca, rb, cb, n):
    ra = np.asarray(ra, dtype=np.int64)
    ca = np.asarray(ca, dtype=np.int64)
    rb = np.asarray(rb, dtype=np.int64)
    cb = np.asarray(cb, dtype=np.int64)
    gap = np.maximum(ra[:, None] - rb[None, :], ca[:, None] - cb[None, :])
    return np.floor_divide(gap, n) + 1


def longest_paths_np(D, m, init, fixed):
    d = np.array(init, dtype=np.int64)
    free = ~np.asarray(fixed, dtype=np.bool_)
    N = d.shape[0]
    for _ in range(N + 2):
        known = d > NEG
        if not known.any():
            break
        cand = np.where(known[:, None], d[:, None] + 1 - D * m, NEG)
        best = cand.max(axis=0)
        new = np.where(free, np.maximum(d, best), d)
        if np.array_equal(new, d):
            return d, True
        d = new
    return d, False


def shortest_rworth_np(D, p, d0):
    d = np.array(d0, dtype=np.int64)
    N = d.shape[0]
    for _ in range(N + 2):
        cand = (d[None, :] + D * p - 1).min(axis=1)
        new = np.minimum(d, cand)
        if np.array_equal(new, d):
            return d, True
        d = new
    return d, False


def _equal_partners_np(d, D, p):
    diff = d[:, None] - d[None, :]
    divisible = (diff % p) == 0
    q = np.floor_divide(diff, p)
    se = divisible & (q >= D)  # some translate of column class sits SE with equal value
    nw = divisible & (q <= -D.T)  # some translate of column class sits NW with equal value
    return se.any(axis=1), nw.any(axis=1)


def decrement_np(D, p, d0, rows):
    d = np.array(d0, dtype=np.int64)
    rows = np.asarray(rows, dtype=np.int64)
    N = d.shape[0]
    limit = 64 * (N + 1) * (N + 1) * (p + 1) + 10_000
    steps = 0
    while True:
        if _strict_violation_np(d, D, p):
            return d, steps, False
        se, nw = _equal_partners_np(d, D, p)
        cand = np.nonzero(se & ~nw)[0]
        if cand.size == 0:
            return d, steps, not bool(se.any())
        order = np.lexsort((rows[cand], d[cand]))
        d[cand[order[0]]] -= 1
        steps += 1
        if steps > limit:
            return d, steps, False


def _strict_violation_np(d, D, p):
    # a translate of class b strictly SE of class a carrying a strictly smaller value
    # value of (b, delta) is d[b] + delta * p with delta >= D[a, b]; smallest is at delta = D[a, b]
    return bool((d[None, :] + D * p < d[:, None]).any())


def subset_heights_np(below, n):
    below = np.asarray(below, dtype=np.int64)
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    minimal = np.zeros(size, dtype=np.int64)
    for x in range(n):
        has = ((masks >> x) & 1) == 1
        free = (masks & below[x]) == 0
        minimal |= np.where(has & free, 1 << x, 0)
    rest = masks & ~minimal
    h = np.zeros(size, dtype=np.int64)
    for _ in range(n + 1):
        new = np.where(masks == 0, 0, 1 + h[rest])
        if np.array_equal(new, h):
            break
        h = new
    return h


def rs_row_counts_np(values, n):
    """Schensted row insertion of ``values``; return per-prefix residue counts.

    ``out[i, k, r]`` is the number of entries congruent to ``r + 1`` modulo ``n``
    in row ``k`` of the tableau obtained after inserting ``values[: i + 1]``.
    """
    values = [int(v) for v in values]
    L = len(values)
    out = np.zeros((L, L, n), dtype=np.int64)
    rows: list[list[int]] = []
    counts = np.zeros((L, n), dtype=np.int64)
    for i, v in enumerate(values):
        k = 0
        while True:
            if k == len(rows):
                rows.append([v])
                counts[k, (v - 1) % n] += 1
                break
            row = rows[k]
            pos = bisect_left(row, v)
            if pos == len(row):
                row.append(v)
                counts[k, (v - 1) % n] += 1
                break
            bumped = row[pos]
            row[pos] = v
            counts[k, (v - 1) % n] += 1
            counts[k, (bumped - 1) % n] -= 1
            v = bumped
            k += 1
        out[i] = counts
    return out


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------


@njit(cache=True)
def _nw_offsets_nb(ra, ca, rb, cb, n):
    A = ra.shape[0]
    B = rb.shape[0]
    D = np.empty((A, B), dtype=np.int64)
    for a in range(A):
        for b in range(B):
            g = ra[a] - rb[b]
            h = ca[a] - cb[b]
            if h > g:
                g = h
            D[a, b] = (g // n) + 1
    return D


@njit(cache=True)
def _longest_paths_nb(D, m, init, fixed):
    N = init.shape[0]
    d = init.copy()
    for _ in range(N + 2):
        changed = False
        for b in range(N):
            if fixed[b]:
                continue
            best = d[b]
            for a in range(N):
                if d[a] > NEG:
                    v = d[a] + 1 - D[a, b] * m
                    if v > best:
                        best = v
            if best != d[b]:
                d[b] = best
                changed = True
        if not changed:
            return d, True
    return d, False


@njit(cache=True)
def _shortest_rworth_nb(D, p, d0):
    N = d0.shape[0]
    d = d0.copy()
    for _ in range(N + 2):
        changed = False
        for a in range(N):
            best = d[a]
            for b in range(N):
                v = d[b] + D[a, b] * p - 1
                if v < best:
                    best = v
            if best != d[a]:
                d[a] = best
                changed = True
        if not changed:
            return d, True
    return d, False


@njit(cache=True)
def _decrement_nb(D, p, d0, rows):
    N = d0.shape[0]
    d = d0.copy()
    steps = 0
    limit = 64 * (N + 1) * (N + 1) * (p + 1) + 10_000
    while True:
        # strict violations cannot be repaired by the procedure
        for a in range(N):
            for b in range(N):
                if d[b] + D[a, b] * p < d[a]:
                    return d, steps, False
        chosen = -1
        any_se = False
        for a in range(N):
            se = False
            nw = False
            for b in range(N):
                diff = d[a] - d[b]
                if diff % p != 0:
                    continue
                q = diff // p
                if q >= D[a, b]:
                    se = True
                if q <= -D[b, a]:
                    nw = True
            if se:
                any_se = True
            if se and not nw:
                if chosen < 0 or d[a] < d[chosen] or (d[a] == d[chosen] and rows[a] < rows[chosen]):
                    chosen = a
        if chosen < 0:
            return d, steps, not any_se
        d[chosen] -= 1
        steps += 1
        if steps > limit:
            return d, steps, False


@njit(cache=True)
def _subset_heights_nb(below, n):
    size = 1 << n
    h = np.zeros(size, dtype=np.int64)
    for mask in range(1, size):
        minimal = 0
        for x in range(n):
            if (mask >> x) & 1 and (mask & below[x]) == 0:
                minimal |= 1 << x
        h[mask] = 1 + h[mask & ~minimal]
    return h


@njit(cache=True)
def _rs_row_counts_nb(values, n):
    L = values.shape[0]
    out = np.zeros((L, L, n), dtype=np.int64)
    tab = np.zeros((L, L), dtype=np.int64)
    lens = np.zeros(L, dtype=np.int64)
    counts = np.zeros((L, n), dtype=np.int64)
    nrows = 0
    for i in range(L):
        v = values[i]
        k = 0
        while True:
            if k == nrows:
                tab[k, 0] = v
                lens[k] = 1
                nrows += 1
                counts[k, (v - 1) % n] += 1
                break
            ln = lens[k]
            lo = 0
            hi = ln
            while lo < hi:
                mid = (lo + hi) // 2
                if tab[k, mid] < v:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == ln:
                tab[k, ln] = v
                lens[k] = ln + 1
                counts[k, (v - 1) % n] += 1
                break
            bumped = tab[k, lo]
            tab[k, lo] = v
            counts[k, (v - 1) % n] += 1
            counts[k, (bumped - 1) % n] -= 1
            v = bumped
            k += 1
        for r in range(nrows):
            for c in range(n):
                out[i, r, c] = counts[r, c]
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def nw_offsets(ra, ca, rb, cb, n: int) -> np.ndarray:
    if HAVE_NUMBA:
        return _nw_offsets_nb(_i64(ra), _i64(ca), _i64(rb), _i64(cb), int(n))
    return nw_offsets_np(ra, ca, rb, cb, int(n))


def longest_paths(D, m: int, init, fixed) -> tuple[np.ndarray, bool]:
    if HAVE_NUMBA:
        return _longest_paths_nb(_i64(D), int(m), _i64(init), np.ascontiguousarray(fixed, dtype=np.bool_))
    return longest_paths_np(_i64(D), int(m), init, fixed)


def shortest_rworth(D, p: int, d0) -> tuple[np.ndarray, bool]:
    if HAVE_NUMBA:
        return _shortest_rworth_nb(_i64(D), int(p), _i64(d0))
    return shortest_rworth_np(_i64(D), int(p), d0)


def decrement(D, p: int, d0, rows) -> tuple[np.ndarray, int, bool]:
    if HAVE_NUMBA:
        d, steps, ok = _decrement_nb(_i64(D), int(p), _i64(d0), _i64(rows))
        return d, int(steps), bool(ok)
    return decrement_np(_i64(D), int(p), d0, rows)


def subset_heights(below, n: int) -> np.ndarray:
    if HAVE_NUMBA:
        return _subset_heights_nb(_i64(below), int(n))
    return subset_heights_np(below, int(n))


def rs_row_counts(values, n: int) -> np.ndarray:
    if HAVE_NUMBA:
        return _rs_row_counts_nb(_i64(values), int(n))
    return rs_row_counts_np(values, int(n))


__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "NEG",
    "POS",
    "decrement",
    "longest_paths",
    "nw_offsets",
    "rs_row_counts",
    "shortest_rworth",
    "subset_heights",
]
