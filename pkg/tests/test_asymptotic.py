import random

import numpy as np
import pytest

from ambc.asymptotic import insert_prefix, residue_tabloids, row_rates, stabilized_p
from ambc.errors import AMBCError, NoStabilization
from ambc.forward import phi
from ambc.perm import inverse, parse_window, residue
from ambc.verify import random_window

W = parse_window("[-4,5,-2,7,3,6]")


def _plain_residue_tabloid(w, i):
    """Insert ``w(1..i)`` by explicit bumping and reduce each row modulo ``n``."""
    rows: list[list[int]] = []
    for x in (w(j) for j in range(1, i + 1)):
        for row in rows:
            bigger = [v for v in row if v > x]
            if not bigger:
                row.append(x)
                break
            y = min(bigger)
            row[row.index(y)] = x
            x = y
        else:
            rows.append([x])
    return tuple(tuple(sorted(residue(v, w.n) for v in r)) for r in rows)


def test_worked_prefixes():
    _P, bar13 = insert_prefix(W, 13)
    assert bar13 == ((2, 2, 2, 4, 4, 6), (1, 3, 3, 6), (1, 5, 5))
    _P, bar7 = insert_prefix(W, 7)
    assert bar7 == ((2, 2, 4, 6), (1, 3), (5,))


def test_worked_stabilization():
    P, i0 = stabilized_p(W)
    assert P == ((2, 4), (3, 6), (1, 5))
    assert i0 == 6
    assert P == phi(W).P


def test_counts_kernel_matches_plain_insertion():
    rng = random.Random(41)
    for _ in range(60):
        w = random_window(rng, rng.randint(1, 5), 2)
        counts = residue_tabloids(w, 4 * w.n)
        for i in range(1, 4 * w.n + 1):
            want = _plain_residue_tabloid(w, i)
            got = tuple(
                tuple(r + 1 for r in range(w.n) for _ in range(int(counts[i - 1, k, r])))
                for k in range(counts.shape[1])
            )
            assert tuple(row for row in got if row) == want


def test_random_windows_stabilize_to_both_tabloids():
    rng = random.Random(42)
    for _ in range(150):
        w = random_window(rng, rng.randint(1, 5), 3)
        t = phi(w)
        assert stabilized_p(w)[0] == t.P
        assert stabilized_p(inverse(w))[0] == t.Q


def test_row_rates_approach_the_shape():
    w = W
    rates = row_rates(w, 600)
    per_row = rates.sum(axis=1)
    assert np.allclose(per_row[:3], [2, 2, 2], atol=0.1)


def test_errors():
    with pytest.raises(AMBCError):
        insert_prefix(parse_window("[1,_]"), 3)
    with pytest.raises(ValueError):
        insert_prefix(W, 0)
    with pytest.raises(NoStabilization):
        stabilized_p(W, max_periods=0)  # stabilizes only from i = 6
