"""The compiled kernels and their numpy references give identical results."""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from ambc import _kernels as K
from ambc.backward import stream_numbering
from ambc.channels import channel_numbering, southwest_channel
from ambc.forward import forward_step
from ambc.numbering import offset_matrix
from ambc.verify import random_window


def _pairs(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        w = random_window(rng, rng.randint(2, 7), 2)
        nxt, s = forward_step(w, channel_numbering(w, southwest_channel(w)))
        yield w, nxt, s


def test_nw_offsets():
    rng = np.random.default_rng(1)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        a = rng.integers(-20, 20, size=(2, int(rng.integers(0, 8))))
        b = rng.integers(-20, 20, size=(2, int(rng.integers(0, 8))))
        want = K.nw_offsets_np(a[0], a[1], b[0], b[1], n)
        got = K._nw_offsets_nb(K._i64(a[0]), K._i64(a[1]), K._i64(b[0]), K._i64(b[1]), n)
        assert np.array_equal(want, got)


def test_backward_kernels():
    for _w, nxt, s in _pairs(200, 2):
        if nxt.is_empty:
            continue
        d0 = stream_numbering(nxt, s)
        D = K._i64(offset_matrix(d0.cells, d0.cells, nxt.n))
        start = K._i64(d0.values)
        rows = K._i64([c.row for c in d0.cells])
        a = K.decrement_np(D, d0.period, start.copy(), rows)
        b = K._decrement_nb(D, d0.period, start.copy(), rows)
        assert np.array_equal(a[0], b[0]) and int(a[1]) == int(b[1]) and bool(a[2]) == bool(b[2])
        c = K.shortest_rworth_np(D, d0.period, start.copy())
        e = K._shortest_rworth_nb(D, d0.period, start.copy())
        assert np.array_equal(c[0], e[0]) and bool(c[1]) == bool(e[1])


def test_longest_paths():
    for w, _nxt, _s in _pairs(150, 3):
        reps = w.representatives()
        c = southwest_channel(w)
        d = channel_numbering(w, c)
        D = K._i64(offset_matrix(reps, reps, w.n))
        init = np.full(len(reps), K.NEG, dtype=np.int64)
        fixed = np.zeros(len(reps), dtype=np.bool_)
        init[0], fixed[0] = d.values[0], True
        a = K.longest_paths_np(D, c.density, init.copy(), fixed)
        b = K._longest_paths_nb(D, c.density, init.copy(), fixed)
        assert np.array_equal(a[0], b[0]) and bool(a[1]) == bool(b[1])


def test_subset_heights_and_row_counts():
    rng = np.random.default_rng(4)
    for _ in range(50):
        N = int(rng.integers(0, 9))
        below = np.zeros(N, dtype=np.int64)
        for b in range(N):
            for a in range(b):
                if rng.random() < 0.3:
                    below[b] |= 1 << a
        assert np.array_equal(K.subset_heights_np(below, N), K._subset_heights_nb(below, N))
        n = int(rng.integers(1, 6))
        values = rng.integers(-30, 30, size=int(rng.integers(1, 40)))
        assert np.array_equal(K.rs_row_counts_np(values, n), K._rs_row_counts_nb(K._i64(values), n))


@pytest.mark.parametrize("flag, backend", [("0", "numpy"), ("off", "numpy")])
def test_environment_switch(flag, backend):
    env = dict(os.environ, AMBC_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "import ambc; print(ambc.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == backend


def test_default_backend():
    assert K.BACKEND == ("numba" if K.HAVE_NUMBA else "numpy")
