"""Time the hot kernels under the numba and pure-numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each backend runs in its own subprocess (``AMBC_NUMBA=1`` and ``AMBC_NUMBA=0``)
because the backend is fixed at import time.  Numba compilation is excluded by
a warm-up call before timing.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    import numpy as np

    from ambc import _kernels as K
    from ambc.backward import stream_numbering
    from ambc.channels import channel_numbering, southwest_channel
    from ambc.forward import forward_step, phi
    from ambc.numbering import offset_matrix
    from ambc.verify import random_window

    rng = random.Random(0)
    pairs = []
    while len(pairs) < 200:
        w = random_window(rng, rng.randint(4, 9), 3)
        nxt, s = forward_step(w, channel_numbering(w, southwest_channel(w)))
        if nxt.is_empty:
            continue
        d0 = stream_numbering(nxt, s)
        D = offset_matrix(d0.cells, d0.cells, nxt.n)
        rows = np.asarray([c.row for c in d0.cells], dtype=np.int64)
        pairs.append((D, d0.period, np.asarray(d0.values, dtype=np.int64), rows))
    long_seq = [random_window(rng, 8, 4) for _ in range(20)]
    windows = [random_window(rng, rng.randint(4, 8), 3) for _ in range(150)]

    def decrement():
        for D, p, d0, rows in pairs:
            K.decrement(D, p, d0, rows)

    def rworth():
        for D, p, d0, _rows in pairs:
            K.shortest_rworth(D, p, d0)

    def row_counts():
        for w in long_seq:
            K.rs_row_counts([w(j) for j in range(1, 8 * 60)], w.n)

    def forward_map():
        phi.cache_clear()
        for w in windows:
            phi(w)

    return {"decrement": decrement, "rworth": rworth, "rs_row_counts": row_counts, "phi (end to end)": forward_map}


def _worker(repeat: int) -> None:
    from ambc import BACKEND

    results = {}
    for name, fn in _workloads().items():
        fn()  # warm-up, includes compilation
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = best
    print(json.dumps({"backend": BACKEND, "results": results}))


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        _worker(args.repeat)
        return
    runs = {}
    for flag in ("1", "0"):
        env = dict(os.environ, AMBC_NUMBA=flag)
        out = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        data = json.loads(out.stdout.strip().splitlines()[-1])
        runs[data["backend"]] = data["results"]
    if "numba" not in runs:
        print("numba is not installed; only the numpy path was timed")
    names = list(next(iter(runs.values())))
    print(f"{'kernel':<18} {'numba (ms)':>11} {'numpy (ms)':>11} {'speed-up':>9}")
    for name in names:
        nb = runs.get("numba", {}).get(name)
        np_ = runs["numpy"][name]
        speed = f"{np_ / nb:8.1f}x" if nb else "      n/a"
        nb_text = f"{nb * 1e3:11.2f}" if nb else f"{'n/a':>11}"
        print(f"{name:<18} {nb_text} {np_ * 1e3:11.2f} {speed}")


if __name__ == "__main__":
    main()
