"""Enumeration harness and the theorem suites run by ``ambc verify``.

Every suite walks a finite family of inputs, checks one identity per input
and collects the failures.  Cases are visited in a fixed order, so the first
failure reported is the same on every run.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Iterator

from .asymptotic import stabilized_p
from .backward import psi
from .channels import (
    channel_numbering,
    distance,
    interlacing_collections,
    max_disjoint_antichains,
    southwest_channel,
)
from .errors import AMBCError, NotEnoughChannels
from .forward import OmegaTriple, forward_step, phi, phi_traced, phi_with_numbering_policy, standardizable
from .perm import PartialAffinePermutation, center_of_gravity
from .shi import shi_p
from .streams import offset_constants
from .weyl import dominant_representative, fiber_equivalent, is_dominant

SUITES = ("roundtrip", "shi", "weyl", "gravity", "asymptotic", "distalt")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[tuple[object, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, case: object, passed: bool, message: str = "") -> None:
        self.cases += 1
        if not passed:
            self.failures.append((case, message))

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: OK, {self.cases} cases"
        case, msg = self.failures[0]
        return f"{self.name}: FAIL, {len(self.failures)} of {self.cases} cases; first: {case} {msg}".rstrip()


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def enumerate_windows(n: int, shift_max: int) -> Iterator[PartialAffinePermutation]:
    """All windows ``sigma(i) + n k_i`` with ``sigma`` in ``S_n`` and ``|k_i| <= shift_max``."""
    shifts = range(-shift_max, shift_max + 1)
    for sigma in permutations(range(1, n + 1)):
        for ks in product(shifts, repeat=n):
            yield PartialAffinePermutation(n, tuple(s + n * k for s, k in zip(sigma, ks)))


def enumerate_cases(n_min: int, n_max: int, shift_max: int) -> Iterator[PartialAffinePermutation]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_windows(n, shift_max)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def enumerate_tabloids(shape: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All fillings of ``shape`` by ``1..n`` with increasing rows."""

    def go(remaining: tuple[int, ...], rows: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not rows:
            yield ()
            return
        for first in combinations(remaining, rows[0]):
            rest = tuple(x for x in remaining if x not in first)
            for tail in go(rest, rows[1:]):
                yield (first,) + tail

    yield from go(tuple(range(1, sum(shape) + 1)), shape)


def enumerate_triples(n: int, rho_max: int) -> Iterator[OmegaTriple]:
    for lam in partitions(n):
        tabs = list(enumerate_tabloids(lam))
        rhos = list(product(range(-rho_max, rho_max + 1), repeat=len(lam)))
        for P in tabs:
            for Q in tabs:
                for rho in rhos:
                    yield OmegaTriple(n, P, Q, rho)


def _rng() -> random.Random:
    return random.Random(int(os.environ.get("AMBC_SEED", "0")))


def random_window(rng: random.Random, n: int, shift_max: int) -> PartialAffinePermutation:
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return PartialAffinePermutation(n, tuple(s + n * rng.randint(-shift_max, shift_max) for s in sigma))


def _guard(check: Callable[[], tuple[bool, str]]) -> tuple[bool, str]:
    try:
        return check()
    except AMBCError as exc:
        return False, f"raised {type(exc).__name__}: {exc}"


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_roundtrip(cases: list[PartialAffinePermutation]) -> SuiteResult:
    """Psi(Phi(w)) = w, the image is dominant, and both numbering policies give the same tabloids."""
    res = SuiteResult("roundtrip")
    for w in cases:

        def check() -> tuple[bool, str]:
            t = phi(w)
            back = psi(t)
            if back != w:
                return False, f"Psi(Phi(w)) = {back}"
            if not is_dominant(t):
                return False, f"image {t} is not dominant"
            ne = phi_with_numbering_policy(w, "ne")
            if (ne.P, ne.Q) != (t.P, t.Q):
                return False, f"NE policy gives {ne}"
            return True, ""

        res.record(w, *_guard(check))
    return res


def suite_shi(cases: list[PartialAffinePermutation]) -> SuiteResult:
    res = SuiteResult("shi")
    for w in cases:

        def check() -> tuple[bool, str]:
            got, want = shi_p(w), phi(w).P
            return got == want, f"shi_p = {got}, Phi P = {want}"

        res.record(w, *_guard(check))
    return res


def suite_gravity(cases: list[PartialAffinePermutation]) -> SuiteResult:
    """Sum of rho is the center of gravity; finite permutations are exactly the standardizable, rho = 0 images."""
    res = SuiteResult("gravity")
    for w in cases:

        def check() -> tuple[bool, str]:
            t = phi(w)
            n = w.n
            if sum(t.rho) != center_of_gravity(w):
                return False, f"sum(rho) = {sum(t.rho)} but gravity = {center_of_gravity(w)}"
            if (sum(t.rho) == 0) != (sum(w.window) == n * (n + 1) // 2):
                return False, "zero weight sum does not match the window sum test"
            finite = sorted(w.window) == list(range(1, n + 1))
            recog = standardizable(t.P) and standardizable(t.Q) and all(r == 0 for r in t.rho)
            return finite == recog, f"finite={finite} but standardizable-and-zero={recog}"

        res.record(w, *_guard(check))
    return res


def suite_asymptotic(samples: int, n_max: int, shift_max: int, max_periods: int = 60) -> SuiteResult:
    res = SuiteResult("asymptotic")
    rng = _rng()
    for _ in range(samples):
        w = random_window(rng, rng.randint(1, n_max), shift_max)

        def check() -> tuple[bool, str]:
            got, _i0 = stabilized_p(w, max_periods)
            want = phi(w).P
            return got == want, f"stabilized {got}, Phi P = {want}"

        res.record(w, *_guard(check))
    return res


def suite_distalt(cases: list[PartialAffinePermutation]) -> SuiteResult:
    """Channel distances against weights, for every case with at least two disjoint channels."""
    res = SuiteResult("distalt")
    for w in cases:
        if w.is_empty or len(max_disjoint_antichains(w)) < 2:
            continue

        def check() -> tuple[bool, str]:
            try:
                Cs, Ds = interlacing_collections(w)
            except NotEnoughChannels:
                return False, "fewer than two disjoint channels after uncrossing"
            t, _steps = phi_traced(w)
            r, _s = offset_constants(t.P, t.Q, t.n)
            h12 = distance(w, Cs[0], Cs[1])
            want = t.rho[1] - t.rho[0] - r[1]
            if h12 != want:
                return False, f"h(C1,C2) = {h12} but rho2 - rho1 - r2 = {want}"
            nxt = _forward_image(w)
            for i in range(1, len(Cs) - 1):
                hc = distance(w, Cs[i], Cs[i + 1])
                hd = distance(nxt, Ds[i - 1], Ds[i])
                if hc != hd:
                    return False, f"h(C{i + 1},C{i + 2}) = {hc} but h(D{i},D{i + 1}) = {hd}"
            return True, ""

        res.record(w, *_guard(check))
    return res


def _forward_image(w: PartialAffinePermutation) -> PartialAffinePermutation:
    """The partial permutation left after one forward step with the SW channel numbering."""
    return forward_step(w, channel_numbering(w, southwest_channel(w)))[0]


def suite_weyl(n_max: int, rho_max: int = 2, fiber_samples: int = 200) -> SuiteResult:
    """Phi(Psi(P, Q, rho)) = (P, Q, dominant rho) over the grid, plus fiber checks on sampled pairs."""
    res = SuiteResult("weyl")
    by_pq: dict[tuple, list[OmegaTriple]] = {}
    for n in range(1, n_max + 1):
        for t in enumerate_triples(n, rho_max):

            def check() -> tuple[bool, str]:
                rep = dominant_representative(t)
                got = phi(psi(t))
                want = OmegaTriple(t.n, t.P, t.Q, rep)
                if got != want:
                    return False, f"Phi(Psi) = {got}, expected {want}"
                if is_dominant(t) != (rep == t.rho):
                    return False, "dominance disagrees with the dominant representative"
                return True, ""

            res.record(t, *_guard(check))
            by_pq.setdefault((t.n, t.P, t.Q), []).append(t)
    rng = _rng()
    keys = sorted(by_pq)
    for _ in range(fiber_samples if keys else 0):
        group = by_pq[rng.choice(keys)]
        a, b = rng.choice(group), rng.choice(group)
        # half of the samples pair a weight with a member of its own orbit
        if rng.random() < 0.5:
            rep_a = dominant_representative(a)
            same = [t for t in group if dominant_representative(t) == rep_a]
            b = rng.choice(same)

        def fiber_check() -> tuple[bool, str]:
            equiv = fiber_equivalent(a.P, a.Q, a.rho, b.rho, a.n)
            same_w = psi(a) == psi(b)
            return equiv == same_w, f"vs {b}: fiber_equivalent={equiv}, same Psi={same_w}"

        res.record(a, *_guard(fiber_check))
    return res


def run_suites(
    names: list[str],
    n_max: int,
    shift_max: int,
    n_min: int | None = None,
    rho_max: int = 2,
    samples: int = 200,
) -> list[SuiteResult]:
    n_lo = n_max if n_min is None else n_min
    cases = list(enumerate_cases(n_lo, n_max, shift_max))
    out = []
    for name in names:
        if name == "roundtrip":
            out.append(suite_roundtrip(cases))
        elif name == "shi":
            out.append(suite_shi(cases))
        elif name == "gravity":
            out.append(suite_gravity(cases))
        elif name == "distalt":
            out.append(suite_distalt(cases))
        elif name == "weyl":
            out.append(suite_weyl(n_max, rho_max))
        elif name == "asymptotic":
            out.append(suite_asymptotic(samples, n_max, shift_max))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out


__all__ = [
    "SUITES",
    "SuiteResult",
    "enumerate_cases",
    "enumerate_tabloids",
    "enumerate_triples",
    "enumerate_windows",
    "partitions",
    "random_window",
    "run_suites",
    "suite_asymptotic",
    "suite_distalt",
    "suite_gravity",
    "suite_roundtrip",
    "suite_shi",
    "suite_weyl",
]
